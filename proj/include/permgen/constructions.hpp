#pragma once

// Benchmark and test groups, and a small language for describing them.
//
//   spec     := atom | combiner
//   atom     := "sym(" int ")" | "alt(" int ")" | "cyclic(" int ")"
//             | "dihedral(" int ")" | "psl_3_2" | "q8"
//             | "from_file(" string ")"
//             | "perms(" int { "," string } ")"
//   combiner := "direct_product(" spec { "," spec } ")"
//             | "direct_power(" spec "," int ")"
//             | "wreath(" spec "," spec ")"
//             | "crown_inversion(" int "," int ")"
//   string   := '"' { any character except '"' } '"'
//
// Group files: a line "degree n", then one generator per line in cycle
// notation. Text after '#' is a comment; blank lines are ignored.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permgen/group.hpp"

namespace permgen {

struct GroupSpec {
  enum class Kind {
    Sym,
    Alt,
    Cyclic,
    Dihedral,
    Psl32,
    Q8,
    FromFile,
    Perms,
    DirectProduct,
    DirectPower,
    Wreath,
    CrownInversion,
  };

  Kind kind = Kind::Sym;
  std::vector<std::uint64_t> numbers;
  /// File path for FromFile; cycle strings for Perms.
  std::vector<std::string> strings;
  std::vector<GroupSpec> children;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Errors: SyntaxError (as ParseError, with the offset).
GroupSpec parse_spec(std::string_view text);
/// Canonical text; parse_spec(print_spec(s)) == s.
std::string print_spec(const GroupSpec& spec);

/// Errors: BadGenerators, FileNotFound, SyntaxError, InvalidArgument.
Group elaborate(const GroupSpec& spec);
inline Group elaborate(std::string_view text) { return elaborate(parse_spec(text)); }

Group symmetric_group(std::size_t n);
Group alternating_group(std::size_t n);
Group cyclic_group(std::size_t n);
/// Order 2n on n points for n >= 3; D_1 = C_2 on 2 points, D_2 = V_4 on 4.
Group dihedral_group(std::size_t n);
/// L_3(2) on the seven points of the Fano plane.
Group psl_3_2();
/// Quaternion group in its regular action on 8 points.
Group quaternion_group();

/// Factors act on consecutive disjoint blocks of points.
Group direct_product(const std::vector<Group>& factors);
Group direct_power(const Group& g, std::size_t k);
/// G wr H in the imprimitive action on deg(G) * deg(H) points: copies of G
/// on the blocks, H permuting the blocks.
Group wreath_product(const Group& g, const Group& h);
/// p^k : 2 on p*k points: a p-cycle on each block and one involution
/// inverting all of them at once.
Group crown_inversion(std::size_t p, std::size_t k);

Group read_group_file(const std::string& path);
Group parse_group_text(std::string_view text);

}  // namespace permgen
