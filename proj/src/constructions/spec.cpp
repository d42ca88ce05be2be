#include <cctype>
#include <charconv>

#include "permgen/constructions.hpp"
#include "permgen/errors.hpp"

namespace permgen {
namespace {

using Kind = GroupSpec::Kind;

struct Shape {
  Kind kind;
  const char* name;
};

constexpr Shape kShapes[] = {
    {Kind::Sym, "sym"},
    {Kind::Alt, "alt"},
    {Kind::Cyclic, "cyclic"},
    {Kind::Dihedral, "dihedral"},
    {Kind::Psl32, "psl_3_2"},
    {Kind::Q8, "q8"},
    {Kind::FromFile, "from_file"},
    {Kind::Perms, "perms"},
    {Kind::DirectProduct, "direct_product"},
    {Kind::DirectPower, "direct_power"},
    {Kind::Wreath, "wreath"},
    {Kind::CrownInversion, "crown_inversion"},
};

const char* name_of(Kind kind) {
  for (const auto& s : kShapes)
    if (s.kind == kind) return s.name;
  return "?";
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorKind::SyntaxError, pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a group name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected '\"'");
    const std::size_t close = text_.find('"', pos_ + 1);
    if (close == std::string_view::npos) fail("unterminated string");
    std::string s(text_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return s;
  }

  GroupSpec parse_spec() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string name = identifier();
    GroupSpec spec;
    bool known = false;
    for (const auto& s : kShapes)
      if (name == s.name) {
        spec.kind = s.kind;
        known = true;
      }
    if (!known) {
      pos_ = start;
      fail("unknown group '" + name + "'");
    }
    switch (spec.kind) {
      case Kind::Psl32:
      case Kind::Q8:
        // Bare names; an empty argument list is tolerated.
        if (accept('(')) expect(')');
        return spec;
      case Kind::Sym:
      case Kind::Alt:
      case Kind::Cyclic:
      case Kind::Dihedral:
        expect('(');
        spec.numbers.push_back(number());
        break;
      case Kind::FromFile:
        expect('(');
        spec.strings.push_back(quoted());
        break;
      case Kind::Perms:
        expect('(');
        spec.numbers.push_back(number());
        while (accept(',')) spec.strings.push_back(quoted());
        break;
      case Kind::DirectProduct:
        expect('(');
        spec.children.push_back(parse_spec());
        while (accept(',')) spec.children.push_back(parse_spec());
        break;
      case Kind::DirectPower:
        expect('(');
        spec.children.push_back(parse_spec());
        expect(',');
        spec.numbers.push_back(number());
        break;
      case Kind::Wreath:
        expect('(');
        spec.children.push_back(parse_spec());
        expect(',');
        spec.children.push_back(parse_spec());
        break;
      case Kind::CrownInversion:
        expect('(');
        spec.numbers.push_back(number());
        expect(',');
        spec.numbers.push_back(number());
        break;
    }
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t as_size(std::uint64_t v) { return static_cast<std::size_t>(v); }

}  // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string print_spec(const GroupSpec& spec) {
  std::string out = name_of(spec.kind);
  if (spec.kind == Kind::Psl32 || spec.kind == Kind::Q8) return out;
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  auto quote = [](const std::string& s) { return '"' + s + '"'; };
  switch (spec.kind) {
    case Kind::FromFile:
      sep();
      out += quote(spec.strings.at(0));
      break;
    case Kind::Perms:
      sep();
      out += std::to_string(spec.numbers.at(0));
      for (const auto& s : spec.strings) {
        sep();
        out += quote(s);
      }
      break;
    default:
      for (const auto& c : spec.children) {
        sep();
        out += print_spec(c);
      }
      for (auto n : spec.numbers) {
        sep();
        out += std::to_string(n);
      }
  }
  out += ')';
  return out;
}

Group elaborate(const GroupSpec& spec) {
  switch (spec.kind) {
    case Kind::Sym:
      return symmetric_group(as_size(spec.numbers.at(0)));
    case Kind::Alt:
      return alternating_group(as_size(spec.numbers.at(0)));
    case Kind::Cyclic:
      return cyclic_group(as_size(spec.numbers.at(0)));
    case Kind::Dihedral:
      return dihedral_group(as_size(spec.numbers.at(0)));
    case Kind::Psl32:
      return psl_3_2();
    case Kind::Q8:
      return quaternion_group();
    case Kind::FromFile:
      return read_group_file(spec.strings.at(0));
    case Kind::Perms: {
      const std::size_t degree = as_size(spec.numbers.at(0));
      std::vector<Permutation> gens;
      for (const auto& s : spec.strings) gens.push_back(parse_cycles(s, degree));
      return Group(degree, std::move(gens));
    }
    case Kind::DirectProduct: {
      std::vector<Group> factors;
      for (const auto& c : spec.children) factors.push_back(elaborate(c));
      return direct_product(factors);
    }
    case Kind::DirectPower:
      return direct_power(elaborate(spec.children.at(0)), as_size(spec.numbers.at(0)));
    case Kind::Wreath:
      return wreath_product(elaborate(spec.children.at(0)), elaborate(spec.children.at(1)));
    case Kind::CrownInversion:
      return crown_inversion(as_size(spec.numbers.at(0)), as_size(spec.numbers.at(1)));
  }
  throw Error(ErrorKind::InternalInconsistency, "unhandled group kind");
}

}  // namespace permgen
