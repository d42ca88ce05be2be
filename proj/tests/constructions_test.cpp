#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include "permgen/constructions.hpp"
#include "permgen/errors.hpp"
#include "support/brute.hpp"

namespace permgen {
namespace {

using testing::brute_order;

BigInt pow_big(unsigned base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

TEST(Families, SmallOrdersAgreeWithBruteForce) {
  struct Row {
    Group g;
    std::size_t order;
  };
  const Row rows[] = {
      {symmetric_group(1), 1},  {symmetric_group(5), 120}, {alternating_group(2), 1},
      {alternating_group(4), 12}, {alternating_group(5), 60}, {alternating_group(6), 360},
      {cyclic_group(1), 1},     {cyclic_group(12), 12},    {dihedral_group(1), 2},
      {dihedral_group(2), 4},   {dihedral_group(5), 10},   {dihedral_group(6), 12},
      {psl_3_2(), 168},         {quaternion_group(), 8},
  };
  for (const auto& row : rows) {
    EXPECT_EQ(row.g.order(), row.order);
    EXPECT_EQ(brute_order(row.g.generators(), row.g.degree()), row.order);
  }
}

TEST(Families, QuaternionIsNotDihedral) {
  Group q = quaternion_group();
  std::size_t involutions = 0;
  for (const auto& x : testing::brute_elements(q.generators(), 8))
    if (!x.is_identity() && (x * x).is_identity()) ++involutions;
  EXPECT_EQ(involutions, 1u);
}

TEST(Families, TableGroups) {
  Group a = elaborate("direct_power(alt(5),19)");
  EXPECT_EQ(a.degree(), 95u);
  EXPECT_EQ(a.order(), pow_big(60, 19));
  Group c = elaborate("crown_inversion(3,30)");
  EXPECT_EQ(c.degree(), 90u);
  EXPECT_EQ(c.order(), 2 * pow_big(3, 30));
  Group l = elaborate("direct_power(psl_3_2, 2)");
  EXPECT_EQ(l.degree(), 14u);
  EXPECT_EQ(l.order(), 168 * 168);
}

TEST(Families, ProductsAndWreaths) {
  Group w = elaborate("wreath(cyclic(3), sym(2))");
  EXPECT_EQ(w.degree(), 6u);
  EXPECT_EQ(w.order(), 18);
  EXPECT_EQ(brute_order(w.generators(), 6), 18u);
  Group p = elaborate("direct_product(alt(5), cyclic(2))");
  EXPECT_EQ(p.degree(), 7u);
  EXPECT_EQ(p.order(), 120);
  Group s = elaborate("wreath(sym(3), cyclic(4))");
  EXPECT_EQ(s.order(), pow_big(6, 4) * 4);
  Group t = elaborate("wreath(alt(4), sym(3))");
  EXPECT_EQ(t.degree(), 12u);
  EXPECT_EQ(t.order(), pow_big(12, 3) * 6);
}

TEST(Families, WreathOverIntransitiveTop) {
  // Top group fixes block 3; the base must still act there.
  Group w = wreath_product(cyclic_group(2), Group(3, {parse_cycles("(1 2)", 3)}));
  EXPECT_EQ(w.degree(), 6u);
  EXPECT_EQ(w.order(), 16);
}

TEST(Families, CrownsSmall) {
  for (unsigned k = 1; k <= 4; ++k) {
    Group c = crown_inversion(3, k);
    EXPECT_EQ(c.order(), 2 * pow_big(3, k));
    EXPECT_EQ(brute_order(c.generators(), c.degree()), 2 * std::size_t(pow_big(3, k)));
  }
  EXPECT_EQ(crown_inversion(5, 3).order(), 2 * 125);
}

TEST(Families, DirectProductDegreesAdd) {
  Group g = direct_product({symmetric_group(3), dihedral_group(4), quaternion_group()});
  EXPECT_EQ(g.degree(), 15u);
  EXPECT_EQ(g.order(), 6 * 8 * 8);
}

TEST(Spec, RoundTrip) {
  const char* texts[] = {
      "sym(4)",
      "alt(5)",
      "psl_3_2",
      "q8",
      "direct_power(alt(5), 20)",
      "wreath(cyclic(3), sym(2))",
      "direct_product(alt(5), cyclic(2), dihedral(4))",
      "crown_inversion(3, 5)",
      "perms(4, \"(1 2 3 4)\", \"(1 3)\")",
      "from_file(\"groups/x.txt\")",
      "direct_product(direct_power(psl_3_2, 3), crown_inversion(3, 10))",
  };
  for (const char* t : texts) {
    GroupSpec s = parse_spec(t);
    EXPECT_EQ(print_spec(s), t);
    EXPECT_EQ(parse_spec(print_spec(s)), s);
  }
  EXPECT_EQ(print_spec(parse_spec("  direct_power( alt( 5 ) ,20 ) ")), "direct_power(alt(5), 20)");
  EXPECT_EQ(parse_spec("q8()"), parse_spec("q8"));
}

TEST(Spec, SyntaxErrorsCarryPosition) {
  struct Row {
    const char* text;
    std::size_t position;
  };
  const Row rows[] = {
      {"sym(4", 5},        {"foo(3)", 0},         {"sym(x)", 4},
      {"alt(5))", 6},      {"direct_power(alt(5))", 19}, {"perms(3, (1 2))", 9},
      {"from_file(\"abc", 10}, {"", 0},
  };
  for (const auto& row : rows) {
    try {
      parse_spec(row.text);
      ADD_FAILURE() << row.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << row.text;
      EXPECT_EQ(e.position(), row.position) << row.text;
    }
  }
}

TEST(Spec, RawGenerators) {
  Group g = elaborate("perms(5, \"(1 2 3 4 5)\", \"(1 2)\")");
  EXPECT_EQ(g.order(), 120);
  try {
    elaborate("perms(3, \"(1 4)\")");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointOutOfRange);
  }
}

TEST(GroupFile, ParsesCommentsAndBlankLines) {
  Group g = parse_group_text(
      "# the quaternion group\n"
      "degree 8\n"
      "\n"
      "(1 2 5 6)(3 8 7 4)   # i\n"
      "(1 3 5 7)(2 4 6 8)\n");
  EXPECT_EQ(g.degree(), 8u);
  EXPECT_EQ(g.order(), 8);
}

TEST(GroupFile, Errors) {
  EXPECT_THROW(parse_group_text("(1 2)\n"), ParseError);
  EXPECT_THROW(parse_group_text("# nothing\n"), ParseError);
  try {
    parse_group_text("degree 3\n(1 2)\n(1 5)\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointOutOfRange);
    EXPECT_EQ(e.position(), 18u);
  }
  try {
    elaborate("from_file(\"/nonexistent/group.txt\")");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FileNotFound);
  }
}

TEST(GroupFile, FromFile) {
  const std::string path = ::testing::TempDir() + "permgen_s4.txt";
  {
    std::ofstream out(path);
    out << "degree 4\n(1 2 3 4)\n(1 2)\n";
  }
  GroupSpec spec = parse_spec("from_file(\"" + path + "\")");
  EXPECT_EQ(elaborate(spec).order(), 24);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace permgen
