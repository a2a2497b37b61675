#include <doctest.h>

#include <algorithm>
#include <functional>

#include "lierigid/grading.hpp"
#include "lierigid/rootsys.hpp"

using namespace lierigid;

namespace {

// Independent root count: |Phi+| per simple type.
int expected_positive_roots(char type, int r) {
  switch (type) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

}  // namespace

TEST_CASE("positive root counts and highest roots") {
  for (const auto& t : {"A1", "A4", "B2", "B5", "C3", "C6", "D4", "D7", "E6", "E7", "E8", "F4", "G2"}) {
    const RootSystem rs = root_system(t);
    const auto f = rs.factors().front();
    CHECK(rs.num_positive_roots() == expected_positive_roots(f.type, f.rank));
  }
  const RootSystem g2 = root_system("G2");
  CHECK(g2.highest_root(0) == Root{3, 2});
  CHECK(root_system("E8").highest_root(0) == Root{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(root_system("F4").highest_root(0) == Root{2, 3, 4, 2});
  CHECK(root_system("B3").highest_root(0) == Root{1, 2, 2});
  CHECK(root_system("C3").highest_root(0) == Root{2, 2, 1});
}

TEST_CASE("roots are ordered by height") {
  const RootSystem rs = root_system("F4");
  for (int k = 1; k < rs.num_positive_roots(); ++k) CHECK(rs.height(k - 1) <= rs.height(k));
  CHECK(rs.positive_roots().front() == Root{1, 0, 0, 0});
}

TEST_CASE("type parsing") {
  CHECK(root_system("A3xA1").rank() == 4);
  CHECK(root_system("a2").rank() == 2);
  CHECK(root_system("D2").factors().size() == 2);
  CHECK_THROWS_AS(root_system("E9"), Error);
  CHECK_THROWS_AS(root_system("Q3"), Error);
  CHECK_THROWS_AS(root_system("G3"), Error);
  CHECK_THROWS_AS(root_system(""), Error);
}

TEST_CASE("cartan conventions") {
  const RootSystem b2 = root_system("B2");
  // alpha_2 short: <alpha_1^vee, alpha_2> = -1, <alpha_2^vee, alpha_1> = -2
  CHECK(b2.cartan(0, 1) == -1);
  CHECK(b2.cartan(1, 0) == -2);
  const RootSystem g2 = root_system("G2");
  // alpha_1 short
  CHECK(g2.cartan(0, 1) == -3);
  CHECK(g2.cartan(1, 0) == -1);
}

TEST_CASE("weights in the root basis") {
  const RootSystem a2 = root_system("A2");
  const auto c = weight_in_root_basis(a2, fundamental_weight(a2, 1));
  CHECK(c[0] == Rational(2, 3));
  CHECK(c[1] == Rational(1, 3));
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim(root_system("A2"), parse_weight(root_system("A2"), "1,1")) == 8);
  CHECK(weyl_dim(root_system("G2"), parse_weight(root_system("G2"), "1,0")) == 7);
  CHECK(weyl_dim(root_system("G2"), parse_weight(root_system("G2"), "0,1")) == 14);
  CHECK(weyl_dim(root_system("E8"), parse_weight(root_system("E8"), "0,0,0,0,0,0,0,1")) == 248);
  CHECK(weyl_dim(root_system("E7"), parse_weight(root_system("E7"), "0,0,0,0,0,0,1")) == 56);
  CHECK(weyl_dim(root_system("F4"), parse_weight(root_system("F4"), "0,0,0,1")) == 26);
  CHECK(weyl_dim(root_system("B3"), parse_weight(root_system("B3"), "0,0,1")) == 8);
  CHECK(weyl_dim(root_system("A1xA1"), parse_weight(root_system("A1xA1"), "1x1")) == 4);
}

TEST_CASE("weight parsing") {
  const RootSystem rs = root_system("A2xA1");
  CHECK(parse_weight(rs, "1,0x2") == Weight::from_ints({1, 0, 2}));
  CHECK(parse_weight(rs, "1,0,2") == Weight::from_ints({1, 0, 2}));
  CHECK_THROWS_AS(parse_weight(rs, "1,0"), Error);
  CHECK_FALSE(parse_weight(rs, "-1,0,0").dominant_integral());
  CHECK(format_weight(rs, parse_weight(rs, "1,0,2")) == "1,0x2");
  for (const char* text : {"1,0x2", "1/2,0x-3"}) CHECK(format_weight(rs, parse_weight(rs, text)) == text);
  CHECK(format_weight(root_system("G2"), parse_weight(root_system("G2"), "0,1")) == "0,1");
}

TEST_CASE("dual weight") {
  const RootSystem a3 = root_system("A3");
  CHECK(dual_weight(a3, Weight::from_ints({1, 0, 0})) == Weight::from_ints({0, 0, 1}));
  const RootSystem d5 = root_system("D5");
  CHECK(dual_weight(d5, Weight::from_ints({0, 0, 0, 1, 0})) == Weight::from_ints({0, 0, 0, 0, 1}));
  const RootSystem d4 = root_system("D4");
  CHECK(dual_weight(d4, Weight::from_ints({0, 0, 1, 0})) == Weight::from_ints({0, 0, 1, 0}));
  const RootSystem e6 = root_system("E6");
  CHECK(dual_weight(e6, Weight::from_ints({1, 0, 0, 0, 0, 0})) == Weight::from_ints({0, 0, 0, 0, 0, 1}));
  CHECK(dual_weight(e6, Weight::from_ints({0, 0, 1, 0, 0, 0})) == Weight::from_ints({0, 0, 0, 0, 1, 0}));
}

TEST_CASE("grading of G2 by the long root node") {
  const GradingProfile gp = grading_element(root_system("G2"), {2});
  CHECK(gp.max_grade == 2);
  CHECK(gp.g_dims == std::map<int, int>{{-2, 1}, {-1, 4}, {0, 4}, {1, 4}, {2, 1}});
  CHECK(gp.dim_g_minus() == 5);
}

TEST_CASE("q values") {
  auto q = [](const char* t, const char* w) {
    const RootSystem rs = root_system(t);
    const Weight pi = parse_weight(rs, w);
    return q_value(rs, pi.support(), pi);
  };
  CHECK(q("A2", "1,1") == 4);
  CHECK(q("G2", "0,1") == 4);
  CHECK(q("A1xA1", "1x1") == 2);
  CHECK(q("B2", "1,0") == 2);
  CHECK(q("B3", "0,0,1") == 3);
  CHECK(q("B3", "0,1,0") == 4);
  CHECK(q("E8", "0,0,0,1,0,0,0,0") == 60);
  const RootSystem a2 = root_system("A2");
  CHECK_THROWS_AS(q_value(a2, {1}, Weight::from_ints({1, 1})), Error);
  CHECK_THROWS_AS(grading_element(a2, {}), Error);
  CHECK_THROWS_AS(grading_element(a2, {3}), Error);
}

TEST_CASE("symmetric powers of g_+ against monomial enumeration") {
  const GradingProfile gp = grading_element(root_system("G2"), {2});
  // generators of g_+ with their degrees
  std::vector<int> degrees;
  for (int g : gp.root_grades)
    if (g > 0) degrees.push_back(g);
  for (int d = 0; d <= 6; ++d) {
    // count multisets of generators with total degree d
    std::function<long(std::size_t, int)> count = [&](std::size_t from, int left) -> long {
      if (left == 0) return 1;
      long total = 0;
      for (std::size_t k = from; k < degrees.size(); ++k)
        if (degrees[k] <= left) total += count(k, left - degrees[k]);
      return total;
    };
    CHECK(sym_graded_dims(gp, d) == count(0, d));
  }
}
