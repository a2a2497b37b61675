#include <doctest.h>

#include "lierigid/rigidity.hpp"

using namespace lierigid;

namespace {

RigidityVerdict verdict(const char* type, const char* weight) {
  const RootSystem rs = root_system(type);
  const Weight pi = parse_weight(rs, weight);
  return rigidity_order(rs, pi.support(), pi);
}

}  // namespace

TEST_CASE("factor conditions") {
  auto one = [](const char* type, NodeSet j) { return factor_conditions(root_system(type), j).front(); };
  CHECK(one("B3", {1}).is_quadric_type);
  CHECK_FALSE(one("B3", {1}).is_A_with_extreme_node);
  CHECK_FALSE(one("A4", {2}).is_quadric_type);
  CHECK_FALSE(one("A4", {2}).is_A_with_extreme_node);
  CHECK(one("A3", {2}).is_quadric_type);
  CHECK_FALSE(one("A3", {2}).is_A_with_extreme_node);
  CHECK(one("D3", {2}).is_A_with_extreme_node);
  CHECK(one("C2", {2}).is_quadric_type);
  CHECK_FALSE(one("C2", {1}).is_quadric_type);
  CHECK(one("D5", {1}).is_quadric_type);
  CHECK(one("A1", {1}).is_A_with_extreme_node);
  CHECK(one("B1", {1}).is_A_with_extreme_node);
  CHECK(one("A5", {5}).is_A_with_extreme_node);
  CHECK(factor_conditions(root_system("A2xB3"), {3}).size() == 1);
  CHECK_THROWS_AS(factor_conditions(root_system("A2"), {}), Error);
}

TEST_CASE("rigidity verdicts") {
  const auto b3 = verdict("B3", "0,1,0");
  CHECK(b3.clause_a_applies);
  CHECK(b3.order == 4);
  const auto g2 = verdict("G2", "0,1");
  CHECK(g2.clause_a_applies);
  CHECK(g2.order == 4);
  const auto a2 = verdict("A2", "1,1");
  CHECK_FALSE(a2.clause_a_applies);
  CHECK_FALSE(a2.clause_b_applies);
  CHECK_FALSE(a2.order.has_value());
  const auto quadric = verdict("B3", "1,0,0");
  CHECK_FALSE(quadric.clause_a_applies);
  CHECK(quadric.clause_b_applies);
  CHECK(quadric.order == quadric.q + 1);
  CHECK_THROWS_AS(rigidity_order(root_system("B3"), {1}, Weight::from_ints({0, 1, 0})), Error);
}

TEST_CASE("verdict is invariant under factor permutation") {
  const auto a = verdict("B3xG2", "0,1,0x0,1");
  const auto b = verdict("G2xB3", "0,1x0,1,0");
  CHECK(a.q == b.q);
  CHECK(a.order == b.order);
  CHECK(a.clause_a_applies == b.clause_a_applies);
  const auto c = verdict("A3xC2", "0,1,0x1,0");
  const auto d = verdict("C2xA3", "1,0x0,1,0");
  CHECK(c.order == d.order);
  CHECK(c.clause_b_applies == d.clause_b_applies);
}

TEST_CASE("adjoint varieties have q = 4") {
  for (const auto& [t, w] : std::vector<std::pair<const char*, const char*>>{
           {"A2", "1,1"}, {"A4", "1,0,0,1"}, {"B3", "0,1,0"}, {"B5", "0,1,0,0,0"}, {"C3", "2,0,0"}, {"D4", "0,1,0,0"},
           {"D6", "0,1,0,0,0,0"}, {"E6", "0,1,0,0,0,0"}, {"E7", "1,0,0,0,0,0,0"}, {"E8", "0,0,0,0,0,0,0,1"},
           {"F4", "1,0,0,0"}, {"G2", "0,1"}}) {
    CAPTURE(t);
    CHECK(verdict(t, w).q == 4);
  }
}

TEST_CASE("symmetry enlargement notes") {
  CHECK(verdict("C3", "1,0,0").g0_enlargement.has_value());
  CHECK(verdict("G2", "1,0").g0_enlargement.has_value());
  CHECK(verdict("B4", "0,0,0,1").g0_enlargement.has_value());
  CHECK_FALSE(verdict("B4", "1,0,0,0").g0_enlargement.has_value());
}

TEST_CASE("pkey order") {
  CHECK(pkey_order(4, -1) == 4);
  CHECK(pkey_order(4, 0) == 5);
  CHECK(pkey_order(2, -2) == 1);
  CHECK_THROWS_AS(pkey_order(2, -3), Error);
}

TEST_CASE("tables match the reference values") {
  const QTable t1 = table1_generate();
  CHECK(t1.matches());
  for (const auto& e : t1.entries) {
    CAPTURE(e.group);
    CAPTURE(e.node);
    CHECK(e.q == e.expected);
  }
  const QTable t2 = table2_generate();
  CHECK(t2.matches());
  for (const auto& e : t2.entries) {
    CAPTURE(e.group);
    CHECK(e.q == e.expected);
  }
  CHECK(table1_generate(Exec::Parallel).render(false, false) == t1.render(false, false));
  CHECK(t2.render(true, false).find("| E8 | all | 1240 |") != std::string::npos);
}

TEST_CASE("a corrupted reference is detected") {
  QTable t = table2_generate();
  t.entries.back().expected += 1;
  CHECK_FALSE(t.matches());
}

TEST_CASE("filtered system accounting") {
  const RootSystem rs = root_system("A2");
  const IrrepRealization rep = build_irrep(rs, Weight::from_ints({1, 1}));
  const FilteredSystemDims f = filtered_system_dims(rep, -1, 1);
  int perp = 0;
  for (const auto& [s, d] : f.g_perp_dims) perp += d;
  CHECK(perp == 56);
  CHECK(f.rank_J - f.rank_I == 3);
  CHECK(f.gl_dims == f.gl_dims_by_pairs);
  int total = 0;
  for (const auto& [s, d] : f.gl_dims) total += d;
  CHECK(total == 64);
  CHECK(f.gl_dims.begin()->first == -4);
  CHECK(f.gl_dims.rbegin()->first == 4);
  // g_1 has dimension 2 and g_2 dimension 1 for the full flag of A2
  const std::map<int, int> g_plus{{1, 2}, {2, 1}};
  long sigma = 64;
  for (const auto& [s, d] : f.g_perp_dims)
    for (const auto& [t, dt] : g_plus)
      if (s + t >= 1) sigma += static_cast<long>(d) * dt;
  CHECK(f.sigma_dim == sigma);
  CHECK_THROWS_AS(filtered_system_dims(rep, 5, 1), Error);
  CHECK_THROWS_AS(filtered_system_dims(rep, 0, 0), Error);
}
