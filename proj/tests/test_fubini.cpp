#include <doctest.h>

#include <algorithm>

#include "lierigid/fubini.hpp"
#include "lierigid/grading.hpp"

using namespace lierigid;

namespace {

IrrepRealization build(const char* type, const char* weight) {
  const RootSystem rs = root_system(type);
  return build_irrep(rs, parse_weight(rs, weight));
}

int q_of(const IrrepRealization& rep) {
  const Rational q = q_value(rep.root_system(), rep.nodes(), rep.highest_weight());
  return static_cast<int>(q.get_num().get_si());
}

const std::vector<std::pair<const char*, const char*>> kSuite = {
    {"A2", "1,1"}, {"G2", "0,1"}, {"A1xA1", "1x1"}, {"B2", "1,0"}, {"B3", "0,0,1"}};

// Brute-force symmetrization: average over every permutation of the positions.
IndexTensor symmetrize_by_permutations(const IndexTensor& t, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  IndexTensor out;
  long count = 0;
  std::vector<int> perm = positions;
  do {
    ++count;
    for (const auto& [key, v] : t) {
      std::vector<int> moved = key;
      for (std::size_t q = 0; q < positions.size(); ++q)
        moved[static_cast<std::size_t>(perm[q])] = key[static_cast<std::size_t>(positions[q])];
      out[moved] += v;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  IndexTensor clean;
  for (auto& [key, v] : out)
    if (v != 0) clean[key] = v / count;
  return clean;
}

}  // namespace

TEST_CASE("osculating filtrations") {
  CHECK(osculating_dims(build("A1xA1", "1x1")).dims == std::vector<int>{1, 3, 4});
  CHECK(osculating_dims(build("A2", "2,0")).dims == std::vector<int>{1, 3, 6});
  CHECK(osculating_dims(build("A4", "1,0,0,0")).dims == std::vector<int>{1, 5});
  // frame levels agree with the spans
  for (const auto& [t, w] : kSuite) {
    const IrrepRealization rep = build(t, w);
    const auto dims = osculating_dims(rep).dims;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const auto count = std::count_if(rep.osculation_levels().begin(), rep.osculation_levels().end(),
                                       [&](int l) { return l <= static_cast<int>(k); });
      CHECK(count == dims[k]);
    }
  }
}

TEST_CASE("osculating and grading filtrations coincide only in the cominuscule case") {
  auto coincide = [](const IrrepRealization& rep) {
    // level k vectors are exactly those of grade top - k
    for (int i = 0; i < rep.dim(); ++i)
      if (rep.grades()[static_cast<std::size_t>(i)] != rep.top_grade() - rep.osculation_levels()[static_cast<std::size_t>(i)])
        return false;
    return true;
  };
  CHECK(coincide(build("A1xA1", "1x1")));
  CHECK(coincide(build("A3", "0,1,0")));
  CHECK(coincide(build("B2", "1,0")));
  CHECK_FALSE(coincide(build("A2", "1,1")));
  CHECK_FALSE(coincide(build("G2", "0,1")));
  CHECK_FALSE(coincide(build("B3", "0,0,1")));
}

TEST_CASE("Segre second fundamental form") {
  const FramedModule fm = framed(build("A1xA1", "1x1"));
  const NormalCoeffs ff = fundamental_form(fm, 2);
  CHECK(ff == NormalCoeffs{{{3, {1, 2}}, Rational(1)}});
  const FubiniFormTable base = fubini_base(fm);
  CHECK(base.coeff(3, {1, 2}) == 1);
  CHECK(base.coeff(3, {2, 1}) == 1);
  CHECK(base.coeff(3, {1, 1}) == 0);
  CHECK(base.coeff(3, {2, 2}) == 0);
  const FubiniFormTable t = fubini_recurse(fm, 2);
  CHECK(t.orders.count(3) == 0);
  CHECK_THROWS_AS(fundamental_form(fm, 3), Error);
  CHECK_THROWS_AS(fundamental_form(fm, 1), Error);
}

TEST_CASE("quadric second fundamental form has rank 3") {
  const FramedModule fm = framed(build("B2", "1,0"));
  REQUIRE(fm.dim == 5);
  REQUIRE(fm.m == 3);
  const NormalCoeffs ff = fundamental_form(fm, 2);
  std::vector<std::vector<Rational>> q(3, std::vector<Rational>(3, 0));
  for (const auto& [key, c] : ff) {
    const auto& a = key.second;
    q[static_cast<std::size_t>(a[0] - 1)][static_cast<std::size_t>(a[1] - 1)] = c;
    q[static_cast<std::size_t>(a[1] - 1)][static_cast<std::size_t>(a[0] - 1)] = c;
  }
  std::vector<SparseVec> rows;
  for (const auto& row : q) {
    SparseVec v;
    for (std::size_t j = 0; j < 3; ++j)
      if (row[j] != 0) v[static_cast<int>(j)] = row[j];
    rows.push_back(v);
  }
  CHECK(rank_of(rows) == 3);
  const auto t = fubini_coeff_recursion(fm, 2);
  CHECK(t.table.orders.count(3) == 0);
}

TEST_CASE("projective space has no normal directions") {
  const FramedModule fm = framed(build("A3", "1,0,0"));
  CHECK(fubini_base(fm).nonzero_count() == 0);
  CHECK(fubini_recurse(fm, 4).nonzero_count() == 0);
}

TEST_CASE("tensor route and coefficient recursion agree") {
  for (const auto& [t, w] : kSuite) {
    CAPTURE(t);
    const IrrepRealization rep = build(t, w);
    const FramedModule fm = framed(rep);
    const int k_max = std::min(q_of(rep) + 1, 5) - 1;
    const FubiniFormTable tensor = fubini_recurse(fm, k_max);
    const auto coeff = fubini_coeff_recursion(fm, k_max);
    CHECK(coeff.asymmetries.empty());
    CHECK(tensor.same_coefficients(coeff.table));
    CHECK(graded_fubini(fm, tensor).violations.empty());
  }
}

TEST_CASE("printed signs differ by (-1)^k") {
  const FramedModule fm = framed(build("A2", "1,1"));
  const FubiniFormTable inv = fubini_coeff_recursion(fm, 3, SignConvention::Invariant).table;
  const FubiniFormTable lit = fubini_coeff_recursion(fm, 3, SignConvention::Literal).table;
  for (const auto& [k, coeffs] : inv.orders)
    for (const auto& [key, c] : coeffs) CHECK(lit.coeff(key.first, key.second) == (k % 2 == 0 ? c : -c));
}

TEST_CASE("fundamental forms are the top quotient of the Fubini table") {
  for (const auto& [t, w] : kSuite) {
    CAPTURE(t);
    const FramedModule fm = framed(build(t, w));
    const FubiniFormTable table = fubini_recurse(fm, 2);
    const int f = *std::max_element(fm.levels.begin(), fm.levels.end());
    for (int k = 2; k <= std::min(3, f); ++k) {
      NormalCoeffs top;
      for (const auto& [key, c] : table.orders.at(k))
        if (fm.levels[static_cast<std::size_t>(key.first)] == k) top[key] = c;
      CHECK(top == fundamental_form(fm, k));
    }
  }
}

TEST_CASE("serial and parallel agree") {
  const FramedModule fm = framed(build("G2", "0,1"));
  CHECK(fubini_recurse(fm, 3, Exec::Serial).same_coefficients(fubini_recurse(fm, 3, Exec::Parallel)));
  CHECK(fubini_coeff_recursion(fm, 3, SignConvention::Invariant, Exec::Serial)
            .table.same_coefficients(fubini_coeff_recursion(fm, 3, SignConvention::Invariant, Exec::Parallel).table));
}

TEST_CASE("constancy along the orbit") {
  for (const auto& [t, w] : std::vector<std::pair<const char*, const char*>>{{"A2", "1,1"}, {"A1xA1", "1x1"}}) {
    const IrrepRealization rep = build(t, w);
    const SparseMatrix g = nilpotent_exp(rep.f(1));
    const FramedModule moved = transported(rep, g);
    CHECK_FALSE(g == SparseMatrix::identity(rep.dim()));
    CHECK(fubini_recurse(moved, 3).same_coefficients(fubini_recurse(framed(rep), 3)));
  }
}

TEST_CASE("graded split") {
  const FramedModule fm = framed(build("A1xA1", "1x1"));
  const auto split = graded_fubini(fm, fubini_base(fm));
  CHECK(split.by_degree.size() == 1);
  CHECK(split.by_degree.count(2) == 1);
  CHECK(graded_fubini(fm, FubiniFormTable{}).by_degree.empty());
  // a planted off-degree coefficient is reported
  FubiniFormTable bad = fubini_base(fm);
  bad.orders[3][{3, {1, 1, 2}}] = 1;
  CHECK(graded_fubini(fm, bad).violations.size() == 1);
}

TEST_CASE("symmetrize") {
  // T_(b1 U_b2) with T = (1,0), U = (0,1)
  const IndexTensor tu{{{0, 1}, Rational(1)}};
  const IndexTensor s = symmetrize(tu, {0, 1});
  CHECK(s == IndexTensor{{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}});
  CHECK(symmetrize(s, {0, 1}) == s);
  CHECK(symmetrize(tu, {1}) == tu);
  CHECK_THROWS_AS(symmetrize(tu, {0, 2}), Error);
  CHECK_THROWS_AS(symmetrize(tu, {0, 0}), Error);

  IndexTensor t;
  int seed = 7;
  for (int i = 0; i < 40; ++i) {
    seed = (seed * 1103 + 12345) % 9973;
    Rational v(seed % 11 - 5, 1 + seed % 4);
    v.canonicalize();
    t[{seed % 3, (seed / 3) % 3, (seed / 9) % 4, (seed / 36) % 3}] += v;
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  for (const auto& pos : std::vector<std::vector<int>>{{0, 1}, {0, 1, 3}, {1, 3}, {0, 1, 2, 3}})
    CHECK(symmetrize(t, pos) == symmetrize_by_permutations(t, pos));
}
