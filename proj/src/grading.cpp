#include "lierigid/grading.hpp"

#include "lierigid/repbuild.hpp"

namespace lierigid {

int GradingProfile::dim_g_minus() const {
  int total = 0;
  for (const auto& [d, n] : g_dims)
    if (d > 0) total += n;
  return total;
}

int GradingProfile::dim(int grade) const {
  auto it = g_dims.find(grade);
  return it == g_dims.end() ? 0 : it->second;
}

GradingProfile grading_element(const RootSystem& rs, const NodeSet& nodes) {
  if (nodes.empty()) throw Error("empty node set: no parabolic selected");
  for (int j : nodes)
    if (j < 1 || j > rs.rank())
      throw Error("node " + std::to_string(j) + " out of range 1.." + std::to_string(rs.rank()));
  GradingProfile gp{rs, nodes, 0, {}, {}};
  gp.g_dims[0] = rs.rank();
  for (const auto& beta : rs.positive_roots()) {
    int grade = 0;
    for (int j : nodes) grade += beta[static_cast<std::size_t>(j - 1)];
    gp.root_grades.push_back(grade);
    gp.g_dims[grade] += 1;
    gp.g_dims[-grade] += 1;
    gp.max_grade = std::max(gp.max_grade, grade);
  }
  return gp;
}

Rational eval_E(const GradingProfile& gp, const Weight& w) {
  const auto c = weight_in_root_basis(gp.rs, w);
  Rational total = 0;
  for (int j : gp.nodes) total += c[static_cast<std::size_t>(j - 1)];
  return total;
}

Rational q_value(const RootSystem& rs, const NodeSet& nodes, const Weight& pi, bool enforce_support) {
  if (static_cast<int>(pi.size()) != rs.rank()) throw Error("weight length does not match rank");
  if (!pi.dominant_integral()) throw Error("q requires a dominant integral weight");
  if (enforce_support && pi.support() != nodes) {
    std::string s = "support of the weight {";
    for (int j : pi.support()) s += std::to_string(j) + ",";
    if (s.back() == ',') s.pop_back();
    s += "} does not match the node set {";
    for (int j : nodes) s += std::to_string(j) + ",";
    if (s.back() == ',') s.pop_back();
    throw Error(s + "}");
  }
  const GradingProfile gp = grading_element(rs, nodes);
  const Rational q = eval_E(gp, pi) + eval_E(gp, dual_weight(rs, pi));
  if (!is_integer(q) || q <= 0) throw Error("internal: q = " + to_string(q) + " is not a positive integer");
  return q;
}

std::map<Rational, int> graded_module_dims(const GradingProfile& gp, const IrrepRealization& rep) {
  std::map<Rational, int> dims;
  for (const auto& w : rep.basis_weights()) dims[eval_E(gp, w)] += 1;
  return dims;
}

Integer sym_graded_dims(const GradingProfile& gp, int d) {
  if (d < 0) throw Error("negative degree");
  // prod_s (1 - t^s)^{-dim g_s}, one geometric factor per generator.
  std::vector<Integer> series(static_cast<std::size_t>(d) + 1, 0);
  series[0] = 1;
  for (const auto& [s, count] : gp.g_dims) {
    if (s <= 0) continue;
    for (int c = 0; c < count; ++c)
      for (int k = s; k <= d; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - s)];
  }
  return series[static_cast<std::size_t>(d)];
}

}  // namespace lierigid
