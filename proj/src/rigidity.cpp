#include "lierigid/rigidity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lierigid {

namespace {

struct Labeling {
  char type;
  int rank;
  NodeSet nodes;
  bool operator<(const Labeling& o) const { return std::tie(type, rank, nodes) < std::tie(o.type, o.rank, o.nodes); }
};

NodeSet mapped(const NodeSet& s, const std::map<int, int>& f) {
  NodeSet out;
  for (int j : s) out.insert(f.at(j));
  return out;
}

// Closure of a labeling under the low-rank coincidences.
std::set<Labeling> equivalent_labelings(const Labeling& start) {
  std::set<Labeling> seen{start};
  std::vector<Labeling> todo{start};
  while (!todo.empty()) {
    const Labeling l = todo.back();
    todo.pop_back();
    std::vector<Labeling> next;
    if (l.rank == 1 && (l.type == 'A' || l.type == 'B' || l.type == 'C'))
      for (char t : {'A', 'B', 'C'}) next.push_back({t, 1, l.nodes});
    if (l.rank == 2 && l.type == 'B') next.push_back({'C', 2, mapped(l.nodes, {{1, 2}, {2, 1}})});
    if (l.rank == 2 && l.type == 'C') next.push_back({'B', 2, mapped(l.nodes, {{1, 2}, {2, 1}})});
    if (l.rank == 3 && l.type == 'A') next.push_back({'D', 3, mapped(l.nodes, {{2, 1}, {1, 2}, {3, 3}})});
    if (l.rank == 3 && l.type == 'D') next.push_back({'A', 3, mapped(l.nodes, {{1, 2}, {2, 1}, {3, 3}})});
    for (auto& n : next)
      if (seen.insert(n).second) todo.push_back(std::move(n));
  }
  return seen;
}

std::string node_list(const NodeSet& s) {
  std::string out;
  for (int j : s) out += (out.empty() ? "" : ",") + std::to_string(j);
  return out;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

Integer table1_expected(char type, int r, int i) {
  switch (type) {
    case 'A': return std::min(i, r + 1 - i);
    case 'B':
    case 'C': return i < r ? 2 * i : r;
    case 'D': return i < r - 1 ? 2 * i : r / 2;
    default: break;
  }
  static const std::map<std::pair<char, int>, std::vector<int>> exceptional = {
      {{'E', 6}, {2, 4, 6, 12, 6, 2}},
      {{'E', 7}, {4, 7, 12, 24, 15, 8, 3}},
      {{'E', 8}, {8, 16, 28, 60, 40, 24, 12, 4}},
      {{'F', 4}, {4, 12, 12, 4}},
      {{'G', 2}, {4, 4}}};
  return exceptional.at({type, r})[static_cast<std::size_t>(i - 1)];
}

Integer table2_expected(char type, int r) {
  switch (type) {
    case 'A': return r * (r + 1) * (r + 2) / 6;
    case 'B':
    case 'C': return r * (r + 1) * (4 * r - 1) / 6;
    case 'D': return r * (r - 1) * (2 * r - 1) / 3;
    default: break;
  }
  static const std::map<std::pair<char, int>, int> exceptional = {
      {{'E', 6}, 156}, {{'E', 7}, 399}, {{'E', 8}, 1240}, {{'F', 4}, 110}, {{'G', 2}, 16}};
  return exceptional.at({type, r});
}

struct Job {
  std::string group;
  std::string node;
  RootSystem rs;
  NodeSet nodes;
  Integer expected;
};

QTable run_jobs(std::string title, const std::vector<Job>& jobs, Exec exec) {
  QTable t;
  t.title = std::move(title);
  t.entries.resize(jobs.size());
  for_each_index(jobs.size(), exec, [&](std::size_t k) {
    const Job& j = jobs[k];
    const Rational q = q_value(j.rs, j.nodes, weight_for_nodes(j.rs, j.nodes));
    t.entries[k] = {j.group, j.node, q.get_num(), j.expected};
  });
  return t;
}

std::vector<std::pair<char, int>> table_groups() {
  std::vector<std::pair<char, int>> out;
  for (int r = 1; r <= 8; ++r) out.emplace_back('A', r);
  for (int r = 1; r <= 8; ++r) out.emplace_back('B', r);
  for (int r = 1; r <= 8; ++r) out.emplace_back('C', r);
  for (int r = 3; r <= 8; ++r) out.emplace_back('D', r);
  for (const auto& g : {std::pair{'E', 6}, std::pair{'E', 7}, std::pair{'E', 8}, std::pair{'F', 4}, std::pair{'G', 2}})
    out.push_back(g);
  return out;
}

}  // namespace

std::vector<FactorDiagnostics> factor_conditions(const RootSystem& rs, const NodeSet& nodes) {
  if (nodes.empty()) throw Error("empty node set: no parabolic selected");
  for (int j : nodes)
    if (j < 1 || j > rs.rank())
      throw Error("node " + std::to_string(j) + " out of range 1.." + std::to_string(rs.rank()));
  std::vector<FactorDiagnostics> out;
  for (const auto& f : rs.factors()) {
    NodeSet local;
    for (int j : nodes)
      if (j > f.offset && j <= f.offset + f.rank) local.insert(j - f.offset);
    if (local.empty()) continue;
    FactorDiagnostics d;
    d.factor = f.label();
    d.local_nodes = local;
    for (const auto& l : equivalent_labelings({f.type, f.rank, local})) {
      d.labelings.push_back(std::string(1, l.type) + std::to_string(l.rank) + ":{" + node_list(l.nodes) + "}");
      if (l.type == 'A' && (l.nodes.count(1) || l.nodes.count(l.rank))) d.is_A_with_extreme_node = true;
      if ((l.type == 'B' || l.type == 'D') && l.nodes == NodeSet{1}) d.is_quadric_type = true;
    }
    out.push_back(std::move(d));
  }
  return out;
}

RigidityVerdict rigidity_order(const RootSystem& rs, const NodeSet& nodes, const Weight& pi) {
  RigidityVerdict v;
  v.q = static_cast<int>(q_value(rs, nodes, pi).get_num().get_si());
  v.factor_diagnostics = factor_conditions(rs, nodes);
  const bool any_quadric = std::any_of(v.factor_diagnostics.begin(), v.factor_diagnostics.end(),
                                       [](const auto& d) { return d.is_quadric_type; });
  const bool any_extreme = std::any_of(v.factor_diagnostics.begin(), v.factor_diagnostics.end(),
                                       [](const auto& d) { return d.is_A_with_extreme_node; });
  v.clause_a_applies = !any_quadric && !any_extreme;
  v.clause_b_applies = !any_extreme;
  if (v.clause_a_applies)
    v.order = v.q;
  else if (v.clause_b_applies)
    v.order = v.q + 1;

  if (rs.factors().size() == 1) {
    const Factor& f = rs.factors().front();
    const int r = f.rank;
    if (f.type == 'C' && r >= 2 && pi == fundamental_weight(rs, 1))
      v.g0_enlargement = "C" + std::to_string(r) + " is contained in A" + std::to_string(2 * r - 1) +
                         " acting on the same space; Z is all of P^" + std::to_string(2 * r - 1);
    else if (f.type == 'G' && pi == fundamental_weight(rs, 1))
      v.g0_enlargement = "G2 is contained in B3 acting on the same space; Z is the quadric in P^6";
    else if (f.type == 'B' && r >= 2 && pi == fundamental_weight(rs, r))
      v.g0_enlargement = "B" + std::to_string(r) + " is contained in D" + std::to_string(r + 1) +
                         " acting on the same space; Z is the spinor variety";
  }
  return v;
}

int pkey_order(int q, int p) {
  if (p < -q) throw Error("p = " + std::to_string(p) + " is below -q = " + std::to_string(-q));
  return q + p + 1;
}

std::string QTable::render(bool markdown, bool expected_values) const {
  std::ostringstream out;
  if (markdown) {
    out << "**" << title << "**\n\n| G | i | q |\n|---|---|---|\n";
    for (const auto& e : entries)
      out << "| " << e.group << " | " << e.node << " | " << to_string(expected_values ? e.expected : e.q) << " |\n";
    return out.str();
  }
  out << title << "\n" << pad("G", 6) << pad("i", 6) << "q\n";
  for (const auto& e : entries)
    out << pad(e.group, 6) << pad(e.node, 6) << to_string(expected_values ? e.expected : e.q) << "\n";
  return out.str();
}

QTable table1_generate(Exec exec) {
  std::vector<Job> jobs;
  for (const auto& [type, r] : table_groups()) {
    const RootSystem rs = build_root_system({{type, r}});
    for (int i = 1; i <= r; ++i)
      jobs.push_back({std::string(1, type) + std::to_string(r), std::to_string(i), rs, {i}, table1_expected(type, r, i)});
  }
  return run_jobs("Values of q for G/P_i in P(V_{pi_i})", jobs, exec);
}

QTable table2_generate(Exec exec) {
  std::vector<Job> jobs;
  for (const auto& [type, r] : table_groups()) {
    const RootSystem rs = build_root_system({{type, r}});
    NodeSet all;
    for (int i = 1; i <= r; ++i) all.insert(i);
    jobs.push_back({std::string(1, type) + std::to_string(r), "all", rs, all, table2_expected(type, r)});
  }
  return run_jobs("Values of q for G/B in P(V_rho)", jobs, exec);
}

FilteredSystemDims filtered_system_dims(const IrrepRealization& rep, int p, int r) {
  const RootSystem& rs = rep.root_system();
  FilteredSystemDims out;
  out.p = p;
  out.r = r;
  out.q = static_cast<int>(q_value(rs, rep.nodes(), rep.highest_weight()).get_num().get_si());
  if (p < -out.q || p > out.q) throw Error("filtration index p must satisfy |p| <= q = " + std::to_string(out.q));
  if (r < 1) throw Error("filtration shift r must be positive");
  const GradingProfile gp = grading_element(rs, rep.nodes());

  const auto module = graded_module_dims(gp, rep);
  for (const auto& [a, da] : module)
    for (const auto& [b, db] : module) {
      const Rational s = a - b;
      out.gl_dims[static_cast<int>(s.get_num().get_si())] += da * db;
    }
  for (const auto& gi : rep.grades())
    for (const auto& gj : rep.grades()) out.gl_dims_by_pairs[static_cast<int>(Rational(gi - gj).get_num().get_si())] += 1;

  out.g_dims = gp.g_dims;
  for (const auto& [s, d] : out.gl_dims) {
    const int perp = d - gp.dim(s);
    if (perp < 0) throw Error("internal: g_" + std::to_string(s) + " larger than gl(V)_" + std::to_string(s));
    if (perp > 0) out.g_perp_dims[s] = perp;
    if (s <= p) out.rank_I += perp;
  }
  out.rank_J = out.rank_I + gp.dim_g_minus();

  const long n = rep.dim();
  out.sigma_dim = n * n;
  for (const auto& [s, perp] : out.g_perp_dims) {
    int plus = 0;
    for (int t = std::max(r - s, 1); t <= gp.max_grade; ++t) plus += gp.dim(t);
    if (plus > 0) {
      out.lambda_dims[s] = perp * plus;
      out.sigma_dim += static_cast<long>(perp) * plus;
    }
  }
  return out;
}

}  // namespace lierigid
