#include "lierigid/kernel.hpp"

#include "lierigid/grading.hpp"

namespace lierigid {

namespace {

// Constraint functionals are matrices phi with <phi, zeta> = sum phi_ij
// zeta_ij; composing with ad(u) acts on them by u^T phi - phi u^T.
SparseMatrix coadjoint(const SparseMatrix& ut, const SparseMatrix& phi) { return ut * phi - phi * ut; }

struct Word {
  int last = 1;                      // largest letter, extensions stay sorted
  int grade = 0;
  std::vector<SparseMatrix> funcs;   // one per normal direction still nonzero
};

TrackedEchelon span_of(const std::vector<GlElement>& basis) {
  TrackedEchelon ech;
  for (const auto& x : basis) ech.add(x.flatten());
  return ech;
}

std::string pair_witness(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + " (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

KernelReport compute_kernel(const IrrepRealization& rep, int degree_bound, Exec exec) {
  const Rational q = q_value(rep.root_system(), rep.nodes(), rep.highest_weight());
  const int two_q = 2 * static_cast<int>(q.get_num().get_si());
  if (degree_bound == 0) degree_bound = two_q;
  if (degree_bound < two_q)
    throw Error("degree bound " + std::to_string(degree_bound) + " is below the required 2q = " + std::to_string(two_q));

  const int n = rep.dim();
  const int m = rep.m();
  std::vector<SparseMatrix> ut;
  for (int a = 1; a <= m; ++a) ut.push_back(rep.u(a).transpose());

  KernelReport report;
  report.dim_v = n;
  report.degree_bound = degree_bound;
  RowSpace rows(n * n);

  Word empty;
  for (int mu = m + 1; mu < n; ++mu) {
    SparseMatrix phi(n);
    phi.set(mu, 0, 1);
    empty.funcs.push_back(std::move(phi));
  }
  std::vector<Word> level;
  if (!empty.funcs.empty()) level.push_back(std::move(empty));

  while (!level.empty()) {
    for (const auto& w : level)
      for (const auto& phi : w.funcs) rows.insert(phi.flatten());

    // Children of every word, assembled independently.
    std::vector<std::pair<std::size_t, int>> jobs;
    for (std::size_t i = 0; i < level.size(); ++i)
      for (int a = level[i].last; a <= m; ++a)
        if (level[i].grade + rep.u_grade(a) <= degree_bound) jobs.emplace_back(i, a);
    std::vector<Word> next(jobs.size());
    for_each_index(jobs.size(), exec, [&](std::size_t j) {
      const auto& [parent, a] = jobs[j];
      Word& child = next[j];
      child.last = a;
      child.grade = level[parent].grade + rep.u_grade(a);
      for (const auto& phi : level[parent].funcs) {
        SparseMatrix psi = coadjoint(ut[static_cast<std::size_t>(a - 1)], phi);
        if (!psi.is_zero()) child.funcs.push_back(std::move(psi));
      }
    });
    level.clear();
    for (auto& w : next)
      if (!w.funcs.empty()) level.push_back(std::move(w));
  }

  report.rows = rows.rank();
  for (const auto& v : rows.null_space()) report.kernel_basis.push_back(SparseMatrix::unflatten(v, n));
  report.dim_k = static_cast<int>(report.kernel_basis.size());
  report.g_basis = embed_g(rep);
  report.dim_g = static_cast<int>(report.g_basis.size());

  const SparseVec id = SparseMatrix::identity(n).flatten();
  report.contains_scalars = span_of(report.kernel_basis).contains(id);
  report.scalars_in_g = span_of(report.g_basis).contains(id);
  report.enlargement = report.dim_k - report.dim_g - (report.scalars_in_g ? 0 : 1);
  report.bracket_closed = check_bracket_closed(report).ok;
  report.g_in_k = check_g_in_k(report).ok;
  report.g_module = check_k_is_g_module(report).ok;
  return report;
}

bool in_kernel(const KernelReport& report, const GlElement& x) {
  return span_of(report.kernel_basis).contains(x.flatten());
}

StructureCheck check_bracket_closed(const KernelReport& report) {
  const TrackedEchelon span = span_of(report.kernel_basis);
  const auto& b = report.kernel_basis;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!span.contains(commutator(b[i], b[j]).flatten()))
        return {false, pair_witness("bracket of kernel elements", i, j)};
  return {};
}

StructureCheck check_g_in_k(const KernelReport& report) {
  const TrackedEchelon span = span_of(report.kernel_basis);
  for (std::size_t i = 0; i < report.g_basis.size(); ++i)
    if (!span.contains(report.g_basis[i].flatten())) return {false, "g element " + std::to_string(i)};
  return {};
}

StructureCheck check_k_is_g_module(const KernelReport& report) {
  const TrackedEchelon span = span_of(report.kernel_basis);
  for (std::size_t i = 0; i < report.g_basis.size(); ++i)
    for (std::size_t j = 0; j < report.kernel_basis.size(); ++j)
      if (!span.contains(commutator(report.g_basis[i], report.kernel_basis[j]).flatten()))
        return {false, pair_witness("[g element, kernel element]", i, j)};
  return {};
}

}  // namespace lierigid
