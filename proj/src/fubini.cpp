#include "lierigid/fubini.hpp"

#include <algorithm>

namespace lierigid {

namespace {

void multisets_from(int lo, int m, int k, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int a = lo; a <= m; ++a) {
    cur.push_back(a);
    multisets_from(a, m, k, cur, out);
    cur.pop_back();
  }
}

std::vector<MultiIndex> multisets(int m, int k) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  multisets_from(1, m, k, cur, out);
  return out;
}

std::vector<MultiIndex> orderings(MultiIndex a) {
  std::sort(a.begin(), a.end());
  std::vector<MultiIndex> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// mu -> r^mu_A, grouped by the sorted multi-index A.
std::map<MultiIndex, SparseVec> by_multi_index(const NormalCoeffs& c) {
  std::map<MultiIndex, SparseVec> out;
  for (const auto& [key, v] : c) out[key.second][key.first] = v;
  return out;
}

void check_order_bound(int k_max) {
  if (k_max < 1) throw Error("Fubini recursion needs k_max >= 1 (order >= 2)");
}

}  // namespace

FramedModule framed(const IrrepRealization& rep) {
  FramedModule fm;
  fm.dim = rep.dim();
  fm.m = rep.m();
  for (int a = 1; a <= rep.m(); ++a) {
    fm.u.push_back(rep.u(a));
    fm.u_grades.push_back(rep.u_grade(a));
  }
  fm.grades = rep.grades();
  fm.levels = rep.osculation_levels();
  return fm;
}

FramedModule transported(const IrrepRealization& rep, const SparseMatrix& g) {
  if (g.size() != rep.dim()) throw Error("shape mismatch: group element does not act on the module");
  const SparseMatrix g_inv = inverse(g);
  std::vector<SparseMatrix> moved;
  std::vector<int> grades;
  for (int a = 1; a <= rep.m(); ++a) {
    moved.push_back(g * rep.u(a) * g_inv);
    grades.push_back(rep.u_grade(a));
  }
  const Frame frame = build_frame(g.col(0), rep.top_grade(), moved, grades, rep.dim());
  const SparseMatrix p = frame_matrix(frame, rep.dim());
  const SparseMatrix p_inv = inverse(p);
  FramedModule fm;
  fm.dim = rep.dim();
  fm.m = rep.m();
  for (const auto& x : moved) fm.u.push_back(in_frame(x, p, p_inv));
  fm.u_grades = grades;
  fm.grades = frame.grades;
  fm.levels = frame.levels;
  return fm;
}

OsculatingFiltration osculating_dims(const IrrepRealization& rep) {
  const auto& rs = rep.root_system();
  std::vector<const SparseMatrix*> parabolic;
  for (int i = 1; i <= rs.rank(); ++i) {
    parabolic.push_back(&rep.e(i));
    parabolic.push_back(&rep.h(i));
    if (!rep.nodes().count(i)) parabolic.push_back(&rep.f(i));
  }

  TrackedEchelon span;
  std::vector<SparseVec> basis{{{0, 1}}};
  span.add(basis.front());
  OsculatingFiltration filt{{1}};
  std::vector<SparseVec> frontier = basis;
  while (!frontier.empty()) {
    std::vector<SparseVec> next;
    for (const auto& v : frontier)
      for (int a = 1; a <= rep.m(); ++a) {
        SparseVec w = rep.u(a).apply(v);
        if (span.add(w)) next.push_back(std::move(w));
      }
    basis.insert(basis.end(), next.begin(), next.end());
    for (const auto* x : parabolic)
      for (const auto& v : basis)
        if (!span.contains(x->apply(v)))
          throw Error("internal: osculating space " + std::to_string(filt.dims.size() - 1) + " is not p-stable");
    if (next.empty()) break;
    filt.dims.push_back(span.rank());
    frontier = std::move(next);
  }
  if (filt.dims.back() != rep.dim()) throw Error("internal: osculating spaces do not exhaust V");
  return filt;
}

NormalCoeffs fundamental_form(const FramedModule& fm, int k) {
  const int f = fm.levels.empty() ? 0 : *std::max_element(fm.levels.begin(), fm.levels.end());
  if (k < 2 || k > f)
    throw Error("fundamental form order " + std::to_string(k) + " out of range 2.." + std::to_string(f));
  NormalCoeffs out;
  for (const auto& a : multisets(fm.m, k)) {
    const auto perms = orderings(a);
    SparseVec total;
    for (const auto& p : perms) {
      SparseVec v{{0, 1}};
      for (auto it = p.rbegin(); it != p.rend(); ++it) v = fm.lowering(*it).apply(v);
      axpy(total, 1, v);
    }
    const Rational w = Rational(1) / static_cast<long>(perms.size());
    for (const auto& [mu, c] : total)
      if (fm.levels[static_cast<std::size_t>(mu)] == k) out[{mu, a}] = c * w;
  }
  return out;
}

const char* to_string(SignConvention c) { return c == SignConvention::Invariant ? "invariant" : "literal"; }

Rational FubiniFormTable::coeff(int mu, MultiIndex alphas) const {
  std::sort(alphas.begin(), alphas.end());
  auto it = orders.find(static_cast<int>(alphas.size()));
  if (it == orders.end()) return 0;
  auto jt = it->second.find({mu, alphas});
  return jt == it->second.end() ? Rational(0) : jt->second;
}

std::size_t FubiniFormTable::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& [k, c] : orders) n += c.size();
  return n;
}

FubiniFormTable fubini_base(const FramedModule& fm) {
  FubiniFormTable t;
  t.m = fm.m;
  t.dim = fm.dim;
  t.max_order = 2;
  auto& c = t.orders[2];
  for (int a = 1; a <= fm.m; ++a)
    for (int b = a; b <= fm.m; ++b) {
      const SparseVec ab = fm.lowering(a).apply(fm.lowering(b).col(0));
      const SparseVec ba = fm.lowering(b).apply(fm.lowering(a).col(0));
      for (int mu = fm.m + 1; mu < fm.dim; ++mu) {
        const Rational x = entry(ab, mu);
        if (x != entry(ba, mu))
          throw Error("internal: second Fubini form not symmetric at mu=" + std::to_string(mu) + ", " +
                      format_multi_index({a, b}));
        if (x != 0) c[{mu, {a, b}}] = x;
      }
    }
  return t;
}

FubiniFormTable fubini_recurse(const FramedModule& fm, int k_max, Exec exec) {
  check_order_bound(k_max);
  FubiniFormTable t = fubini_base(fm);
  t.max_order = k_max + 1;
  const int n = fm.dim;
  const int m = fm.m;
  std::vector<SparseMatrix> rows;  // rows[a] column j = row j of u_a
  for (const auto& x : fm.u) rows.push_back(x.transpose());

  // A slot v_i (x) v^j is encoded as i * n + j.
  auto in_normal_line = [&](int code) { return code % n == 0 && code / n > m && code / n < n; };
  auto in_line_tangent = [&](int code) { return code / n == 0 && code % n >= 1 && code % n <= m; };

  for (int k = 2; k <= k_max; ++k) {
    // F^k on every ordering of its multi-indices.
    std::vector<std::pair<std::vector<int>, Rational>> lifted;
    for (const auto& [key, v] : t.orders[k]) {
      for (const auto& p : orderings(key.second)) {
        std::vector<int> code{key.first * n};
        for (int a : p) code.push_back(a);
        lifted.emplace_back(std::move(code), v);
      }
    }

    std::vector<IndexTensor> partial(lifted.size());
    for_each_index(lifted.size(), exec, [&](std::size_t idx) {
      const auto& [code, v] = lifted[idx];
      IndexTensor& out = partial[idx];
      for (int beta = 1; beta <= m; ++beta) {
        const SparseMatrix& u = fm.lowering(beta);
        const SparseMatrix& ut = rows[static_cast<std::size_t>(beta - 1)];
        for (std::size_t s = 0; s < code.size(); ++s) {
          const int i = code[s] / n;
          const int j = code[s] % n;
          auto emit = [&](int new_code, const Rational& c) {
            std::vector<int> key = code;
            key[s] = new_code;
            if (!in_normal_line(key[0])) return;
            for (std::size_t q = 1; q < key.size(); ++q)
              if (!in_line_tangent(key[q])) return;
            key.push_back(beta);  // (0, beta): v_0 (x) v^beta
            Rational& slot = out[key];
            slot += c * v;
            if (slot == 0) out.erase(key);
          };
          for (const auto& [a, c] : u.col(i)) emit(a * n + j, c);
          for (const auto& [b, c] : ut.col(j)) emit(i * n + b, -c);
        }
      }
    });
    IndexTensor sum;
    for (const auto& part : partial)
      for (const auto& [key, c] : part) {
        Rational& slot = sum[key];
        slot += c;
        if (slot == 0) sum.erase(key);
      }

    std::vector<int> positions;
    for (int s = 1; s <= k + 1; ++s) positions.push_back(s);
    const IndexTensor sym = symmetrize(sum, positions);
    auto& next = t.orders[k + 1];
    for (const auto& [key, c] : sym) {
      if (!std::is_sorted(key.begin() + 1, key.end())) continue;
      next[{key[0] / n, MultiIndex(key.begin() + 1, key.end())}] = c;
    }
    if (next.empty()) t.orders.erase(k + 1);
  }
  return t;
}

CoefficientRecursionResult fubini_coeff_recursion(const FramedModule& fm, int k_max, SignConvention convention,
                                                  Exec exec) {
  check_order_bound(k_max);
  CoefficientRecursionResult res;
  FubiniFormTable& t = res.table;
  t = fubini_base(fm);
  t.max_order = k_max + 1;
  t.convention = convention;
  const int m = fm.m;
  const Rational sign = convention == SignConvention::Invariant ? 1 : -1;

  for (int k = 2; k <= k_max; ++k) {
    const auto prev = by_multi_index(t.orders[k]);
    auto r = [&](const MultiIndex& a) -> const SparseVec* {
      auto it = prev.find(a);
      return it == prev.end() ? nullptr : &it->second;
    };
    // Right-hand side with gamma as the new index: the eta^mu_nu term from
    // the normal block of u_gamma, the eta^beta_alpha terms from its
    // tangent block, one for each position of A.
    auto rhs = [&](const MultiIndex& a, int gamma) {
      const SparseMatrix& u = fm.lowering(gamma);
      SparseVec out;
      if (const SparseVec* ra = r(a))
        for (const auto& [nu, c] : *ra)
          for (const auto& [mu, x] : u.col(nu))
            if (mu > m) axpy(out, c * x, {{mu, 1}});
      for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& [eps, x] : u.col(a[i])) {
          if (eps < 1 || eps > m) continue;
          MultiIndex swapped = a;
          swapped[i] = eps;
          std::sort(swapped.begin(), swapped.end());
          if (const SparseVec* rs = r(swapped)) axpy(out, -x, *rs);
        }
      return scaled(out, sign);
    };

    const auto targets = multisets(m, k + 1);
    std::vector<SparseVec> values(targets.size());
    std::vector<std::string> notes(targets.size());
    for_each_index(targets.size(), exec, [&](std::size_t idx) {
      const MultiIndex& b = targets[idx];
      MultiIndex a(b.begin(), b.end() - 1);
      values[idx] = rhs(a, b.back());
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b[i] == b.back() || (i > 0 && b[i] == b[i - 1])) continue;
        MultiIndex rest = b;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (rhs(rest, b[i]) != values[idx]) {
          notes[idx] = "order " + std::to_string(k + 1) + " " + format_multi_index(b) + " differs with new index " +
                       std::to_string(b[i]);
          break;
        }
      }
    });
    auto& next = t.orders[k + 1];
    for (std::size_t idx = 0; idx < targets.size(); ++idx) {
      for (const auto& [mu, c] : values[idx]) next[{mu, targets[idx]}] = c;
      if (!notes[idx].empty()) res.asymmetries.push_back(notes[idx]);
    }
    if (next.empty()) t.orders.erase(k + 1);
  }
  return res;
}

GradedFubini graded_fubini(const FramedModule& fm, const FubiniFormTable& table) {
  GradedFubini out;
  for (const auto& [k, coeffs] : table.orders)
    for (const auto& [key, c] : coeffs) {
      const auto& [mu, a] = key;
      int d = 0;
      for (int alpha : a) d += fm.u_grades[static_cast<std::size_t>(alpha - 1)];
      if (fm.grades[static_cast<std::size_t>(mu)] != fm.top_grade() - d)
        out.violations.push_back("order " + std::to_string(k) + " mu=" + std::to_string(mu) + " " +
                                 format_multi_index(a) + " value " + lierigid::to_string(c) + ": degree " +
                                 std::to_string(d) + " but normal grade " +
                                 lierigid::to_string(fm.grades[static_cast<std::size_t>(mu)] - fm.top_grade()));
      out.by_degree[d][{k, {mu, a}}] = c;
    }
  return out;
}

IndexTensor symmetrize(const IndexTensor& t, const std::vector<int>& positions) {
  if (t.empty()) return {};
  const std::size_t len = t.begin()->first.size();
  std::vector<int> pos = positions;
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) throw Error("symmetrize: repeated position");
  for (int p : pos)
    if (p < 0 || static_cast<std::size_t>(p) >= len) throw Error("symmetrize: position out of range");

  // Sum over the distinct orderings of each multiset of values; every
  // ordering then carries prod(mult!) / p! of that sum.
  std::map<std::vector<int>, Rational> groups;
  for (const auto& [key, v] : t) {
    if (key.size() != len) throw Error("symmetrize: keys of different lengths");
    std::vector<int> canon = key;
    std::vector<int> vals;
    for (int p : pos) vals.push_back(key[static_cast<std::size_t>(p)]);
    std::sort(vals.begin(), vals.end());
    for (std::size_t q = 0; q < pos.size(); ++q) canon[static_cast<std::size_t>(pos[q])] = vals[q];
    groups[canon] += v;
  }
  IndexTensor out;
  const Rational total = factorial(static_cast<int>(pos.size()));
  for (const auto& [canon, sum] : groups) {
    if (sum == 0) continue;
    std::vector<int> vals;
    for (int p : pos) vals.push_back(canon[static_cast<std::size_t>(p)]);
    Rational weight = 1;
    for (std::size_t q = 0; q < vals.size();) {
      std::size_t r = q;
      while (r < vals.size() && vals[r] == vals[q]) ++r;
      weight *= factorial(static_cast<int>(r - q));
      q = r;
    }
    weight /= total;
    do {
      std::vector<int> key = canon;
      for (std::size_t q = 0; q < pos.size(); ++q) key[static_cast<std::size_t>(pos[q])] = vals[q];
      out[key] = sum * weight;
    } while (std::next_permutation(vals.begin(), vals.end()));
  }
  return out;
}

int default_max_order(const Rational& q) {
  const long qi = q.get_num().get_si() / q.get_den().get_si();
  return static_cast<int>(std::min<long>(qi + 1, 6));
}

std::string format_multi_index(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace lierigid
