#include "lierigid/linalg.hpp"

namespace lierigid {

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n);
  for (int i = 0; i < n; ++i) m.col(i).emplace(i, 1);
  return m;
}

void SparseMatrix::set(int i, int j, const Rational& v) {
  auto& c = col(j);
  if (v == 0)
    c.erase(i);
  else
    c[i] = v;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [j, v] : x) axpy(out, v, col(j));
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  SparseMatrix out(size());
  for (int j = 0; j < size(); ++j) out.col(j) = apply(other.col(j));
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  SparseMatrix out = *this;
  for (int j = 0; j < size(); ++j) axpy(out.col(j), 1, other.col(j));
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  SparseMatrix out = *this;
  for (int j = 0; j < size(); ++j) axpy(out.col(j), -1, other.col(j));
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& a) const {
  SparseMatrix out(size());
  for (int j = 0; j < size(); ++j) out.col(j) = lierigid::scaled(col(j), a);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(size());
  for (int j = 0; j < size(); ++j)
    for (const auto& [i, v] : col(j)) out.col(i).emplace(j, v);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

SparseVec SparseMatrix::flatten() const {
  SparseVec out;
  const int n = size();
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : col(j)) out.emplace(i * n + j, v);
  return out;
}

SparseMatrix SparseMatrix::unflatten(const SparseVec& v, int n) {
  SparseMatrix out(n);
  for (const auto& [k, x] : v) out.col(k % n).emplace(k / n, x);
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

TrackedEchelon::Decomposition TrackedEchelon::decompose(const SparseVec& v) const {
  Decomposition d{v, {}};
  // Pivots are visited in increasing order; subtracting row p only touches
  // columns >= p, so a single sweep suffices.
  auto it = rows_.begin();
  while (it != rows_.end() && !d.residual.empty()) {
    auto hit = d.residual.lower_bound(it->first);
    if (hit == d.residual.end()) break;
    if (hit->first != it->first) {
      it = rows_.lower_bound(hit->first);
      continue;
    }
    const Rational c = hit->second;
    axpy(d.residual, -c, it->second.vec);
    axpy(d.coeffs, c, it->second.expr);
    ++it;
  }
  return d;
}

std::optional<int> TrackedEchelon::add(const SparseVec& v) {
  Decomposition d = decompose(v);
  if (d.residual.empty()) return std::nullopt;
  const int k = generators_++;
  // residual = v - sum coeffs_j g_j = g_k - sum coeffs_j g_j
  SparseVec expr = scaled(d.coeffs, -1);
  expr.emplace(k, 1);
  const int pivot = d.residual.begin()->first;
  const Rational inv = 1 / Rational(d.residual.begin()->second);
  rows_.emplace(pivot, Row{scaled(d.residual, inv), scaled(expr, inv)});
  return k;
}

int rank_of(const std::vector<SparseVec>& vectors) {
  TrackedEchelon e;
  for (const auto& v : vectors) e.add(v);
  return e.rank();
}

bool RowSpace::insert(SparseVec v) {
  auto it = rows_.begin();
  while (it != rows_.end() && !v.empty()) {
    auto hit = v.lower_bound(it->first);
    if (hit == v.end()) break;
    if (hit->first != it->first) {
      it = rows_.lower_bound(hit->first);
      continue;
    }
    const Rational c = hit->second;
    axpy(v, -c, it->second);
    ++it;
  }
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  v = scaled(v, 1 / Rational(v.begin()->second));
  // Keep the form fully reduced: clear the new pivot from existing rows.
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit != row.end()) {
      const Rational c = hit->second;
      axpy(row, -c, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVec> RowSpace::null_space() const {
  std::vector<SparseVec> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (rows_.count(f)) continue;
    SparseVec x;
    x.emplace(f, 1);
    for (const auto& [p, row] : rows_) {
      auto hit = row.find(f);
      if (hit != row.end()) x.emplace(p, -hit->second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols) {
  RowSpace rs(ncols);
  for (const auto& r : rows) rs.insert(r);
  return rs.null_space();
}

SparseMatrix inverse(const SparseMatrix& m) {
  const int n = m.size();
  TrackedEchelon e;
  for (int j = 0; j < n; ++j)
    if (!e.add(m.col(j))) throw Error("matrix is singular");
  SparseMatrix inv(n);
  for (int i = 0; i < n; ++i) {
    SparseVec unit;
    unit.emplace(i, 1);
    // unit = sum coeffs_j col_j  =>  column i of the inverse is coeffs
    inv.col(i) = e.decompose(unit).coeffs;
  }
  return inv;
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a = m;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error("matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

SparseMatrix nilpotent_exp(const SparseMatrix& x) {
  const int n = x.size();
  SparseMatrix result = SparseMatrix::identity(n);
  SparseMatrix term = SparseMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = (x * term).scaled(Rational(1, k));
    if (term.is_zero()) return result;
    result = result + term;
  }
  if (!(x * term).is_zero()) throw Error("matrix is not nilpotent");
  return result;
}

}  // namespace lierigid
