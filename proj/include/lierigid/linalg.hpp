#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lierigid/rational.hpp"

namespace lierigid {

/// Square sparse matrix stored by columns: column j is the image of basis
/// vector j. Used for every module-level operator.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(int n) : cols_(static_cast<std::size_t>(n)) {}

  static SparseMatrix identity(int n);

  int size() const { return static_cast<int>(cols_.size()); }

  const SparseVec& col(int j) const { return cols_[static_cast<std::size_t>(j)]; }
  SparseVec& col(int j) { return cols_[static_cast<std::size_t>(j)]; }

  Rational at(int i, int j) const { return entry(col(j), i); }
  void set(int i, int j, const Rational& v);

  SparseVec apply(const SparseVec& x) const;

  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix scaled(const Rational& a) const;
  SparseMatrix transpose() const;

  bool is_zero() const;
  bool operator==(const SparseMatrix& other) const { return cols_ == other.cols_; }

  std::size_t nonzeros() const;

  /// Row-major flattening (entry (i,j) at i*n+j), the coordinate system used
  /// when matrices are treated as vectors of gl(V).
  SparseVec flatten() const;
  static SparseMatrix unflatten(const SparseVec& v, int n);

 private:
  std::vector<SparseVec> cols_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Incremental echelon form that remembers how each reduced row was built
/// from the inserted generators. decompose(v) splits v = residual + sum_k
/// coeffs[k] * generator_k; a zero residual means v lies in the span.
class TrackedEchelon {
 public:
  struct Decomposition {
    SparseVec residual;
    SparseVec coeffs;
  };

  Decomposition decompose(const SparseVec& v) const;

  /// Adds v as a new generator if it is independent of the current span.
  /// Returns the generator index, or nullopt when v was dependent.
  std::optional<int> add(const SparseVec& v);

  bool contains(const SparseVec& v) const { return decompose(v).residual.empty(); }

  int rank() const { return generators_; }

 private:
  struct Row {
    SparseVec vec;   // pivot entry normalized to 1
    SparseVec expr;  // vec = sum expr[k] generator_k
  };
  std::map<int, Row> rows_;  // keyed by pivot column
  int generators_ = 0;
};

/// Exact rank of a set of sparse vectors.
int rank_of(const std::vector<SparseVec>& vectors);

/// Basis of {x : <row, x> = 0 for every row}, computed from the reduced row
/// echelon form. The basis is canonical for the row space (one vector per
/// free column, free coordinate 1, other free coordinates 0).
std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols);

/// Incrementally maintained reduced row space; null_space() of the rows
/// inserted so far. Insertion order does not affect the result.
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}
  bool insert(SparseVec v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  std::vector<SparseVec> null_space() const;

 private:
  int ncols_;
  std::map<int, SparseVec> rows_;
};

/// Exact inverse via Gauss-Jordan; throws Error when singular.
SparseMatrix inverse(const SparseMatrix& m);

/// Dense inverse of a small integer/rational matrix given row-major.
std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Rational>>& m);

/// exp(X) for nilpotent X; throws Error if X^k does not vanish for k <= n.
SparseMatrix nilpotent_exp(const SparseMatrix& x);

}  // namespace lierigid
