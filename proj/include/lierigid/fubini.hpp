#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lierigid/parallel.hpp"
#include "lierigid/repbuild.hpp"

namespace lierigid {

/// The data the Fubini computations need from a realization: the lowering
/// basis u_1..u_m of g_- and the module grades, all in an adapted frame
/// (index 0 = v_0, 1..m = T with v_alpha = u_alpha v_0, m+1..n = N).
struct FramedModule {
  int dim = 0;
  int m = 0;
  std::vector<SparseMatrix> u;  // u[alpha - 1]
  std::vector<int> u_grades;    // u_alpha in g_{-s}
  std::vector<Rational> grades;
  std::vector<int> levels;

  const SparseMatrix& lowering(int alpha) const { return u[static_cast<std::size_t>(alpha - 1)]; }
  const Rational& top_grade() const { return grades.front(); }
};

FramedModule framed(const IrrepRealization& rep);

/// The same module seen from the frame g.v: u_alpha -> g u_alpha g^-1,
/// v_0 -> g v_0, and the adapted frame rebuilt by the same rule.
FramedModule transported(const IrrepRealization& rep, const SparseMatrix& g);

struct OsculatingFiltration {
  std::vector<int> dims;  // dim of span U(g)^k v_0 for k = 0..f
  int length() const { return static_cast<int>(dims.size()) - 1; }
};

/// Spans S^k = S^{k-1} + g_- S^{k-1}; throws if some S^k is not p-stable.
OsculatingFiltration osculating_dims(const IrrepRealization& rep);

/// Multi-indices are sorted tuples of tangent indices alpha in 1..m; normal
/// indices mu are frame indices in m+1..n.
using MultiIndex = std::vector<int>;
using NormalCoeffs = std::map<std::pair<int, MultiIndex>, Rational>;

/// Class of (u_{alpha_1}...u_{alpha_k}) v_0 in N^k, symmetrized.
NormalCoeffs fundamental_form(const FramedModule& fm, int k);

enum class SignConvention {
  Invariant,  // F^{k+1} = (u_beta . F^k) o v^beta with the gl(V) action
  Literal,    // homogeneous coefficient recursion with its printed signs
};

const char* to_string(SignConvention c);

struct FubiniFormTable {
  int m = 0;
  int dim = 0;
  int max_order = 0;
  SignConvention convention = SignConvention::Invariant;
  std::map<int, NormalCoeffs> orders;  // order k -> nonzero coefficients

  Rational coeff(int mu, MultiIndex alphas) const;
  std::size_t nonzero_count() const;
  bool same_coefficients(const FubiniFormTable& other) const { return orders == other.orders; }
};

/// r^mu_{alpha beta} = ((u_alpha u_beta) v_0)^mu; throws if not symmetric.
FubiniFormTable fubini_base(const FramedModule& fm);

/// Orders 2..k_max+1 via the derivation action of u_beta on
/// (V (x) V*)^{(x)(k+1)}, projection to (N (x) L*) (x) (L (x) T*)^{(x)k}, and
/// symmetrization with v^beta appended.
FubiniFormTable fubini_recurse(const FramedModule& fm, int k_max, Exec exec = Exec::Serial);

struct CoefficientRecursionResult {
  FubiniFormTable table;
  /// Coefficients whose value depended on which index was taken as the new
  /// one; empty when the recursion is consistent.
  std::vector<std::string> asymmetries;
};

/// Orders 2..k_max+1 via the homogeneous coefficient recursion, with the eta
/// contractions read off the u_gamma matrices.
CoefficientRecursionResult fubini_coeff_recursion(const FramedModule& fm, int k_max,
                                                  SignConvention convention = SignConvention::Invariant,
                                                  Exec exec = Exec::Serial);

struct GradedFubini {
  /// d -> (order, mu, alphas) -> coefficient
  std::map<int, std::map<std::pair<int, std::pair<int, MultiIndex>>, Rational>> by_degree;
  std::vector<std::string> violations;
};

/// Splits by d = sum of the grades of the u_alpha; a nonzero coefficient must
/// sit in the grade top - d normal direction.
GradedFubini graded_fubini(const FramedModule& fm, const FubiniFormTable& table);

/// Dense-keyed tensor: index tuple -> value, all keys of equal length.
using IndexTensor = std::map<std::vector<int>, Rational>;

/// Average over all permutations of the given key positions.
IndexTensor symmetrize(const IndexTensor& t, const std::vector<int>& positions);

/// min(q + 1, 6)
int default_max_order(const Rational& q);

std::string format_multi_index(const MultiIndex& a);

}  // namespace lierigid
