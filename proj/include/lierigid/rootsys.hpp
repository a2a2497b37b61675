#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lierigid/rational.hpp"

namespace lierigid {

/// One simple factor of a semisimple algebra; `offset` is the global index of
/// its first node in the concatenated coordinate blocks.
struct Factor {
  char type = 'A';
  int rank = 1;
  int offset = 0;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  bool operator==(const Factor&) const = default;
};

/// Coefficients of a root in the simple-root basis.
using Root = std::vector<int>;

/// Crossed Dynkin nodes, 1-based global node numbers (Bourbaki numbering
/// within each factor, factors concatenated).
using NodeSet = std::set<int>;

/// A weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords);
  static Weight from_ints(const std::vector<int>& coords);

  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  bool dominant_integral() const { return dominant_integral_; }
  bool is_zero() const;

  /// Nodes with nonzero coefficient (1-based).
  NodeSet support() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  bool operator==(const Weight& other) const { return coords_ == other.coords_; }
  bool operator<(const Weight& other) const { return coords_ < other.coords_; }

  std::vector<std::string> to_strings() const;

 private:
  std::vector<Rational> coords_;
  bool dominant_integral_ = true;
};

/// Cartan data and positive roots of a product of simple Lie algebras.
/// Immutable after construction.
///
/// Conventions: cartan(i, j) = <alpha_i^vee, alpha_j>, so [h_i, e_j] =
/// cartan(i, j) e_j and the fundamental-weight coordinates of alpha_j form
/// column j. Positive roots are ordered by height, then by descending
/// lexicographic order of their coefficient vectors (alpha_1 first).
class RootSystem {
 public:
  const std::vector<Factor>& factors() const { return factors_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  /// Index into positive_roots(), or -1.
  int root_index(const Root& r) const;
  int height(int root) const;
  int dim() const { return rank_ + 2 * num_positive_roots(); }

  /// Highest root of the factor containing node index `node0` (0-based).
  const Root& highest_root(int factor) const { return highest_[static_cast<std::size_t>(factor)]; }
  int factor_of_node(int node0) const;

  /// Squared length of simple root i (normalized per factor, shortest = 1
  /// except G2 which uses 1 and 3).
  const Rational& root_length(int i) const { return lengths_[static_cast<std::size_t>(i)]; }

  /// <lambda, beta^vee> for a positive root beta.
  Rational pairing(const Weight& lambda, int root) const;
  /// Fundamental-weight coordinates of a root lattice element.
  Weight root_as_weight(const Root& r) const;

  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inv_cartan_; }

  std::string label() const;

  friend RootSystem build_root_system(const std::vector<std::pair<char, int>>& factors);

 private:
  std::vector<Factor> factors_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> lengths_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<Root> highest_;
  std::vector<std::vector<Rational>> inv_cartan_;
};

/// Builds the root system of a product of simple factors. Valid ranks:
/// A>=1, B>=1, C>=1, D>=3 (D2 is expanded to A1xA1), E6-8, F4, G2.
RootSystem build_root_system(const std::vector<std::pair<char, int>>& factors);

/// Parses "E8", "A3xA1", "a2" ... into factors.
std::vector<std::pair<char, int>> parse_type(std::string_view text);
RootSystem root_system(std::string_view text);

/// Parses "1,0,2" or blocked "1,0x2" (blocks aligned with the factors).
Weight parse_weight(const RootSystem& rs, std::string_view text);
/// Inverse of parse_weight, always in blocked form.
std::string format_weight(const RootSystem& rs, const Weight& w);
/// Parses "1,3" into a node set, validating range.
NodeSet parse_nodes(const RootSystem& rs, std::string_view text);

Weight zero_weight(const RootSystem& rs);
Weight fundamental_weight(const RootSystem& rs, int node);  // 1-based
Weight rho(const RootSystem& rs);
/// sum_{j in J} pi_j
Weight weight_for_nodes(const RootSystem& rs, const NodeSet& nodes);

/// Coefficients c with w = sum c_j alpha_j.
std::vector<Rational> weight_in_root_basis(const RootSystem& rs, const Weight& w);

/// pi* = -w0(pi), via the diagram involution of each factor.
Weight dual_weight(const RootSystem& rs, const Weight& pi);

/// Weyl dimension formula.
Integer weyl_dim(const RootSystem& rs, const Weight& pi);

}  // namespace lierigid
