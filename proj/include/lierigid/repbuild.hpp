#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lierigid/grading.hpp"
#include "lierigid/linalg.hpp"
#include "lierigid/rootsys.hpp"

namespace lierigid {

/// An element of gl(V), written in the realization's basis.
using GlElement = SparseMatrix;

/// Adapted frame v_0, ..., v_n of V built from a highest weight line and a
/// graded basis u_1..u_m of g_-: v_alpha = u_alpha . v_0 spans T, and N is
/// filled level by level with u_alpha applied to the previous osculating
/// level, so the frame is adapted to the osculating filtration. N is then
/// stably reordered by decreasing E-grade.
struct Frame {
  std::vector<SparseVec> vectors;  // in ambient coordinates
  std::vector<int> levels;         // 0 for v_0, 1 for T, k for N^k
  std::vector<Rational> grades;    // E-eigenvalues
};

Frame build_frame(const SparseVec& v0, const Rational& top_grade, const std::vector<SparseMatrix>& lowering,
                  const std::vector<int>& lowering_grades, int dim);

/// Change-of-basis matrix whose columns are the frame vectors.
SparseMatrix frame_matrix(const Frame& frame, int dim);

/// p_inv * x * p: an ambient operator written in the frame.
SparseMatrix in_frame(const SparseMatrix& x, const SparseMatrix& p, const SparseMatrix& p_inv);

/// Irreducible module V_pi with exact matrices for the Chevalley generators,
/// written in the canonical frame: index 0 is the highest weight vector v_0,
/// indices 1..m span T with v_alpha = u_alpha . v_0, indices m+1..n span N.
class IrrepRealization {
 public:
  const RootSystem& root_system() const { return rs_; }
  const Weight& highest_weight() const { return pi_; }
  /// J = support(pi).
  const NodeSet& nodes() const { return nodes_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  int m() const { return static_cast<int>(lowering_roots_.size()); }

  const std::vector<Weight>& basis_weights() const { return weights_; }
  const std::vector<Rational>& grades() const { return grades_; }
  const std::vector<int>& osculation_levels() const { return levels_; }
  const Rational& top_grade() const { return grades_.front(); }

  bool is_tangent(int i) const { return i >= 1 && i <= m(); }
  bool is_normal(int i) const { return i > m() && i < dim(); }

  const SparseMatrix& e(int i) const;  // 1-based simple root index
  const SparseMatrix& f(int i) const;
  const SparseMatrix& h(int i) const;
  const SparseMatrix& root_e(int root) const;  // positive root index
  const SparseMatrix& root_f(int root) const;

  /// Positive roots beta with u_alpha = f_beta, alpha = 1..m, ordered by
  /// decreasing grade of u_alpha, then root order.
  const std::vector<int>& lowering_roots() const { return lowering_roots_; }
  const SparseMatrix& u(int alpha) const { return root_f(lowering_roots_[static_cast<std::size_t>(alpha - 1)]); }
  /// s with u_alpha in g_{-s}.
  int u_grade(int alpha) const { return u_grades_[static_cast<std::size_t>(alpha - 1)]; }

  const SparseMatrix& generator(std::string_view label) const;
  SparseMatrix& generator(std::string_view label);
  std::vector<std::string> generator_labels() const;

  friend IrrepRealization build_irrep(const RootSystem&, const Weight&, int);
  friend IrrepRealization load_realization(const std::string&);

 private:
  RootSystem rs_;
  Weight pi_;
  NodeSet nodes_;
  std::vector<Weight> weights_;
  std::vector<Rational> grades_;
  std::vector<int> levels_;
  std::vector<int> lowering_roots_;
  std::vector<int> u_grades_;
  // Simple root vectors are shared between their "e1" and "e[1,0]" labels.
  std::vector<SparseMatrix> mats_;
  std::map<std::string, int, std::less<>> labels_;
  std::vector<int> e_, f_, h_, root_e_, root_f_;

  void add_matrix(const std::string& label, SparseMatrix m);
  void index_labels();
};

std::string simple_label(char kind, int i);           // "e1", "f2", "h3"
std::string root_label(char kind, const Root& root);  // "e[1,1,0]"

constexpr int kDefaultDimCap = 5000;

IrrepRealization build_irrep(const RootSystem& rs, const Weight& pi, int dim_cap = kDefaultDimCap);

/// Cartan elements h_1..h_r, then e_beta, f_beta for every positive root.
std::vector<GlElement> embed_g(const IrrepRealization& rep);

std::vector<Rational> act(const IrrepRealization& rep, std::string_view label, const std::vector<Rational>& v);
std::vector<Rational> act(const IrrepRealization& rep, const GlElement& x, const std::vector<Rational>& v);

struct RelationReport {
  bool ok = true;
  std::string first_violation;
};

RelationReport verify_relations(const IrrepRealization& rep);

/// Versioned JSON cache ("p/q" rational strings, sparse triplets).
constexpr int kCacheVersion = 1;
void save_realization(const IrrepRealization& rep, const std::string& path);
IrrepRealization load_realization(const std::string& path);

}  // namespace lierigid
