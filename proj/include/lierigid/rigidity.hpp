#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lierigid/grading.hpp"
#include "lierigid/parallel.hpp"
#include "lierigid/repbuild.hpp"

namespace lierigid {

/// Hypothesis flags for one simple factor carrying crossed nodes. Flags are
/// evaluated on every labeling of the factor related by a low-rank
/// coincidence (A1 = B1 = C1, B2 = C2, A3 = D3).
struct FactorDiagnostics {
  std::string factor;           // e.g. "B3"
  NodeSet local_nodes;          // 1-based within the factor
  std::vector<std::string> labelings;  // equivalent "type:{nodes}" forms
  bool is_quadric_type = false;
  bool is_A_with_extreme_node = false;
};

std::vector<FactorDiagnostics> factor_conditions(const RootSystem& rs, const NodeSet& nodes);

struct RigidityVerdict {
  int q = 0;
  bool clause_a_applies = false;
  bool clause_b_applies = false;
  std::optional<int> order;
  std::vector<FactorDiagnostics> factor_diagnostics;
  /// Set when (G, pi) is one of the embeddings whose symmetry group is
  /// strictly larger than G (P^{2n-1} from C_n, the G2 quadric, the spinor
  /// variety of B_r); informational only.
  std::optional<std::string> g0_enlargement;
};

RigidityVerdict rigidity_order(const RootSystem& rs, const NodeSet& nodes, const Weight& pi);

/// d = q + p + 1; rejects p < -q.
int pkey_order(int q, int p);

struct TableEntry {
  std::string group;  // "B5"
  std::string node;   // "3", or "all" for the full flag
  Integer q;
  Integer expected;
};

struct QTable {
  std::string title;
  std::vector<TableEntry> entries;

  bool matches() const { return render(false, false) == render(false, true); }
  /// Rendering of the computed values, or of the reference values.
  std::string render(bool markdown, bool expected_values) const;
};

/// q for G/P_i in the fundamental representation: A_1..8, B_1..8, C_1..8,
/// D_3..8 and all exceptional nodes.
QTable table1_generate(Exec exec = Exec::Serial);
/// q = 2 rho(E) for G/B in V_rho over the same ranks.
QTable table2_generate(Exec exec = Exec::Serial);

struct FilteredSystemDims {
  int p = 0;
  int r = 0;
  int q = 0;
  std::map<int, int> gl_dims;          // grade s -> dim gl(V)_s
  std::map<int, int> gl_dims_by_pairs; // same, counted from basis index pairs
  std::map<int, int> g_dims;
  std::map<int, int> g_perp_dims;
  int rank_I = 0;
  int rank_J = 0;
  std::map<int, int> lambda_dims;      // s -> dim g_perp_s (x) g_{>= max(r - s, 1)}
  long sigma_dim = 0;                  // dim gl(V) + sum of lambda blocks
};

FilteredSystemDims filtered_system_dims(const IrrepRealization& rep, int p, int r);

}  // namespace lierigid
