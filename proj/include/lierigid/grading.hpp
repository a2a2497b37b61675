#pragma once

#include <map>

#include "lierigid/rootsys.hpp"

namespace lierigid {

class IrrepRealization;

/// The grading element E(J) = sum_{j in J} E_j (E_j dual to the simple
/// roots) together with the graded dimensions of g.
struct GradingProfile {
  RootSystem rs;
  NodeSet nodes;
  int max_grade = 0;               // a
  std::map<int, int> g_dims;       // grade d in [-a, a] -> dim g_d
  std::vector<int> root_grades;    // grade of each positive root

  int dim_g_minus() const;  // = dim g_+
  int dim(int grade) const;
};

GradingProfile grading_element(const RootSystem& rs, const NodeSet& nodes);

/// w(E) = sum_{j in J} c_j with w = sum c_j alpha_j.
Rational eval_E(const GradingProfile& gp, const Weight& w);

/// q = pi(E) + pi*(E). Requires support(pi) == J unless enforce_support is
/// false; throws if the result is not a positive integer.
Rational q_value(const RootSystem& rs, const NodeSet& nodes, const Weight& pi, bool enforce_support = true);

/// Dimensions of the E-eigenspaces of the module, keyed by exact grade.
std::map<Rational, int> graded_module_dims(const GradingProfile& gp, const IrrepRealization& rep);

/// Dimension of Sym_d g_+ where a generator from g_s has degree s.
Integer sym_graded_dims(const GradingProfile& gp, int d);

}  // namespace lierigid
