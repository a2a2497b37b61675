#pragma once

#include <string>
#include <vector>

#include "lierigid/parallel.hpp"
#include "lierigid/repbuild.hpp"

namespace lierigid {

/// The algebra k = {zeta in gl(V) : (u . zeta)^mu_0 = 0 for all u in U(g_-)}
/// for a realization, with the data needed to check its structure.
struct KernelReport {
  int dim_v = 0;
  int degree_bound = 0;
  int rows = 0;                          // rank of the assembled constraint system
  std::vector<GlElement> kernel_basis;
  std::vector<GlElement> g_basis;        // embed_g of the realization
  int dim_k = 0;
  int dim_g = 0;
  bool contains_scalars = false;
  bool scalars_in_g = false;
  bool bracket_closed = false;
  bool g_in_k = false;
  bool g_module = false;
  int enlargement = 0;                   // dim_k - dim_g - (scalars outside g ? 1 : 0)
};

/// Solves the defining linear system using all sorted monomials
/// u_{alpha_1}...u_{alpha_k} of total grade <= degree_bound. A bound of 0
/// selects 2q; smaller positive bounds than 2q are rejected.
KernelReport compute_kernel(const IrrepRealization& rep, int degree_bound = 0, Exec exec = Exec::Serial);

struct StructureCheck {
  bool ok = true;
  std::string witness;
};

StructureCheck check_bracket_closed(const KernelReport& report);
StructureCheck check_g_in_k(const KernelReport& report);
StructureCheck check_k_is_g_module(const KernelReport& report);

/// Whether a matrix lies in span(kernel_basis).
bool in_kernel(const KernelReport& report, const GlElement& x);

}  // namespace lierigid
