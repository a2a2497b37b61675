#include <doctest.h>

#include "lierigid/kernel.hpp"

using namespace lierigid;

namespace {

IrrepRealization build(const char* type, const char* weight) {
  const RootSystem rs = root_system(type);
  return build_irrep(rs, parse_weight(rs, weight));
}

}  // namespace

TEST_CASE("kernel dimensions") {
  struct Case {
    const char* type;
    const char* weight;
    int dim_k;
    int enlargement;
  };
  for (const auto& c : std::vector<Case>{{"A1", "1", 4, 0},
                                         {"C2", "1,0", 16, 5},
                                         {"B3", "0,0,1", 29, 7},
                                         {"A2", "1,1", 9, 0},
                                         {"G2", "1,0", 22, 7},
                                         {"A1xA1", "1x1", 7, 0},
                                         {"B2", "1,0", 11, 0},
                                         {"G2", "0,1", 15, 0}}) {
    CAPTURE(c.type);
    CAPTURE(c.weight);
    const KernelReport r = compute_kernel(build(c.type, c.weight));
    CHECK(r.dim_k == c.dim_k);
    CHECK(r.enlargement == c.enlargement);
    CHECK(r.contains_scalars);
    CHECK_FALSE(r.scalars_in_g);
    CHECK(r.bracket_closed);
    CHECK(r.g_in_k);
    CHECK(r.g_module);
    CHECK(r.dim_k >= r.dim_g);
  }
}

TEST_CASE("kernel dimension is stable past 2q") {
  const IrrepRealization rep = build("A2", "1,1");
  const KernelReport a = compute_kernel(rep, 8);
  const KernelReport b = compute_kernel(rep, 9);
  CHECK(a.dim_k == b.dim_k);
  CHECK_THROWS_AS(compute_kernel(rep, 7), Error);
}

TEST_CASE("serial and parallel kernels agree") {
  const IrrepRealization rep = build("G2", "0,1");
  const KernelReport s = compute_kernel(rep, 0, Exec::Serial);
  const KernelReport p = compute_kernel(rep, 0, Exec::Parallel);
  CHECK(s.dim_k == p.dim_k);
  CHECK(s.kernel_basis == p.kernel_basis);
}

TEST_CASE("membership checks") {
  const IrrepRealization rep = build("A2", "1,1");
  KernelReport r = compute_kernel(rep);
  CHECK(in_kernel(r, SparseMatrix::identity(rep.dim())));
  SparseMatrix generic(rep.dim());
  generic.set(rep.m() + 1, 0, 1);
  CHECK_FALSE(in_kernel(r, generic));

  // a basis polluted by a non-kernel matrix fails the structure checks
  KernelReport bad = r;
  bad.kernel_basis.push_back(generic);
  SparseMatrix other(rep.dim());
  other.set(0, rep.dim() - 1, 1);
  bad.kernel_basis.push_back(other);
  const auto closed = check_bracket_closed(bad);
  CHECK_FALSE(closed.ok);
  CHECK_FALSE(closed.witness.empty());
  CHECK_FALSE(check_k_is_g_module(bad).ok);

  KernelReport shrunk = r;
  shrunk.kernel_basis.pop_back();
  CHECK_FALSE(check_g_in_k(shrunk).ok);

  KernelReport scalar_only = r;
  scalar_only.kernel_basis = {SparseMatrix::identity(rep.dim())};
  CHECK(check_bracket_closed(scalar_only).ok);
}
