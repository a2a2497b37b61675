#pragma once

#include <cstddef>

namespace lierigid {

/// Kernels that have an OpenMP variant take this switch; Serial is the
/// reference implementation used by the tests.
enum class Exec { Serial, Parallel };

/// Runs body(i) for i in [0, n). Iterations must write to disjoint state.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace lierigid
