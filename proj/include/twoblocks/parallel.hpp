#pragma once

#include <cstddef>

namespace twoblocks {

// Selects the OpenMP kernel or the plain loop it is checked against.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). Iterations must touch disjoint state;
/// under either policy the result is then identical.
template <class Body>
void for_each_index(Execution exec, std::size_t count, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace twoblocks
