#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

namespace csr {

// Every data-parallel kernel keeps a serial path; the two must agree
// exactly.
enum class Exec { serial, parallel };

// Calls body(i) for i in [0, n). Under Exec::parallel the iterations run
// on OpenMP threads with dynamic scheduling; body must only write to
// per-index state. If any iteration throws, the exception of the lowest
// such index is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace csr
