#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "csr/finite_semiring.hpp"
#include "csr/homomorphism.hpp"

namespace csr {

inline constexpr std::size_t default_canonical_bound = 6;

class OrderTooLarge : public std::runtime_error {
 public:
  OrderTooLarge(std::size_t order, std::size_t bound)
      : std::runtime_error("order " + std::to_string(order) +
                           " exceeds the configured bound " +
                           std::to_string(bound)),
        order_(order),
        bound_(bound) {}
  std::size_t order() const noexcept { return order_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t order_;
  std::size_t bound_;
};

// Lexicographically least byte string order || add || mul over all
// relabelings fixing 0 and 1. Two algebras have equal forms iff they are
// isomorphic. Scans (n-2)! permutations.
std::string canonical_form(const FiniteSemiring& a,
                           std::size_t max_order = default_canonical_bound);

bool are_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b,
                    std::size_t max_order = default_canonical_bound);

// Backtracking search for a bijective homomorphism; no order bound.
std::optional<Homomorphism> find_isomorphism(const FiniteSemiring& a,
                                             const FiniteSemiring& b);

}  // namespace csr
