#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csr {

// Index into the carrier {0, ..., n-1} of a finite semiring.
using Elem = std::uint32_t;

enum class Axiom {
  NonAssociative,
  NonCommutative,
  BadIdentityElement,
  AbsorptionFails,
  DistributivityFails,
};

std::string_view to_string(Axiom axiom);

// One violated axiom together with the first witness found, in
// lexicographic order of the witness tuple.
struct Violation {
  Axiom axiom;
  std::string law;           // e.g. "(x+y)+z = x+(y+z)"
  std::array<Elem, 3> witness{};
  std::size_t arity = 0;     // number of meaningful entries in witness

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool contains(Axiom axiom) const;
  // First violation of the given kind; throws std::out_of_range if absent.
  const Violation& first(Axiom axiom) const;
  std::string describe() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Scan every semiring axiom on an n x n pair of tables. Tables are row-major;
// the precondition (right size, entries in range) throws
// std::invalid_argument since it is not an axiom.
ValidationReport validate_semiring(std::size_t order,
                                   std::span<const Elem> add,
                                   std::span<const Elem> mul);

// A validated commutative semiring on {0, ..., n-1}. 0 is the additive
// identity and, for n >= 2, 1 is the multiplicative identity; when n == 1
// the single element is both. Instances are immutable and cheap to copy.
class FiniteSemiring {
 public:
  // Validates the tables and throws ValidationError on any violation.
  static FiniteSemiring make(std::size_t order, std::vector<Elem> add,
                             std::vector<Elem> mul, std::string name = {});

  std::size_t order() const noexcept { return impl_->order; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return impl_->order == 1 ? 0 : 1; }

  Elem add(Elem a, Elem b) const noexcept {
    return impl_->add[a * impl_->order + b];
  }
  Elem mul(Elem a, Elem b) const noexcept {
    return impl_->mul[a * impl_->order + b];
  }

  std::span<const Elem> add_table() const noexcept { return impl_->add; }
  std::span<const Elem> mul_table() const noexcept { return impl_->mul; }

  const std::string& name() const noexcept { return impl_->name; }
  FiniteSemiring renamed(std::string name) const;

  // Same order and tables; the name is not compared.
  friend bool operator==(const FiniteSemiring& x, const FiniteSemiring& y);

 private:
  struct Impl {
    std::size_t order;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::string name;
  };
  explicit FiniteSemiring(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// A one-line rendering of the tables, used in report witnesses so that a
// failing check can be replayed.
std::string compact(const FiniteSemiring& a);

}  // namespace csr
