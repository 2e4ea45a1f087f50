#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "csr/finite_semiring.hpp"

namespace csr {

enum class HomLaw { PreservesZero, PreservesOne, PreservesAdd, PreservesMul };

struct HomViolation {
  HomLaw law;
  Elem a = 0;
  Elem b = 0;
  std::string detail;  // e.g. "f(1+1)=f(0)=0 != 1=f(1)+f(1)"
};

class NotAHomomorphism : public std::runtime_error {
 public:
  explicit NotAHomomorphism(HomViolation v)
      : std::runtime_error("not a homomorphism: " + v.detail),
        violation_(std::move(v)) {}
  const HomViolation& violation() const noexcept { return violation_; }

 private:
  HomViolation violation_;
};

// A map between carriers preserving 0, 1, + and *. Only obtainable
// through validate_hom and the operations built on it.
class Homomorphism {
 public:
  const FiniteSemiring& source() const noexcept { return source_; }
  const FiniteSemiring& target() const noexcept { return target_; }
  std::span<const Elem> map() const noexcept { return map_; }
  Elem operator()(Elem a) const { return map_.at(a); }

  bool is_injective() const;
  bool is_surjective() const;

  // Same source, target and map.
  friend bool operator==(const Homomorphism& f, const Homomorphism& g);

 private:
  friend Homomorphism validate_hom(std::vector<Elem>, const FiniteSemiring&,
                                   const FiniteSemiring&);
  Homomorphism(FiniteSemiring s, FiniteSemiring t, std::vector<Elem> map)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  FiniteSemiring source_;
  FiniteSemiring target_;
  std::vector<Elem> map_;
};

// First violated law, checked in the order 0, 1, + over pairs, * over pairs.
// Throws std::invalid_argument if map is not total on the source or leaves
// the target carrier.
std::optional<HomViolation> hom_violation(std::span<const Elem> map,
                                          const FiniteSemiring& source,
                                          const FiniteSemiring& target);

// Throws NotAHomomorphism with the first violation.
Homomorphism validate_hom(std::vector<Elem> map, const FiniteSemiring& source,
                          const FiniteSemiring& target);

Homomorphism identity_hom(const FiniteSemiring& a);

// g after f; throws std::invalid_argument if f's target is not g's source.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

// Every homomorphism source -> target, lexicographic in the image vector.
std::vector<Homomorphism> hom_enumerate(const FiniteSemiring& source,
                                        const FiniteSemiring& target);

}  // namespace csr
