#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "csr/congruence.hpp"
#include "csr/finite_semiring.hpp"
#include "csr/homomorphism.hpp"

namespace csr {

// Token for the base semiring of natural numbers.
struct Naturals {
  friend bool operator==(Naturals, Naturals) { return true; }
};

class BaseSemiring {
 public:
  BaseSemiring(Naturals) : v_(Naturals{}) {}  // NOLINT
  BaseSemiring(FiniteSemiring s) : v_(std::move(s)) {}  // NOLINT

  bool is_naturals() const noexcept {
    return std::holds_alternative<Naturals>(v_);
  }
  // Throws std::logic_error for the naturals.
  const FiniteSemiring& finite() const;
  std::string name() const;

  friend bool operator==(const BaseSemiring& x, const BaseSemiring& y) {
    return x.v_ == y.v_;
  }

 private:
  std::variant<Naturals, FiniteSemiring> v_;
};

// n -> n*1 in a finite semiring. The sequence 0, 1, 1+1, ... is eventually
// periodic; it is stored up to its first repetition.
class NaturalsScalarMap {
 public:
  explicit NaturalsScalarMap(const FiniteSemiring& a);

  Elem operator()(std::uint64_t n) const;
  // Every value n*1 takes, in order of first occurrence; images()[n] = n*1
  // for n below the first repetition.
  std::span<const Elem> images() const noexcept { return values_; }
  std::size_t cycle_start() const noexcept { return cycle_start_; }
  std::size_t period() const noexcept { return values_.size() - cycle_start_; }

 private:
  std::vector<Elem> values_;
  std::size_t cycle_start_ = 0;
};

// A finite commutative semiring with a structure homomorphism from its base.
class SAlgebra {
 public:
  const BaseSemiring& base() const noexcept { return base_; }
  const FiniteSemiring& algebra() const noexcept { return algebra_; }
  // Present iff the base is finite.
  const std::optional<Homomorphism>& structure() const noexcept {
    return structure_;
  }

  // Every value f(s) for s in the base, without repetition.
  std::vector<Elem> scalar_images() const;
  // s*a = f(s)a. For the naturals, s is the natural number itself; for a
  // finite base, s is a carrier index of the base.
  Elem act(std::uint64_t s, Elem a) const;

 private:
  friend SAlgebra validate_salgebra(BaseSemiring, FiniteSemiring,
                                    std::optional<std::vector<Elem>>);
  SAlgebra(BaseSemiring base, FiniteSemiring algebra,
           std::optional<Homomorphism> structure)
      : base_(std::move(base)),
        algebra_(std::move(algebra)),
        structure_(std::move(structure)),
        naturals_(algebra_) {}

  BaseSemiring base_;
  FiniteSemiring algebra_;
  std::optional<Homomorphism> structure_;
  NaturalsScalarMap naturals_;
};

// For a finite base the structure map must be a homomorphism; when it is
// omitted the unique homomorphism is used, and its absence or
// non-uniqueness is an error (NotAHomomorphism / std::invalid_argument).
// For the naturals no map may be given.
SAlgebra validate_salgebra(BaseSemiring base, FiniteSemiring algebra,
                           std::optional<std::vector<Elem>> structure_map = {});

SAlgebra over_naturals(const FiniteSemiring& a);

struct InitialObject {
  SAlgebra algebra;
  // Generated congruence and projection S -> S/E, for a finite base only.
  std::optional<Congruence> congruence;
  std::optional<Homomorphism> projection;
};

// Pairs (1+2s, 1) and (s^2, s) for every s.
std::vector<std::pair<Elem, Elem>> star_generators(const FiniteSemiring& s);

// Initial object of the subvariety cut out by 1+2x = 1 and x^2 = x:
// S/E for a finite base, NSTAR for the naturals.
InitialObject initial_object(const BaseSemiring& base);

class NotOverInitial : public std::runtime_error {
 public:
  explicit NotOverInitial(const std::string& name)
      : std::runtime_error("algebra " + (name.empty() ? std::string("?") : name) +
                           " admits no structure map from the initial object") {}
};

// Whether the structure map factors through the initial object: for the
// naturals, 1+1+1 = 1; for a finite base, f identifies every pair of the
// generated congruence.
bool is_over_initial(const SAlgebra& a);

// {a | 1+2a = 1 and a^2 = a}; throws NotOverInitial.
Subset star_subset(const SAlgebra& a);

struct Coreflection {
  SAlgebra algebra;
  Homomorphism inclusion;
  Subset subset;
};

// Largest subalgebra satisfying the star identities, with the corestricted
// structure map. Throws NotOverInitial; throws std::logic_error if the star
// subset is not closed.
Coreflection coreflect(const SAlgebra& a);

enum class Flag : unsigned {
  CRings2 = 1u << 0,
  AICSR = 1u << 1,
  BRings = 1u << 2,
  DLat = 1u << 3,
  CSRstar = 1u << 4,
};

class Flags {
 public:
  Flags() = default;
  bool has(Flag f) const noexcept { return (bits_ & static_cast<unsigned>(f)) != 0; }
  void set(Flag f) noexcept { bits_ |= static_cast<unsigned>(f); }
  bool empty() const noexcept { return bits_ == 0; }
  unsigned bits() const noexcept { return bits_; }
  // Comma-separated in the order CRings2, AICSR, BRings, DLat, CSRstar;
  // "-" when empty.
  std::string to_string() const;

  friend bool operator==(Flags, Flags) = default;

 private:
  unsigned bits_ = 0;
};

inline constexpr Flag all_flags[] = {Flag::CRings2, Flag::AICSR, Flag::BRings,
                                     Flag::DLat, Flag::CSRstar};

std::string_view to_string(Flag f);
// Throws std::invalid_argument on an unknown name.
Flag parse_flag(std::string_view name);

Flags classify(const FiniteSemiring& a);

}  // namespace csr
