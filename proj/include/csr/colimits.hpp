#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "csr/congruence.hpp"
#include "csr/finite_semiring.hpp"
#include "csr/homomorphism.hpp"
#include "csr/parallel.hpp"
#include "csr/salgebra.hpp"

namespace csr {

// The elementary tensor left (x) right.
struct TensorGenerator {
  Elem left = 0;
  Elem right = 0;

  friend auto operator<=>(const TensorGenerator&,
                          const TensorGenerator&) = default;
};

// A formal sum of elementary tensors: a multiset kept sorted. The empty
// multiset is 0.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(std::vector<TensorGenerator> members);

  const std::vector<TensorGenerator>& members() const noexcept {
    return members_;
  }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_zero() const noexcept { return members_.empty(); }
  // "0", or "(a,b)+(c,d)+..."
  std::string to_string() const;

  friend auto operator<=>(const TensorElement&, const TensorElement&) = default;

 private:
  std::vector<TensorGenerator> members_;
};

// Multiset union.
TensorElement tensor_sum(const TensorElement& x, const TensorElement& y);
// Distributes (a,b)(a',b') = (aa', bb') over both sums; not normalized.
TensorElement tensor_product(const TensorElement& x, const TensorElement& y,
                             const FiniteSemiring& left,
                             const FiniteSemiring& right);

// Greedy size reduction by the bilinearity relations. Generators with a
// zero coordinate are deleted; then, until no rule applies, the first two
// members sharing a right coordinate are merged to (a+a', b), or failing
// that the first two sharing a left coordinate are merged to (a, b+b').
// The result has pairwise distinct left and pairwise distinct right
// coordinates, hence at most min(|A|,|B|) - 1 members.
TensorElement tensor_normalize(const TensorElement& x,
                               const FiniteSemiring& left,
                               const FiniteSemiring& right);

class BaseMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The quotient could not be certified at any bound up to the configured
// maximum; the result is withheld. This means "unknown", never "infinite".
class BoundUnstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllDefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyDiagram : public std::runtime_error {
 public:
  EmptyDiagram()
      : std::runtime_error(
            "EmptyDiagram: colimits are only available for diagrams with at "
            "least one object") {}
};

struct TensorOptions {
  // Largest universe bound tried; 0 means the initial bound plus two.
  std::size_t max_bound = 0;
  // Universes above this many multisets are not built; the attempt then
  // counts as unstable.
  std::size_t max_universe = 2'000'000;
  Exec exec = Exec::parallel;
};

struct TensorQuotient {
  SAlgebra left_factor;
  SAlgebra right_factor;
  std::size_t bound = 0;
  // Every multiset of nonzero generators of size <= bound.
  std::vector<TensorElement> universe;
  // universe index -> element of result.
  std::vector<Elem> class_of;
  // result element -> its least normalized member.
  std::vector<TensorElement> representatives;
  SAlgebra result;
  Homomorphism left_injection;
  Homomorphism right_injection;

  const FiniteSemiring& algebra() const noexcept { return result.algebra(); }
};

// The quotient at one fixed universe bound, without the stability check.
TensorQuotient tensor_quotient_at(const SAlgebra& a, const SAlgebra& b,
                                  std::size_t bound, Exec exec = Exec::parallel,
                                  std::size_t max_universe = 2'000'000);

// Binary coproduct of two S-algebras over a common base, built as the
// tensor product. Starts at bound min(|A|,|B|) + 1 and accepts the first
// bound whose quotient is isomorphic to the one at bound + 1.
TensorQuotient tensor_coproduct(const SAlgebra& a, const SAlgebra& b,
                                const TensorOptions& options = {});

// Mediating map T -> C for a cocone p: A -> C, q: B -> C. Throws
// IllDefined if two members of a class disagree.
Homomorphism copair(const TensorQuotient& t, const Homomorphism& p,
                    const Homomorphism& q);

// Quotient of the common target by the congruence generated by
// (f(a), g(a)).
Quotient coequalizer(const Homomorphism& f, const Homomorphism& g);

struct Pushout {
  FiniteSemiring algebra;
  Homomorphism left_leg;   // A -> P
  Homomorphism right_leg;  // B -> P
};

// Pushout of A <-f- Z -g-> B: the coequalizer of the two composites into
// the coproduct of A and B.
Pushout pushout(const SAlgebra& a, const SAlgebra& b, const Homomorphism& f,
                const Homomorphism& g, const TensorOptions& options = {});
// Same, with A and B taken over the naturals.
Pushout pushout(const Homomorphism& f, const Homomorphism& g,
                const TensorOptions& options = {});

struct DiagramArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Homomorphism map;
};

struct Diagram {
  std::vector<SAlgebra> objects;
  std::vector<DiagramArrow> arrows;
};

struct Colimit {
  FiniteSemiring algebra;
  std::vector<Homomorphism> legs;  // one per object
};

// Left-associated coproduct of all objects, then the coequalizer of every
// arrow u: i -> j via the pairs (leg_i(x), leg_j(u(x))). Throws
// EmptyDiagram, BaseMismatch, std::invalid_argument for malformed arrows,
// and anything tensor_coproduct throws.
Colimit colimit_diagram(const Diagram& d, const TensorOptions& options = {});

}  // namespace csr
