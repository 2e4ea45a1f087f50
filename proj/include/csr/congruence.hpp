#pragma once

#include <span>
#include <utility>
#include <vector>

#include "csr/finite_semiring.hpp"
#include "csr/homomorphism.hpp"

namespace csr {

// A set of carrier indices of one algebra, kept sorted and unique.
class Subset {
 public:
  Subset(FiniteSemiring algebra, std::vector<Elem> members);

  const FiniteSemiring& algebra() const noexcept { return algebra_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem e) const;
  bool is_full() const noexcept { return members_.size() == algebra_.order(); }

  friend bool operator==(const Subset& x, const Subset& y) {
    return x.members_ == y.members_ && x.algebra_ == y.algebra_;
  }

 private:
  FiniteSemiring algebra_;
  std::vector<Elem> members_;
};

struct Subalgebra {
  Subset subset;
  // Re-indexed with 0 -> 0, 1 -> 1 and the remaining members in increasing
  // order; inclusion(i) is the member that became index i.
  FiniteSemiring algebra;
  Homomorphism inclusion;
};

// Smallest subset containing seed, 0 and 1 that is closed under + and *.
Subalgebra subalgebra_close(const FiniteSemiring& a, std::span<const Elem> seed);
Subalgebra subalgebra_close(const Subset& seed);

// A partition of the carrier, stored as the least member of each element's
// class.
class Congruence {
 public:
  // Throws std::invalid_argument if rep is not a representative assignment
  // or the partition is not compatible with + and *.
  Congruence(FiniteSemiring algebra, std::vector<Elem> rep);

  const FiniteSemiring& algebra() const noexcept { return algebra_; }
  Elem representative(Elem a) const { return rep_.at(a); }
  bool related(Elem a, Elem b) const { return rep_.at(a) == rep_.at(b); }
  std::size_t number_of_classes() const;
  // Classes ordered by least member, members increasing.
  std::vector<std::vector<Elem>> classes() const;
  std::span<const Elem> representatives() const noexcept { return rep_; }

 private:
  FiniteSemiring algebra_;
  std::vector<Elem> rep_;
};

// Whether the partition given by rep (rep[a] = some fixed label of a's
// class) is compatible with both operations.
bool is_compatible_partition(const FiniteSemiring& a, std::span<const Elem> rep);

// Least congruence containing pairs: union-find plus a worklist; merging a
// and b enqueues (a+c, b+c) and (ac, bc) for every c.
Congruence congruence_generated(const FiniteSemiring& a,
                                std::span<const std::pair<Elem, Elem>> pairs);

Congruence identity_congruence(const FiniteSemiring& a);

struct Quotient {
  FiniteSemiring algebra;
  Homomorphism projection;
};

// Classes re-indexed with [0] -> 0, [1] -> 1 and the rest by least member.
Quotient quotient(const Congruence& e);

struct Product {
  FiniteSemiring algebra;
  Homomorphism first;
  Homomorphism second;
  // components[i] is the pair represented by index i.
  std::vector<std::pair<Elem, Elem>> components;
};

Product direct_product(const FiniteSemiring& a, const FiniteSemiring& b);

}  // namespace csr
