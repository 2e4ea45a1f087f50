#pragma once

// Brute-force reference implementations used only as test oracles. They
// share nothing with the library beyond reading operation tables.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "csr/finite_semiring.hpp"

namespace oracle {

using csr::Elem;

struct Tables {
  std::size_t n = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
};

Tables tables_of(const csr::FiniteSemiring& a);

// Commutative semiring axioms with the identities located by search, not
// assumed at 0 and 1.
bool is_commutative_semiring(const Tables& t);

// Searches all n! bijections.
bool isomorphic(const Tables& x, const Tables& y);

// Every symmetric pair of tables on n elements, filtered by the axioms and
// reduced by pairwise isomorphism tests. Only sensible for n <= 3.
std::vector<Tables> all_semirings(std::size_t n);

// Every map A -> B preserving 0, 1, + and *, lexicographic in the images.
std::vector<std::vector<Elem>> all_homs(const csr::FiniteSemiring& a,
                                        const csr::FiniteSemiring& b);

// Every congruence, as class labels normalized to the least member.
std::vector<std::vector<Elem>> all_congruences(const csr::FiniteSemiring& a);

// Intersection of all congruences containing pairs.
std::vector<Elem> least_congruence(
    const csr::FiniteSemiring& a,
    const std::vector<std::pair<Elem, Elem>>& pairs);

// Intersection of all closed subsets containing seed, 0 and 1.
std::vector<Elem> least_subalgebra(const csr::FiniteSemiring& a,
                                   const std::vector<Elem>& seed);

}  // namespace oracle
