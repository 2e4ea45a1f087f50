#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csr/finite_semiring.hpp"
#include "csr/parallel.hpp"
#include "csr/salgebra.hpp"

namespace csr {

inline constexpr std::size_t default_max_enumeration_order = 4;

// SEMIRING_MAX_ORDER if set to a positive integer, else the default.
std::size_t enumeration_cap();

struct CatalogEntry {
  FiniteSemiring algebra;
  Flags flags;
  std::string canonical;
};

// Isomorphism classes of finite commutative semirings, at most one entry
// per class, sorted by (order, canonical form).
class Catalog {
 public:
  Catalog() = default;
  // Deduplicates by canonical form; the first of each class is kept.
  explicit Catalog(const std::vector<FiniteSemiring>& algebras);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // Entries of order <= max_order.
  Catalog up_to(std::size_t max_order) const;
  // Entries carrying flag.
  Catalog with(Flag flag) const;
  // Index of the entry isomorphic to a, if any.
  std::optional<std::size_t> find(const FiniteSemiring& a) const;

  // Merge, keeping deduplication and order.
  Catalog& add(const Catalog& other);

 private:
  void insert(const FiniteSemiring& a);
  void sort();

  std::vector<CatalogEntry> entries_;
};

// Every commutative semiring of order n up to isomorphism. Entries
// isomorphic to a built-in fixture carry its name; the others are named
// Sn_k in catalog order. Throws OrderTooLarge for n above max_order.
Catalog enumerate_semirings(std::size_t n, Exec exec = Exec::parallel,
                            std::size_t max_order = enumeration_cap());

// Orders 1..max_order combined.
Catalog enumerate_up_to(std::size_t max_order, Exec exec = Exec::parallel,
                        std::size_t cap = enumeration_cap());

// Every commutative monoid table on {0..n-1} with identity 0, as flat
// row-major tables in lexicographic order.
std::vector<std::vector<Elem>> enumerate_additive_monoids(std::size_t n);

}  // namespace csr
