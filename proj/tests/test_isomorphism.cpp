#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "csr/builtins.hpp"
#include "csr/catalog.hpp"
#include "csr/congruence.hpp"
#include "csr/isomorphism.hpp"
#include "oracles/naive.hpp"

using namespace csr;

namespace {

// a with carrier relabelled by perm (perm[old] = new).
FiniteSemiring relabel(const FiniteSemiring& a, const std::vector<Elem>& perm) {
  const std::size_t n = a.order();
  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      add[perm[x] * n + perm[y]] = perm[a.add(x, y)];
      mul[perm[x] * n + perm[y]] = perm[a.mul(x, y)];
    }
  }
  return FiniteSemiring::make(n, add, mul, a.name() + "~");
}

}  // namespace

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(builtins::z2()) != canonical_form(builtins::boole()));
  CHECK(canonical_form(builtins::nstar()) != canonical_form(builtins::c3()));
  CHECK_FALSE(are_isomorphic(builtins::z2(), builtins::boole()));
  CHECK_FALSE(are_isomorphic(builtins::nstar(), builtins::c3()));
}

TEST_CASE("canonical_form is invariant under relabelling fixing 0 and 1") {
  auto product = direct_product(builtins::c3(), builtins::boole()).algebra;
  for (const auto& a : {builtins::d4(), builtins::z4(), product}) {
    std::vector<Elem> tail(a.order() - 2);
    std::iota(tail.begin(), tail.end(), 2);
    do {
      std::vector<Elem> perm{0, 1};
      perm.insert(perm.end(), tail.begin(), tail.end());
      auto b = relabel(a, perm);
      CHECK(canonical_form(a) == canonical_form(b));
      CHECK(are_isomorphic(a, b));
      auto iso = find_isomorphism(a, b);
      REQUIRE(iso);
      CHECK(iso->is_injective());
      CHECK(iso->is_surjective());
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
}

TEST_CASE("bound on canonical forms") {
  auto big = direct_product(builtins::z2(), builtins::c3()).algebra;  // order 6
  auto bigger = direct_product(big, builtins::c3()).algebra;          // order 18
  CHECK_NOTHROW(canonical_form(big));
  CHECK_THROWS_AS(canonical_form(bigger), OrderTooLarge);
  CHECK_THROWS_AS(are_isomorphic(bigger, bigger), OrderTooLarge);
  CHECK(find_isomorphism(bigger, bigger.renamed("copy")));
}

TEST_CASE("isomorphism is an equivalence on the order <= 4 catalog plus relabellings") {
  std::vector<FiniteSemiring> algebras;
  const auto catalog = enumerate_up_to(4, Exec::serial);
  for (const auto& e : catalog.entries()) {
    algebras.push_back(e.algebra);
    if (e.algebra.order() == 4) {
      algebras.push_back(relabel(e.algebra, {0, 1, 3, 2}));
    }
  }
  const std::size_t n = algebras.size();
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      iso[i][j] = are_isomorphic(algebras[i], algebras[j]);
      CHECK(iso[i][j] == find_isomorphism(algebras[i], algebras[j]).has_value());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(iso[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(iso[i][j] == iso[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (iso[i][j] && iso[j][k]) {
          CHECK(iso[i][k]);
        }
      }
    }
  }
}

TEST_CASE("are_isomorphic agrees with the permutation oracle") {
  auto catalog = enumerate_up_to(3, Exec::serial);
  for (const auto& x : catalog.entries()) {
    for (const auto& y : catalog.entries()) {
      CHECK(are_isomorphic(x.algebra, y.algebra) ==
            oracle::isomorphic(oracle::tables_of(x.algebra),
                               oracle::tables_of(y.algebra)));
    }
  }
}
