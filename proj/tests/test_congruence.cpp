#include <doctest.h>

#include <algorithm>

#include "csr/builtins.hpp"
#include "csr/catalog.hpp"
#include "csr/congruence.hpp"
#include "csr/isomorphism.hpp"
#include "csr/term.hpp"
#include "oracles/naive.hpp"

using namespace csr;

namespace {

std::vector<Elem> reps(const Congruence& e) {
  return {e.representatives().begin(), e.representatives().end()};
}

std::vector<FiniteSemiring> small_algebras() {
  std::vector<FiniteSemiring> out;
  const auto catalog = enumerate_up_to(4, Exec::serial);
  for (const auto& e : catalog.entries()) {
    out.push_back(e.algebra);
  }
  return out;
}

}  // namespace

TEST_CASE("congruence_generated examples") {
  auto z2 = builtins::z2();
  CHECK(reps(congruence_generated(z2, {})) == std::vector<Elem>{0, 1});
  std::vector<std::pair<Elem, Elem>> all{{0, 1}};
  CHECK(congruence_generated(z2, all).number_of_classes() == 1);
  std::vector<std::pair<Elem, Elem>> p{{1, 2}};
  auto e = congruence_generated(builtins::nstar(), p);
  CHECK(e.classes() == std::vector<std::vector<Elem>>{{0}, {1, 2}});
  CHECK(reps(e) == oracle::least_congruence(builtins::nstar(), p));
}

TEST_CASE("congruence_generated matches the partition-lattice oracle") {
  for (const auto& a : small_algebras()) {
    CAPTURE(a.name());
    const Elem n = static_cast<Elem>(a.order());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        std::vector<std::pair<Elem, Elem>> p{{x, y}};
        CHECK(reps(congruence_generated(a, p)) == oracle::least_congruence(a, p));
      }
    }
  }
}

TEST_CASE("every oracle congruence is accepted and every other partition rejected") {
  auto z4 = builtins::z4();
  auto congruences = oracle::all_congruences(z4);
  // {0},{1},{2},{3}; {0,2},{1,3}; everything
  CHECK(congruences.size() == 3);
  for (const auto& rep : congruences) {
    CHECK(is_compatible_partition(z4, rep));
    CHECK_NOTHROW(Congruence(z4, rep));
  }
  std::vector<Elem> bad{0, 1, 1, 3};
  CHECK_FALSE(is_compatible_partition(z4, bad));
  CHECK_THROWS_AS(Congruence(z4, bad), std::invalid_argument);
}

TEST_CASE("quotient examples") {
  std::vector<std::pair<Elem, Elem>> p12{{1, 2}};
  auto q = quotient(congruence_generated(builtins::nstar(), p12));
  CHECK(are_isomorphic(q.algebra, builtins::boole()));
  auto id = quotient(identity_congruence(builtins::c3()));
  CHECK(id.algebra == builtins::c3());
  std::vector<std::pair<Elem, Elem>> p02{{0, 2}};
  auto z4 = quotient(congruence_generated(builtins::z4(), p02));
  CHECK(are_isomorphic(z4.algebra, builtins::z2()));
  CHECK(z4.algebra.name() == "Z4/E");
}

TEST_CASE("projection identifies exactly the related pairs") {
  for (const auto& a : small_algebras()) {
    const Elem n = static_cast<Elem>(a.order());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        std::vector<std::pair<Elem, Elem>> p{{x, y}};
        auto e = congruence_generated(a, p);
        auto q = quotient(e);
        CHECK(validate_semiring(q.algebra.order(), q.algebra.add_table(),
                                q.algebra.mul_table())
                  .ok());
        CHECK(q.projection.is_surjective());
        for (Elem u = 0; u < n; ++u) {
          for (Elem v = 0; v < n; ++v) {
            CHECK((q.projection(u) == q.projection(v)) == e.related(u, v));
          }
        }
      }
    }
  }
}

TEST_CASE("subalgebra_close examples") {
  auto z2 = subalgebra_close(builtins::z2(), std::vector<Elem>{});
  CHECK(z2.subset.is_full());
  auto nstar = subalgebra_close(builtins::nstar(), std::vector<Elem>{2});
  CHECK(nstar.subset.members() == std::vector<Elem>{0, 1, 2});
  auto d4 = subalgebra_close(builtins::d4(), std::vector<Elem>{2});
  CHECK(d4.subset.is_full());
  auto z4 = subalgebra_close(builtins::z4(), std::vector<Elem>{});
  CHECK(z4.subset.is_full());
  auto c3 = subalgebra_close(builtins::c3(), std::vector<Elem>{});
  CHECK(c3.subset.members() == std::vector<Elem>{0, 1});
  CHECK(c3.algebra == builtins::boole());
  CHECK(c3.inclusion.is_injective());
}

TEST_CASE("subalgebra_close is minimal") {
  for (const auto& a : small_algebras()) {
    const Elem n = static_cast<Elem>(a.order());
    for (Elem s = 0; s < n; ++s) {
      std::vector<Elem> seed{s};
      auto sub = subalgebra_close(a, seed);
      CHECK(sub.subset.members() == oracle::least_subalgebra(a, seed));
      // dropping a generated element breaks closure
      for (Elem drop : sub.subset.members()) {
        if (drop == a.zero() || drop == a.one() || drop == s) {
          continue;
        }
        std::vector<Elem> rest;
        for (Elem m : sub.subset.members()) {
          if (m != drop) {
            rest.push_back(m);
          }
        }
        bool closed = true;
        for (Elem x : rest) {
          for (Elem y : rest) {
            auto in = [&](Elem z) {
              return std::find(rest.begin(), rest.end(), z) != rest.end();
            };
            closed = closed && in(a.add(x, y)) && in(a.mul(x, y));
          }
        }
        CHECK_FALSE(closed);
      }
    }
  }
}

TEST_CASE("direct_product examples") {
  auto p = direct_product(builtins::z2(), builtins::boole());
  CHECK(p.algebra.order() == 4);
  CHECK(check_identity(p.algebra, identities::one_plus_two_x_is_one()).holds);
  CHECK(check_identity(p.algebra, identities::x_squared_is_x()).holds);
  CHECK(p.components[0] == std::pair<Elem, Elem>{0, 0});
  CHECK(p.components[1] == std::pair<Elem, Elem>{1, 1});
  CHECK(p.first.is_surjective());
  CHECK(p.second.is_surjective());
  auto with_triv = direct_product(builtins::c3(), builtins::triv());
  CHECK(are_isomorphic(with_triv.algebra, builtins::c3()));
  auto triv = direct_product(builtins::triv(), builtins::triv());
  CHECK(triv.algebra.order() == 1);
}
