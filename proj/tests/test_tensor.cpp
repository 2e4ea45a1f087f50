#include <doctest.h>

#include "csr/builtins.hpp"
#include "csr/colimits.hpp"
#include "csr/isomorphism.hpp"
#include "csr/term.hpp"

using namespace csr;

namespace {

TensorElement elem(std::vector<TensorGenerator> g) { return TensorElement(std::move(g)); }

SAlgebra nat(const FiniteSemiring& a) { return over_naturals(a); }

}  // namespace

TEST_CASE("tensor elements are sorted multisets") {
  auto x = elem({{2, 1}, {1, 2}, {1, 2}});
  CHECK(x.size() == 3);
  CHECK(x.members().front() == TensorGenerator{1, 2});
  CHECK(x.to_string() == "(1,2)+(1,2)+(2,1)");
  CHECK(TensorElement().to_string() == "0");
  CHECK(tensor_sum(elem({{1, 1}}), elem({{1, 2}})) == elem({{1, 2}, {1, 1}}));
}

TEST_CASE("tensor_product distributes over both sums") {
  auto c3 = builtins::c3();
  auto p = tensor_product(elem({{1, 2}, {2, 1}}), elem({{2, 2}}), c3, c3);
  CHECK(p == elem({{2, 2}, {2, 2}}));
}

TEST_CASE("tensor_normalize examples") {
  auto c3 = builtins::c3();
  auto z2 = builtins::z2();
  auto b = builtins::boole();
  // shared left coordinate: (a,b) + (a,b') -> (a, b+b')
  CHECK(tensor_normalize(elem({{2, 1}, {2, 2}}), c3, c3) == elem({{2, 1}}));
  CHECK(tensor_normalize(elem({{0, 1}}), c3, c3).is_zero());
  CHECK(tensor_normalize(elem({{1, 0}}), c3, c3).is_zero());
  // (1,1)+(1,1) -> (1+1, 1) = (0,1) -> 0 in Z2 (x) BOOL
  CHECK(tensor_normalize(elem({{1, 1}, {1, 1}}), z2, b).is_zero());
}

TEST_CASE("normal forms have distinct coordinates and respect the size bound") {
  auto c3 = builtins::c3();
  auto d4 = builtins::d4();
  std::vector<TensorGenerator> gens;
  for (Elem a = 1; a < 3; ++a) {
    for (Elem b = 1; b < 4; ++b) {
      gens.push_back({a, b});
    }
  }
  // every multiset of size 3 over the six generators
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      for (std::size_t k = j; k < gens.size(); ++k) {
        auto n = tensor_normalize(elem({gens[i], gens[j], gens[k]}), c3, d4);
        CHECK(n.size() <= 2);
        for (std::size_t u = 0; u < n.size(); ++u) {
          for (std::size_t v = u + 1; v < n.size(); ++v) {
            CHECK(n.members()[u].left != n.members()[v].left);
            CHECK(n.members()[u].right != n.members()[v].right);
          }
        }
      }
    }
  }
}

TEST_CASE("coproduct examples over the naturals") {
  auto bb = tensor_coproduct(nat(builtins::boole()), nat(builtins::boole()));
  CHECK(are_isomorphic(bb.algebra(), builtins::boole()));
  auto zb = tensor_coproduct(nat(builtins::z2()), nat(builtins::boole()));
  CHECK(zb.algebra().order() == 1);
  auto zz = tensor_coproduct(nat(builtins::z2()), nat(builtins::z2()));
  CHECK(are_isomorphic(zz.algebra(), builtins::z2()));
  auto cc = tensor_coproduct(nat(builtins::c3()), nat(builtins::c3()));
  CHECK(cc.algebra().order() == 6);
  CHECK(classify(cc.algebra()).has(Flag::DLat));
  CHECK(cc.algebra().name() == "C3(x)C3");
}

TEST_CASE("C3 (x) C3 is the free distributive lattice on two comparable generators") {
  // Bounded distributive lattice generated by x <= 1, y <= 1 with no other
  // relations: 0, xy, x, y, x+y, 1.
  auto cc = tensor_coproduct(nat(builtins::c3()), nat(builtins::c3()));
  const auto& a = cc.algebra();
  Elem x = cc.left_injection(2);
  Elem y = cc.right_injection(2);
  std::vector<Elem> expected{0, a.mul(x, y), x, y, a.add(x, y), 1};
  std::sort(expected.begin(), expected.end());
  CHECK(std::adjacent_find(expected.begin(), expected.end()) == expected.end());
  CHECK(check_identity(a, identities::one_plus_x_is_one()).holds);
}

TEST_CASE("D4 (x) D4 is Z2[s,t]/(s^2,t^2)") {
  auto dd = tensor_coproduct(nat(builtins::d4()), nat(builtins::d4()));
  const auto& a = dd.algebra();
  CHECK(a.order() == 16);
  Elem s = dd.left_injection(2);
  Elem t = dd.right_injection(2);
  CHECK(a.mul(s, s) == 0);
  CHECK(a.mul(t, t) == 0);
  CHECK(a.mul(s, t) != 0);
  CHECK(classify(a).to_string() == "CRings2");
}

TEST_CASE("coproduct with TRIV is TRIV and with NSTAR is the identity on star algebras") {
  for (const auto& a : builtins::all()) {
    auto t = tensor_coproduct(nat(a), nat(builtins::triv()));
    CHECK(t.algebra().order() == 1);
    if (classify(a).has(Flag::CSRstar)) {
      auto n = tensor_coproduct(nat(a), nat(builtins::nstar()));
      CHECK(are_isomorphic(n.algebra(), a));
    }
  }
}

TEST_CASE("injections send units and zeros to the unit and zero") {
  for (const auto& a : builtins::all()) {
    for (const auto& b : builtins::all()) {
      if (a.order() * b.order() > 16) {
        continue;
      }
      auto t = tensor_coproduct(nat(a), nat(b));
      const auto& c = t.algebra();
      CHECK(t.left_injection(a.one()) == c.one());
      CHECK(t.right_injection(b.one()) == c.one());
      CHECK(t.left_injection(a.zero()) == c.zero());
      CHECK(t.right_injection(b.zero()) == c.zero());
      CHECK(t.representatives.size() == c.order());
      for (std::size_t k = 0; k < t.universe.size(); ++k) {
        CHECK(t.class_of[k] < c.order());
      }
    }
  }
}

TEST_CASE("coproducts over a finite base") {
  auto z2 = builtins::z2();
  auto d4 = validate_salgebra(z2, builtins::d4(), std::vector<Elem>{0, 1});
  auto over = validate_salgebra(z2, z2, std::vector<Elem>{0, 1});
  auto t = tensor_coproduct(d4, over);
  CHECK(are_isomorphic(t.algebra(), builtins::d4()));
  REQUIRE(t.result.structure());
  CHECK(t.result.base().name() == "Z2");

  auto boole = builtins::boole();
  auto c3 = validate_salgebra(boole, builtins::c3(), std::vector<Elem>{0, 1});
  auto cc = tensor_coproduct(c3, c3);
  CHECK(cc.algebra().order() == 6);

  CHECK_THROWS_AS(tensor_coproduct(d4, nat(builtins::d4())), BaseMismatch);
}

TEST_CASE("base bilinearity identifies scalars across the tensor sign") {
  // Over NSTAR the element 2 acts as 1+1 on both sides.
  auto nstar = builtins::nstar();
  auto b = validate_salgebra(nstar, builtins::boole());
  auto c = validate_salgebra(nstar, builtins::c3());
  auto t = tensor_coproduct(b, c);
  CHECK(are_isomorphic(t.algebra(), builtins::c3()));
}

TEST_CASE("stability is reached within the default bounds and serial equals parallel") {
  TensorOptions serial;
  serial.exec = Exec::serial;
  for (const auto& a : builtins::all()) {
    for (const auto& b : builtins::all()) {
      if (a.order() * b.order() > 12) {
        continue;
      }
      auto p = tensor_coproduct(nat(a), nat(b));
      auto s = tensor_coproduct(nat(a), nat(b), serial);
      CHECK(p.algebra() == s.algebra());
      CHECK(p.bound == s.bound);
      CHECK(p.class_of == s.class_of);
      CHECK(p.left_injection == s.left_injection);
      CHECK(p.right_injection == s.right_injection);
    }
  }
}

TEST_CASE("universe cap reports BoundUnstable, never a result") {
  TensorOptions tight;
  tight.max_universe = 10;
  CHECK_THROWS_AS(tensor_coproduct(nat(builtins::c3()), nat(builtins::c3()), tight),
                  BoundUnstable);
}

TEST_CASE("a single fixed bound yields a valid semiring") {
  auto t = tensor_quotient_at(nat(builtins::c3()), nat(builtins::c3()), 2);
  CHECK(validate_semiring(t.algebra().order(), t.algebra().add_table(),
                          t.algebra().mul_table())
            .ok());
}
