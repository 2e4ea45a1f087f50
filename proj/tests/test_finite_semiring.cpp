#include <doctest.h>

#include "csr/builtins.hpp"
#include "csr/finite_semiring.hpp"

using namespace csr;

namespace {

// Direct table scan, independent of validate_semiring.
bool scan_axioms(const FiniteSemiring& a) {
  const Elem n = static_cast<Elem>(a.order());
  for (Elem x = 0; x < n; ++x) {
    if (a.add(x, a.zero()) != x || a.mul(x, a.one()) != x ||
        a.mul(x, a.zero()) != a.zero()) {
      return false;
    }
    for (Elem y = 0; y < n; ++y) {
      if (a.add(x, y) != a.add(y, x) || a.mul(x, y) != a.mul(y, x)) {
        return false;
      }
      for (Elem z = 0; z < n; ++z) {
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z)) ||
            a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)) ||
            a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("built-in fixtures validate and satisfy a direct axiom scan") {
  auto all = builtins::all();
  REQUIRE(all.size() == 7);
  for (const auto& a : all) {
    CAPTURE(a.name());
    CHECK(validate_semiring(a.order(), a.add_table(), a.mul_table()).ok());
    CHECK(scan_axioms(a));
  }
}

TEST_CASE("Z2 and BOOL differ only at 1+1") {
  CHECK(builtins::z2().add(1, 1) == 0);
  CHECK(builtins::boole().add(1, 1) == 1);
  CHECK(builtins::z2().mul_table()[3] == builtins::boole().mul_table()[3]);
}

TEST_CASE("trivial semiring has 0 = 1") {
  auto t = builtins::triv();
  CHECK(t.order() == 1);
  CHECK(t.zero() == t.one());
}

TEST_CASE("NSTAR tables") {
  auto s = builtins::nstar();
  CHECK(s.add(1, 1) == 2);
  CHECK(s.add(1, 2) == 1);
  CHECK(s.add(2, 2) == 2);
  CHECK(s.mul(2, 2) == 2);
}

TEST_CASE("D4 is Z2[t]/(t^2)") {
  auto d = builtins::d4();
  const Elem t = 2;
  const Elem one_plus_t = 3;
  CHECK(d.add(1, t) == one_plus_t);
  CHECK(d.mul(t, t) == 0);
  CHECK(d.mul(one_plus_t, one_plus_t) == 1);
  for (Elem x = 0; x < 4; ++x) {
    CHECK(d.add(x, x) == 0);
  }
}

TEST_CASE("integers_mod agrees with modular arithmetic") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto z = builtins::integers_mod(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        CHECK(z.add(x, y) == (x + y) % n);
        CHECK(z.mul(x, y) == (x * y) % n);
      }
    }
  }
  CHECK(builtins::integers_mod(4) == builtins::z4());
}

TEST_CASE("absorption failure is reported with witness x = 1") {
  // 1+1 = 1, mul(0,1) = mul(1,0) = 1
  std::vector<Elem> add{0, 1, 1, 1};
  std::vector<Elem> mul{0, 1, 1, 1};
  auto r = validate_semiring(2, add, mul);
  REQUIRE(r.contains(Axiom::AbsorptionFails));
  const auto& v = r.first(Axiom::AbsorptionFails);
  REQUIRE(v.arity == 1);
  CHECK(v.witness[0] == 1);
  CHECK_THROWS_AS(FiniteSemiring::make(2, add, mul), ValidationError);
}

TEST_CASE("each axiom kind is detected") {
  SUBCASE("non-commutative addition") {
    std::vector<Elem> add{0, 1, 2, 1, 2, 0, 2, 1, 1};
    std::vector<Elem> mul{0, 0, 0, 0, 1, 2, 0, 2, 1};
    CHECK(validate_semiring(3, add, mul).contains(Axiom::NonCommutative));
  }
  SUBCASE("non-associative addition") {
    // (1+2)+2 = 0 but 1+(2+2) = 1
    std::vector<Elem> add{0, 1, 2, 1, 1, 2, 2, 2, 0};
    std::vector<Elem> mul{0, 0, 0, 0, 1, 2, 0, 2, 2};
    auto r = validate_semiring(3, add, mul);
    CHECK(r.contains(Axiom::NonAssociative));
  }
  SUBCASE("bad identity") {
    std::vector<Elem> add{1, 1, 1, 0};
    std::vector<Elem> mul{0, 0, 0, 1};
    CHECK(validate_semiring(2, add, mul).contains(Axiom::BadIdentityElement));
  }
  SUBCASE("distributivity") {
    // 2*(1+2) = 2 but 2*1 + 2*2 = 1
    std::vector<Elem> add{0, 1, 2, 1, 1, 1, 2, 1, 2};
    std::vector<Elem> mul{0, 0, 0, 0, 1, 2, 0, 2, 1};
    CHECK(validate_semiring(3, add, mul).contains(Axiom::DistributivityFails));
  }
}

TEST_CASE("malformed tables are precondition errors, not axiom violations") {
  std::vector<Elem> short_table{0, 1, 1};
  std::vector<Elem> ok{0, 0, 0, 1};
  CHECK_THROWS_AS(validate_semiring(2, short_table, ok), std::invalid_argument);
  std::vector<Elem> out_of_range{0, 1, 1, 5};
  CHECK_THROWS_AS(validate_semiring(2, out_of_range, ok), std::invalid_argument);
  CHECK_THROWS_AS(validate_semiring(0, {}, {}), std::invalid_argument);
}

TEST_CASE("equality compares tables, not names") {
  auto z = builtins::z2();
  CHECK(z == z.renamed("other"));
  CHECK_FALSE(z == builtins::boole());
  CHECK(z.renamed("other").name() == "other");
}

TEST_CASE("compact rendering") {
  CHECK(compact(builtins::z2()) == "Z2[n=2;add=0,1/1,0;mul=0,0/0,1]");
}
