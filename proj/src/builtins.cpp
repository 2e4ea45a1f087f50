#include "csr/builtins.hpp"

#include <string>

namespace csr::builtins {

FiniteSemiring triv() { return FiniteSemiring::make(1, {0}, {0}, "TRIV"); }

FiniteSemiring z2() {
  return FiniteSemiring::make(2, {0, 1, 1, 0}, {0, 0, 0, 1}, "Z2");
}

FiniteSemiring boole() {
  return FiniteSemiring::make(2, {0, 1, 1, 1}, {0, 0, 0, 1}, "BOOL");
}

FiniteSemiring nstar() {
  return FiniteSemiring::make(3,
                              {0, 1, 2,  //
                               1, 2, 1,  //
                               2, 1, 2},
                              {0, 0, 0,  //
                               0, 1, 2,  //
                               0, 2, 2},
                              "NSTAR");
}

FiniteSemiring c3() {
  return FiniteSemiring::make(3,
                              {0, 1, 2,  //
                               1, 1, 1,  //
                               2, 1, 2},
                              {0, 0, 0,  //
                               0, 1, 2,  //
                               0, 2, 2},
                              "C3");
}

FiniteSemiring integers_mod(std::size_t n) {
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = static_cast<Elem>((i + j) % n);
      mul[i * n + j] = static_cast<Elem>((i * j) % n);
    }
  }
  return FiniteSemiring::make(n, std::move(add), std::move(mul),
                              n == 1 ? "TRIV" : "Z" + std::to_string(n));
}

FiniteSemiring z4() { return integers_mod(4); }

FiniteSemiring d4() {
  // Bit 0 is the coefficient of 1, bit 1 the coefficient of t.
  std::vector<Elem> add(16), mul(16);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      add[x * 4 + y] = x ^ y;
      Elem x0 = x & 1, x1 = x >> 1, y0 = y & 1, y1 = y >> 1;
      Elem c0 = x0 & y0;
      Elem c1 = (x0 & y1) ^ (x1 & y0);
      mul[x * 4 + y] = c0 | (c1 << 1);
    }
  }
  return FiniteSemiring::make(4, std::move(add), std::move(mul), "D4");
}

std::vector<FiniteSemiring> all() {
  return {triv(), z2(), boole(), nstar(), c3(), z4(), d4()};
}

}  // namespace csr::builtins
