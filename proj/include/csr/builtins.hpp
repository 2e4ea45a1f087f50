#pragma once

#include <vector>

#include "csr/finite_semiring.hpp"

namespace csr::builtins {

FiniteSemiring triv();   // one element, 0 = 1
FiniteSemiring z2();     // {0,1}, 1+1 = 0
FiniteSemiring boole();  // {0,1}, 1+1 = 1
// {0,1,2} with 1+1 = 2, 1+2 = 1, 2+2 = 2, 2*2 = 2: the naturals with 3 = 1.
FiniteSemiring nstar();
FiniteSemiring c3();     // chain 0 < m < 1 with join and meet; m is index 2
FiniteSemiring z4();
FiniteSemiring d4();     // Z2[t]/(t^2), indices 0, 1, t, 1+t

// Integers modulo n >= 1 with the natural labelling.
FiniteSemiring integers_mod(std::size_t n);

// The seven named fixtures above, in declaration order.
std::vector<FiniteSemiring> all();

}  // namespace csr::builtins
