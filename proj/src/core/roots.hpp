#pragma once

#include <map>
#include <vector>

#include "core/ratfun.hpp"

namespace ts {

// All rational roots of f, sorted ascending. Usage error if f is the zero
// function or if its numerator involves more than one variable. A nonzero
// constant has no roots.
std::vector<Rat> rational_roots(const RatFun& f);

// Full factorization of n >= 1 (trial division then Pollard-Brent rho).
std::map<Int, int> factor_integer(Int n);

std::vector<Int> divisors_from_factorization(const std::map<Int, int>& f, size_t cap);

}  // namespace ts
