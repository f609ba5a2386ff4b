#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace ts {

using Int = mpz_class;
using Rat = mpq_class;

// Bad input from the caller (CLI params, op preconditions).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A state the library should never reach; indicates a bug, not bad input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sentinel for an infinite valuation (valuation of zero, exact identities).
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

// p-adic valuation; p must be a prime >= 2. Returns kValInfinity for 0.
long padic_valuation(const Int& x, const Int& p);
long padic_valuation(const Rat& x, const Int& p);

bool is_prime(const Int& n);

Int int_pow(const Int& base, unsigned long e);

// Generalized binomial coefficient C(z, k) for any integer z and k >= 0;
// zero for k < 0. Always an integer.
Int binom(const Int& z, long k);
Int binom(long z, long k);

Rat binom_rat(const Rat& z, long k);

// Weight used by the kappa congruences and the matrix constructions:
//   X >= 1           -> C(X, Y)
//   X < 1 and Y >= 0 -> (1 + [X==Y==0]) C(X-1, Y)
//   X < 1 and Y < 0  -> C(X-1, X-Y)
Int eta(long X, long Y);

// x(x+1)...(x+n-1); n >= 0.
Rat rising_factorial(const Rat& x, long n);
// x(x-1)...(x-n+1); n >= 0.
Rat falling_factorial(const Rat& x, long n);

Int factorial(long n);

// Value reduced into [0, m); works for negative values.
long mod_reduce(const Int& value, long m);
long mod_reduce(long value, long m);

// Inverse of a mod p (p prime, a not divisible by p).
long mod_inverse(long a, long p);

// Canonical decimal string, "a" or "a/b".
std::string rat_str(const Rat& q);

}  // namespace ts
