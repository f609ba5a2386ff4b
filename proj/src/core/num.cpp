#include "core/num.hpp"

namespace ts {

long padic_valuation(const Int& x, const Int& p) {
  if (p < 2 || !is_prime(p)) throw UsageError("padic_valuation: p must be prime");
  if (x == 0) return kValInfinity;
  Int reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long padic_valuation(const Rat& x, const Int& p) {
  if (x == 0) {
    if (p < 2 || !is_prime(p)) throw UsageError("padic_valuation: p must be prime");
    return kValInfinity;
  }
  return padic_valuation(Int(x.get_num()), p) - padic_valuation(Int(x.get_den()), p);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Int binom(const Int& z, long k) {
  if (k < 0) return 0;
  Int acc = 1;
  Int factor = z;
  for (long i = 1; i <= k; ++i) {
    acc *= factor;
    factor -= 1;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

Int binom(long z, long k) { return binom(Int(z), k); }

Rat binom_rat(const Rat& z, long k) {
  if (k < 0) return Rat(0);
  Rat acc = 1;
  Rat factor = z;
  for (long i = 1; i <= k; ++i) {
    acc *= factor;
    factor -= 1;
    acc /= i;
  }
  return acc;
}

Int eta(long X, long Y) {
  if (X >= 1) return binom(X, Y);
  if (Y >= 0) {
    Int value = binom(X - 1, Y);
    if (X == 0 && Y == 0) value *= 2;
    return value;
  }
  return binom(Int(X - 1), X - Y);
}

Rat rising_factorial(const Rat& x, long n) {
  if (n < 0) throw UsageError("rising_factorial: n must be >= 0");
  Rat acc = 1;
  for (long i = 0; i < n; ++i) acc *= (x + i);
  return acc;
}

Rat falling_factorial(const Rat& x, long n) {
  if (n < 0) throw UsageError("falling_factorial: n must be >= 0");
  Rat acc = 1;
  for (long i = 0; i < n; ++i) acc *= (x - i);
  return acc;
}

Int factorial(long n) {
  if (n < 0) throw UsageError("factorial: n must be >= 0");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

long mod_reduce(const Int& value, long m) {
  if (m <= 0) throw UsageError("mod_reduce: modulus must be positive");
  Int out;
  mpz_fdiv_r_ui(out.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(m));
  return out.get_si();
}

long mod_reduce(long value, long m) { return mod_reduce(Int(value), m); }

long mod_inverse(long a, long p) {
  long r = mod_reduce(a, p);
  if (r == 0) throw UsageError("mod_inverse: value divisible by modulus");
  Int out;
  Int base = r, mod = p;
  if (mpz_invert(out.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw UsageError("mod_inverse: not invertible");
  return out.get_si();
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace ts
