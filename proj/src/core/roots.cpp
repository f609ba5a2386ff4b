#include "core/roots.hpp"

#include <algorithm>

namespace ts {

namespace {

Int rho_f(const Int& x, const Int& c, const Int& n) { return (x * x + c) % n; }

// Pollard-Brent rho; n must be composite, odd, > 1.
Int rho_factor(const Int& n) {
  if (n % 2 == 0) return 2;
  for (long c = 1; c < 64; ++c) {
    Int x = 2, y = 2, d = 1;
    Int cc = c;
    long limit = 1 << 22;
    while (d == 1 && limit-- > 0) {
      x = rho_f(x, cc, n);
      y = rho_f(rho_f(y, cc, n), cc, n);
      d = gcd(Int(x - y), n);
      if (d < 0) d = -d;
    }
    if (d != n && d > 1) return d;
  }
  throw InternalError("integer factorization stalled");
}

void factor_rec(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = rho_factor(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factor_integer(Int n) {
  if (n < 1) throw InternalError("factor_integer: n must be >= 1");
  std::map<Int, int> out;
  if (n == 1) return out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  for (long p = 17; p <= 100000 && n > 1; p += 2) {
    if (Int(p) * p > n) break;
    while (n % p == 0) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, out);
  return out;
}

std::vector<Int> divisors_from_factorization(const std::map<Int, int>& f, size_t cap) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : f) {
    size_t base = out.size();
    if (base * (static_cast<size_t>(e) + 1) > cap)
      throw InternalError("divisor enumeration exceeds cap");
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Dense integer coefficient vector (ascending degree), primitive.
std::vector<Int> primitive_int_coeffs(const MPoly& f, int v) {
  std::vector<MPoly> cs = f.coeffs_in(v);
  Rat content = f.content();
  std::vector<Int> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    Rat c = cs[i].is_zero() ? Rat(0) : cs[i].constant_value();
    c /= content;
    if (c.get_den() != 1) throw InternalError("primitive scaling failed");
    out[i] = c.get_num();
  }
  return out;
}

long eval_mod(const std::vector<long>& coeffs, long x, long mod) {
  long acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = (acc * x + coeffs[i]) % mod;
  }
  return acc < 0 ? acc + mod : acc;
}

bool is_exact_root(const std::vector<Int>& coeffs, const Int& a, const Int& b) {
  // b^deg * f(a/b) via Horner
  Int acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * a + coeffs[i] * int_pow(b, static_cast<unsigned long>(coeffs.size() - 1 - i));
  }
  return acc == 0;
}

}  // namespace

std::vector<Rat> rational_roots(const RatFun& f) {
  if (f.is_zero()) throw UsageError("rational_roots: zero function");
  const MPoly& num = f.num;
  std::vector<int> vars = num.vars_present();
  if (vars.size() > 1) throw UsageError("rational_roots: numerator is not univariate");
  if (vars.empty()) return {};
  int v = vars[0];

  std::vector<Int> coeffs = primitive_int_coeffs(num, v);
  std::vector<Rat> roots;

  size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
  }
  if (coeffs.size() <= 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // Squarefree part, so every root is simple and candidates shrink.
  MPoly F;
  for (size_t i = 0; i < coeffs.size(); ++i)
    F += MPoly::var(v).pow(static_cast<unsigned long>(i)) * MPoly(coeffs[i]);
  MPoly g = gcd(F, F.derivative(v));
  MPoly S = g.is_constant() ? F : *div_exact(F, g);
  std::vector<Int> sc = primitive_int_coeffs(S, v);

  if (sc.size() == 2) {
    // linear: single root
    Rat root(-sc[0], sc[1]);
    root.canonicalize();
    roots.push_back(root);
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  Int trail = sc.front();
  Int lead = sc.back();
  if (trail < 0) trail = -trail;
  if (lead < 0) lead = -lead;

  std::vector<Int> ds = divisors_from_factorization(factor_integer(trail), 1 << 22);
  std::vector<Int> es = divisors_from_factorization(factor_integer(lead), 1 << 22);
  if (ds.size() * es.size() > (1u << 23))
    throw InternalError("rational_roots: candidate space too large");

  // Mod-prime prefilter before exact checks.
  const long kFilterPrimes[2] = {1000000007L, 998244353L};
  std::vector<std::vector<long>> sc_mod;
  std::vector<long> primes_used;
  for (long P : kFilterPrimes) {
    if (lead % P == 0) continue;
    std::vector<long> row(sc.size());
    for (size_t i = 0; i < sc.size(); ++i) row[i] = mod_reduce(sc[i], P);
    sc_mod.push_back(std::move(row));
    primes_used.push_back(P);
  }

  for (const Int& a : ds) {
    for (const Int& b : es) {
      if (gcd(a, b) != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        Int an = sign ? -a : a;
        bool ok = true;
        for (size_t k = 0; k < primes_used.size() && ok; ++k) {
          long P = primes_used[k];
          long am = mod_reduce(an, P);
          long bm = mod_reduce(b, P);
          long x = (am * mod_inverse(bm, P)) % P;
          if (eval_mod(sc_mod[k], x, P) != 0) ok = false;
        }
        if (!ok) continue;
        if (is_exact_root(sc, an, b)) {
          Rat root(an, b);
          root.canonicalize();
          roots.push_back(root);
        }
        if (a == 0) break;  // -0 == 0
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace ts
