#include "core/fppoly.hpp"

#include <algorithm>

namespace ts {

namespace {

void check_compat(const FpHomPoly& f, const FpHomPoly& g) {
  if (f.p != g.p || f.r != g.r) throw UsageError("fp polynomials have mismatched p or degree");
}

long mulmod(long a, long b, long p) { return (a * b) % p; }

// binom(n, k) mod p for 0 <= k <= n within machine range, via a row walk
// would be overkill; the polynomials here have r up to a few hundred, so a
// cached Pascal triangle mod p is fine.
struct PascalModP {
  long p;
  std::vector<std::vector<long>> rows;
  explicit PascalModP(long p_, long n) : p(p_) {
    rows.resize(static_cast<size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
      rows[static_cast<size_t>(i)].resize(static_cast<size_t>(i + 1));
      rows[static_cast<size_t>(i)][0] = 1;
      rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      for (long j = 1; j < i; ++j)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
             rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]) % p;
    }
  }
  long at(long n, long k) const {
    if (k < 0 || k > n) return 0;
    return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }
};

}  // namespace

bool FpHomPoly::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
}

FpHomPoly fp_monomial(long p, long r, long i) {
  if (i < 0 || i > r) throw UsageError("fp_monomial: exponent out of range");
  FpHomPoly f(p, r);
  f.c[static_cast<size_t>(i)] = 1;
  return f;
}

FpHomPoly fp_add(const FpHomPoly& f, const FpHomPoly& g) {
  check_compat(f, g);
  FpHomPoly out(f.p, f.r);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = (f.c[i] + g.c[i]) % f.p;
  return out;
}

FpHomPoly fp_scale(const FpHomPoly& f, long k) {
  FpHomPoly out(f.p, f.r);
  long kk = mod_reduce(k, f.p);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = (f.c[i] * kk) % f.p;
  return out;
}

FpHomPoly gl2_act(const FpHomPoly& f, const Mat2& g) {
  long p = f.p, r = f.r;
  long a = mod_reduce(g.a, p), b = mod_reduce(g.b, p);
  long c = mod_reduce(g.c, p), d = mod_reduce(g.d, p);
  PascalModP pas(p, r);
  FpHomPoly out(p, r);
  // (a x + c y)^i (b x + d y)^{r-i}, expanded with two binomial rows.
  for (long i = 0; i <= r; ++i) {
    long ci = f.c[static_cast<size_t>(i)];
    if (ci == 0) continue;
    // first[k] = binom(i,k) a^k c^{i-k}, the coefficient of x^k y^{i-k} in (ax+cy)^i
    std::vector<long> first(static_cast<size_t>(i + 1));
    {
      std::vector<long> apows(static_cast<size_t>(i + 1)), cpows(static_cast<size_t>(i + 1));
      apows[0] = cpows[0] = 1;
      for (long k = 1; k <= i; ++k) {
        apows[static_cast<size_t>(k)] = mulmod(apows[static_cast<size_t>(k - 1)], a, p);
        cpows[static_cast<size_t>(k)] = mulmod(cpows[static_cast<size_t>(k - 1)], c, p);
      }
      for (long k = 0; k <= i; ++k)
        first[static_cast<size_t>(k)] =
            mulmod(pas.at(i, k), mulmod(apows[static_cast<size_t>(k)], cpows[static_cast<size_t>(i - k)], p), p);
    }
    long n = r - i;
    std::vector<long> second(static_cast<size_t>(n + 1));
    {
      std::vector<long> bpows(static_cast<size_t>(n + 1)), dpows(static_cast<size_t>(n + 1));
      bpows[0] = dpows[0] = 1;
      for (long k = 1; k <= n; ++k) {
        bpows[static_cast<size_t>(k)] = mulmod(bpows[static_cast<size_t>(k - 1)], b, p);
        dpows[static_cast<size_t>(k)] = mulmod(dpows[static_cast<size_t>(k - 1)], d, p);
      }
      for (long k = 0; k <= n; ++k)
        second[static_cast<size_t>(k)] =
            mulmod(pas.at(n, k), mulmod(bpows[static_cast<size_t>(k)], dpows[static_cast<size_t>(n - k)], p), p);
    }
    // convolve
    for (long k1 = 0; k1 <= i; ++k1) {
      if (first[static_cast<size_t>(k1)] == 0) continue;
      long base = mulmod(ci, first[static_cast<size_t>(k1)], p);
      for (long k2 = 0; k2 <= n; ++k2) {
        if (second[static_cast<size_t>(k2)] == 0) continue;
        size_t idx = static_cast<size_t>(k1 + k2);
        out.c[idx] = (out.c[idx] + mulmod(base, second[static_cast<size_t>(k2)], p)) % p;
      }
    }
  }
  return out;
}

long psi_matrix_entry(long p, long r, long s, long i, long j) {
  if (s < 1 || s > p - 1) throw UsageError("psi: s must satisfy 1 <= s <= p-1");
  if (mod_reduce(r - s, p - 1) != 0) throw UsageError("psi: s must be congruent to r mod p-1");
  if (i < 0 || i > r || j < 0 || j > p - 1 - s) throw UsageError("psi: index out of range");
  if (i == 0 || i == r) return 0;
  if (mod_reduce(j - (i - s), p - 1) != 0) return 0;
  long v = mod_reduce(binom(Int(p - 1 - s), j), p);
  if ((s + j) % 2 == 1) v = (p - v) % p;
  return v;
}

FpHomPoly psi_apply(const FpHomPoly& f, long s) {
  long p = f.p, r = f.r;
  if (s < 1 || s > p - 1) throw UsageError("psi: s must satisfy 1 <= s <= p-1");
  if (mod_reduce(r - s, p - 1) != 0) throw UsageError("psi: s must be congruent to r mod p-1");
  long n = p - 1 - s;
  FpHomPoly out(p, n);
  // pw[a][e] = a^e mod p, with the convention 0^0 = 1.
  long emax = std::max(r, n);
  std::vector<std::vector<long>> pw(static_cast<size_t>(p));
  for (long a = 0; a < p; ++a) {
    pw[static_cast<size_t>(a)].resize(static_cast<size_t>(emax + 1));
    pw[static_cast<size_t>(a)][0] = 1;
    for (long e = 1; e <= emax; ++e)
      pw[static_cast<size_t>(a)][static_cast<size_t>(e)] =
          (pw[static_cast<size_t>(a)][static_cast<size_t>(e - 1)] * a) % p;
  }
  PascalModP pas(p, n);
  for (long u = 0; u < p; ++u) {
    for (long v = 0; v < p; ++v) {
      long fv = 0;
      for (long i = 0; i <= r; ++i) {
        long ci = f.c[static_cast<size_t>(i)];
        if (ci == 0) continue;
        fv = (fv + ci * mulmod(pw[static_cast<size_t>(u)][static_cast<size_t>(i)],
                               pw[static_cast<size_t>(v)][static_cast<size_t>(r - i)], p)) % p;
      }
      if (fv == 0) continue;
      // (vX - uY)^n: coefficient of X^j Y^{n-j} is binom(n,j) v^j (-u)^{n-j}
      long mu = (p - u) % p;
      for (long j = 0; j <= n; ++j) {
        long coef = mulmod(pas.at(n, j),
                           mulmod(pw[static_cast<size_t>(v)][static_cast<size_t>(j)],
                                  pw[static_cast<size_t>(mu)][static_cast<size_t>(n - j)], p), p);
        if (coef == 0) continue;
        size_t idx = static_cast<size_t>(j);
        out.c[idx] = (out.c[idx] + fv * coef) % p;
      }
    }
  }
  return out;
}

ThetaDivideResult theta_divide(const FpHomPoly& f, long times) {
  if (times < 0) throw UsageError("theta_divide: times must be >= 0");
  long p = f.p;
  ThetaDivideResult out;
  out.requested = times;
  out.quotient = f;
  for (long k = 0; k < times; ++k) {
    const FpHomPoly& cur = out.quotient;
    long r = cur.r;
    if (r < p + 1 || cur.is_zero()) break;
    // Solve theta * q = cur with theta = x y^p - x^p y:
    //   cur[a] = q[a-1] - q[a-p], so q[a-1] = cur[a] + q[a-p]  (q[neg] = 0).
    FpHomPoly q(p, r - p - 1);
    bool fits = true;
    for (long a = 1; a <= r - p; ++a) {
      long prev = (a - p >= 0 && a - p <= q.r) ? q.c[static_cast<size_t>(a - p)] : 0;
      q.c[static_cast<size_t>(a - 1)] = (cur.c[static_cast<size_t>(a)] + prev) % p;
    }
    // Verify by reconstructing: (x y^p - x^p y) * q must equal cur exactly.
    FpHomPoly recon(p, r);
    for (long i = 0; i <= q.r; ++i) {
      long qi = q.c[static_cast<size_t>(i)];
      if (qi == 0) continue;
      recon.c[static_cast<size_t>(i + 1)] = (recon.c[static_cast<size_t>(i + 1)] + qi) % p;
      recon.c[static_cast<size_t>(i + p)] = (recon.c[static_cast<size_t>(i + p)] + (p - qi)) % p;
    }
    if (!(recon == cur)) fits = false;
    if (!fits) break;
    out.quotient = q;
    out.achieved = k + 1;
  }
  return out;
}

bool in_row_span(const FpHomPoly& f, const std::vector<FpHomPoly>& rows) {
  if (rows.empty()) return f.is_zero();
  long p = rows[0].p;
  long n = rows[0].r + 1;
  // Gaussian elimination over F_p on a copy.
  std::vector<std::vector<long>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    check_compat(row, rows[0]);
    m.push_back(std::vector<long>(row.c.begin(), row.c.end()));
  }
  std::vector<long> target(f.c.begin(), f.c.end());
  if (f.p != p || static_cast<long>(target.size()) != n)
    throw UsageError("in_row_span: degree or modulus mismatch");
  size_t rank = 0;
  for (long col = 0; col < n && rank < m.size(); ++col) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    long inv = mod_inverse(m[rank][static_cast<size_t>(col)], p);
    for (long j = col; j < n; ++j) m[rank][static_cast<size_t>(j)] = (m[rank][static_cast<size_t>(j)] * inv) % p;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == rank) continue;
      long fac = m[i][static_cast<size_t>(col)];
      if (fac == 0) continue;
      for (long j = col; j < n; ++j)
        m[i][static_cast<size_t>(j)] = ((m[i][static_cast<size_t>(j)] - fac * m[rank][static_cast<size_t>(j)]) % p + p) % p;
    }
    // reduce target too
    long tf = target[static_cast<size_t>(col)];
    if (tf != 0)
      for (long j = col; j < n; ++j)
        target[static_cast<size_t>(j)] = ((target[static_cast<size_t>(j)] - tf * m[rank][static_cast<size_t>(j)]) % p + p) % p;
    ++rank;
  }
  return std::all_of(target.begin(), target.end(), [](long v) { return v == 0; });
}

namespace {

// Row-reduce a list of coefficient vectors mod p in place; returns the
// surviving nonzero rows in echelon order with leading 1s.
std::vector<std::vector<long>> row_reduce(std::vector<std::vector<long>> m, long p) {
  if (m.empty()) return m;
  long n = static_cast<long>(m[0].size());
  size_t rank = 0;
  for (long col = 0; col < n && rank < m.size(); ++col) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    long inv = mod_inverse(m[rank][static_cast<size_t>(col)], p);
    for (long j = col; j < n; ++j) m[rank][static_cast<size_t>(j)] = (m[rank][static_cast<size_t>(j)] * inv) % p;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == rank) continue;
      long fac = m[i][static_cast<size_t>(col)];
      if (fac == 0) continue;
      for (long j = col; j < n; ++j)
        m[i][static_cast<size_t>(j)] = ((m[i][static_cast<size_t>(j)] - fac * m[rank][static_cast<size_t>(j)]) % p + p) % p;
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

}  // namespace

long primitive_root(long p) {
  if (p == 2) return 1;
  std::vector<long> prime_factors;
  long n = p - 1;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      prime_factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : prime_factors) {
      // g^{(p-1)/q} mod p
      long e = (p - 1) / q;
      long base = g % p, acc = 1;
      while (e > 0) {
        if (e & 1) acc = (acc * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("primitive_root: none found");
}

SpanClosure span_closure(const std::vector<FpHomPoly>& gens) {
  if (gens.empty()) throw UsageError("span_closure: need at least one generator");
  long p = gens[0].p, r = gens[0].r;
  for (const auto& g : gens) check_compat(g, gens[0]);

  long g0 = primitive_root(p);
  std::vector<Mat2> generators = {
      {1, 1, 0, 1},   // upper unipotent
      {1, 0, 1, 1},   // lower unipotent
      {g0, 0, 0, 1},  // diagonal
  };

  std::vector<std::vector<long>> rows;
  for (const auto& g : gens) rows.push_back(std::vector<long>(g.c.begin(), g.c.end()));
  rows = row_reduce(std::move(rows), p);

  SpanClosure out;
  for (;;) {
    out.generations += 1;
    std::vector<std::vector<long>> next = rows;
    for (const auto& row : rows) {
      FpHomPoly f(p, r);
      f.c.assign(row.begin(), row.end());
      for (const auto& mat : generators) {
        FpHomPoly h = gl2_act(f, mat);
        next.push_back(std::vector<long>(h.c.begin(), h.c.end()));
      }
    }
    next = row_reduce(std::move(next), p);
    if (next == rows) break;
    rows = std::move(next);
    if (out.generations > r + 2) throw InternalError("span_closure: failed to stabilize");
  }

  out.dimension = static_cast<long>(rows.size());
  out.basis.reserve(rows.size());
  for (const auto& row : rows) {
    FpHomPoly f(p, r);
    f.c.assign(row.begin(), row.end());
    out.basis.push_back(std::move(f));
  }
  return out;
}

std::vector<FpHomPoly> standard_span_list(long p, long r, long m) {
  if (m < 0) throw UsageError("standard_span_list: m must be >= 0");
  if (r < 2 * m + 2) throw UsageError("standard_span_list: r too small for this m");
  std::vector<FpHomPoly> out;
  // single monomials at both ends
  for (long i = 0; i <= m; ++i) {
    out.push_back(fp_monomial(p, r, i));
    out.push_back(fp_monomial(p, r, r - i));
  }
  // middle-band combinations f_{i,j} and their mirrors; j may go negative,
  // in which case the binomial vanishes for the early sigma values
  for (long i = 0; i <= p - 2; ++i) {
    for (long j = i - m; j <= i; ++j) {
      FpHomPoly f(p, r);
      FpHomPoly fm(p, r);
      for (long sigma = 0;; ++sigma) {
        long e = sigma * (p - 1) + i;
        if (e >= r - m) break;
        if (e <= m) continue;
        long coef = mod_reduce(Int(binom(Int(r - m), sigma * (p - 1) + j)), p);
        f.c[static_cast<size_t>(e)] = (f.c[static_cast<size_t>(e)] + coef) % p;
        fm.c[static_cast<size_t>(r - e)] = (fm.c[static_cast<size_t>(r - e)] + coef) % p;
      }
      if (!f.is_zero()) {
        out.push_back(std::move(f));
        out.push_back(std::move(fm));
      }
    }
  }
  return out;
}

}  // namespace ts
