#include "core/sums.hpp"

#include <atomic>
#include <thread>

namespace ts {

void parallel_for(long n, int jobs, const std::function<void(long)>& fn) {
  if (n <= 0) return;
  if (jobs <= 1 || n == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  long nthreads = std::min<long>(jobs, n);
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nthreads));
  std::atomic<bool> failed{false};
  for (long k = 0; k < nthreads; ++k) {
    pool.emplace_back([&] {
      long i;
      while ((i = next.fetch_add(1)) < n) {
        if (failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          failed.store(true);
          throw;  // terminates; sweeps must not throw per-point
        }
      }
    });
  }
  for (auto& t : pool) t.join();
}

void binom_row_walk(long r, const std::function<void(long, const Int&)>& fn) {
  Int c = 1;
  fn(0, c);
  for (long k = 0; k < r; ++k) {
    c *= (r - k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    fn(k + 1, c);
  }
}

Decomposition decompose(long p, long r) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("decompose: p must be an odd prime");
  if (r < 1) throw UsageError("decompose: r must be >= 1");
  Decomposition d;
  d.s = (r - 1) % (p - 1) + 1;
  d.t = (r - d.s) / (p - 1);
  return d;
}

namespace {

void finish_report(SumReport& rep, long p) {
  Rat diff = rep.value - rep.target;
  rep.achieved_valuation = padic_valuation(diff, Int(p));
  rep.pass = rep.achieved_valuation >= rep.required_valuation;
}

// sum over 1 <= j <= t of C(r, j(p-1)) and of j*C(r, j(p-1)).
// t(p-1) = r - s < r, so the top entry C(r, r) is excluded even when p-1 | r.
struct ColumnSums {
  Int plain;
  Int weighted;
};

ColumnSums column_sums(long p, long r) {
  ColumnSums out{0, 0};
  binom_row_walk(r, [&](long k, const Int& c) {
    if (k > 0 && k < r && k % (p - 1) == 0) {
      long j = k / (p - 1);
      out.plain += c;
      out.weighted += j * c;
    }
  });
  return out;
}

// full-support sum of C(r, k) over k == A (mod p-1), 0 <= k <= r
Int residue_class_sum(long p, long r, long A) {
  long nu = mod_reduce(A, p - 1);
  Int sum = 0;
  binom_row_walk(r, [&](long k, const Int& c) {
    if (k % (p - 1) == nu) sum += c;
  });
  return sum;
}

long rat_mod_p(const Rat& q, long p) {
  long num = mod_reduce(Int(q.get_num()), p);
  long den = mod_reduce(Int(q.get_den()), p);
  if (den == 0) throw UsageError("rational with p in denominator");
  return (num * mod_inverse(den, p)) % p;
}

SumReport part2_check(long p, long r) {
  Decomposition d = decompose(p, r);
  SumReport rep;
  rep.part = 2;
  rep.p = p;
  rep.r = r;
  rep.required_valuation = 3;

  // Fit c + tA + t^2 B mod p to samples t = 1, 2, 3 at this s; the statement
  // has no constant term, so c must come out 0. A fourth sample is held out.
  auto alpha_for = [&](long tt) {
    long rr = tt * (p - 1) + d.s;
    Int m = column_sums(p, rr).plain;
    Rat alpha = (Rat(m) - Rat(tt, d.s) * p) / (Rat(p) * p);
    return rat_mod_p(alpha, p);
  };
  long a1 = alpha_for(1);
  long a2 = alpha_for(2);
  long a3 = alpha_for(3);
  // second difference of a quadratic is 2B
  long B = mod_reduce(Int(a3 - 2 * a2 + a1), p);
  B = (B * mod_inverse(2, p)) % p;
  long Acoef = mod_reduce(Int(a2 - a1 - 3 * B), p);
  long c = mod_reduce(Int(a1 - Acoef - B), p);
  long a4 = alpha_for(4);
  bool holdout = mod_reduce(Int(c + 4 * Acoef + 16 * B - a4), p) == 0;
  rep.notes["A_s"] = std::to_string(Acoef);
  rep.notes["B_s"] = std::to_string(B);
  rep.notes["constant_term"] = std::to_string(c);
  rep.notes["holdout_t4"] = holdout ? "ok" : "failed";

  rep.value = Rat(column_sums(p, r).plain);
  rep.target = Rat(d.t, d.s) * p + Rat(p) * p * (Rat(d.t) * Acoef + Rat(d.t) * d.t * B);
  finish_report(rep, p);
  if (c != 0 || !holdout) rep.pass = false;
  return rep;
}

// M_{R,A} = sum over j >= 0 of C(R, j(p-1)+A); terms outside [0, R] vanish
Int full_sum_M(long p, long R, long A) {
  if (R < 0) throw UsageError("row index must be >= 0");
  Int sum = 0;
  for (long j = 0; j * (p - 1) + A <= R; ++j) {
    long k = j * (p - 1) + A;
    if (k >= 0) sum += binom(Int(R), k);
  }
  return sum;
}

SumReport part6_check(long p, long R, long A) {
  SumReport rep;
  rep.part = 6;
  rep.p = p;
  rep.r = R;
  rep.required_valuation = kValInfinity;
  rep.notes["A"] = std::to_string(A);
  rep.value = Rat(full_sum_M(p, R, A));
  if (A > 0) {
    Int target = 0;
    for (long i = 0; i <= R - 1; ++i) {
      Int w = binom(R - 1 - i, A - 1);
      if (w != 0) target += w * full_sum_M(p, i, 0);
    }
    rep.target = Rat(target);
  } else if (A < 0) {
    // row index R - A - i, not R - i: expanding M_{R-i,0} against
    // sum_i (-1)^i C(-A,i) C(x-i, k) = C(x+A, k+A) lands at row R + A otherwise
    Int target = 0;
    for (long i = 0; i <= -A; ++i) {
      Int w = binom(-A, i);
      if (i % 2 == 1) w = -w;
      target += w * full_sum_M(p, R - A - i, 0);
    }
    rep.target = Rat(target);
  } else {
    rep.target = rep.value;
  }
  rep.achieved_valuation = (rep.value == rep.target) ? kValInfinity : padic_valuation(rep.value - rep.target, Int(p));
  rep.pass = rep.value == rep.target;
  return rep;
}

}  // namespace

SumReport binomial_sum_check(int part, long p, long r, std::optional<long> A) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("binomial_sum_check: p must be an odd prime");
  if (part < 1 || part > 6) throw UsageError("binomial_sum_check: part must be in 1..6");
  if (part == 6) {
    if (!A) throw UsageError("binomial_sum_check: part 6 needs the offset A");
    if (r < 0) throw UsageError("binomial_sum_check: part 6 needs R >= 0");
    return part6_check(p, r, *A);
  }
  if (r < 1) throw UsageError("binomial_sum_check: r must be >= 1");
  Decomposition d = decompose(p, r);

  SumReport rep;
  rep.part = part;
  rep.p = p;
  rep.r = r;
  switch (part) {
    case 1: {
      rep.value = Rat(column_sums(p, r).plain);
      rep.target = Rat(d.t, d.s) * p;
      rep.required_valuation = 2;
      break;
    }
    case 2:
      return part2_check(p, r);
    case 3: {
      if (d.s == 1) throw UsageError("binomial_sum_check: part 3 needs s != 1");
      rep.value = Rat(column_sums(p, r).weighted);
      rep.target = Rat(0);
      rep.required_valuation = 1;
      break;
    }
    case 4: {
      if (d.s == 1) throw UsageError("binomial_sum_check: part 4 needs s != 1");
      if (d.t % p != 0) throw UsageError("binomial_sum_check: part 4 needs p | t");
      rep.value = Rat(column_sums(p, r).weighted);
      rep.target = Rat(0);
      rep.required_valuation = 2;
      break;
    }
    case 5: {
      if (!A || *A < 0) throw UsageError("binomial_sum_check: part 5 needs A >= 0");
      long nu = mod_reduce(*A, p - 1);
      rep.value = Rat(residue_class_sum(p, r, *A));
      Int tgt = binom(d.s, nu);
      if (d.s == p - 1 && nu == 0) tgt *= 2;
      rep.target = Rat(tgt);
      rep.required_valuation = 1;
      rep.notes["A"] = std::to_string(*A);
      break;
    }
    default:
      throw InternalError("unreachable");
  }
  finish_report(rep, p);
  return rep;
}

bool alternating_binomial_identity(long r, long L, long b, long N) {
  if (r < 0 || L < 0 || b < 0 || N < 0) throw UsageError("alternating identity: all parameters must be >= 0");
  if (r < (L + b) * N) throw UsageError("alternating identity: requires r >= (L+b)N");
  for (long u = 0; u <= L; ++u) {
    Int sum = 0;
    for (long j = b; j <= b + L; ++j) {
      Int term = binom(L, j - b) * binom(Int(r - j * N), u);
      if ((j - b) % 2 == 1) term = -term;
      sum += term;
    }
    Int expect = (u == L) ? int_pow(Int(N), static_cast<unsigned long>(L)) : Int(0);
    if (sum != expect) return false;
  }
  return true;
}

bool binomial_shift_identity(int which, long A, long z_or_i, long w, long p) {
  if (A < 0 || z_or_i < 0 || w < 0) throw UsageError("shift identity: A, z, w must be >= 0");
  if (which == 1) {
    Int lhs = binom(z_or_i, w);
    Int rhs = 0;
    for (long v = 0; v <= w; ++v) {
      Int term = binom(Int(A + w - v - 1), w - v) * binom(Int(z_or_i + A), v);
      if ((w - v) % 2 == 1) term = -term;
      rhs += term;
    }
    return lhs == rhs;
  }
  if (which == 2) {
    if (p < 3 || !is_prime(Int(p))) throw UsageError("shift identity: p must be an odd prime");
    Int lhs = binom(z_or_i, w);
    Int rhs = 0;
    for (long v = 0; v <= w; ++v) {
      Int term = binom(Int(A - v), w - v) * binom(Int(z_or_i * (p - 1) + A), v);
      if (v % 2 == 1) term = -term;
      rhs += term;
    }
    return (lhs - rhs) % p == 0;
  }
  throw UsageError("shift identity: which must be 1 or 2");
}

SumReport kappa_congruence_check(long p, long r, long m, long l, long w, long L,
                                 const std::string& variant) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("kappa congruence: p must be an odd prime");
  if (m < 0 || l < 0 || w < 0) throw UsageError("kappa congruence: m, l, w must be >= 0");
  if (p <= m + 1) throw UsageError("kappa congruence: requires p > m + 1");
  if (L < 1 || L > m) throw UsageError("kappa congruence: requires 1 <= L <= m");
  if (r < (m + 1) * (p + 1)) throw UsageError("kappa congruence: requires r >= (m+1)(p+1)");
  if (mod_reduce(r - 2 * L, p - 1) != 0) throw UsageError("kappa congruence: requires r == 2L mod p-1");
  bool weight_ip;
  if (variant == "binom-ip") {
    weight_ip = true;
  } else if (variant == "binom-i") {
    weight_ip = false;
  } else {
    throw UsageError("kappa congruence: variant must be binom-i or binom-ip");
  }

  long top = r - m + l;
  Int lhs = 0;
  // all i with 0 <= i(p-1)+l <= top contribute; outside that the binomial is 0
  long i_lo = -(l / (p - 1)) - 1;
  long i_hi = (r - m) / (p - 1) + 1;
  for (long i = i_lo; i <= i_hi; ++i) {
    long k = i * (p - 1) + l;
    if (k < 0 || k > top) continue;
    Int weight = weight_ip ? binom(Int(i * (p - 1)), w) : binom(Int(i), w);
    if (weight == 0) continue;
    lhs += binom(Int(top), k) * weight;
  }

  Int rhs = 0;
  for (long v = 0; v <= w; ++v) {
    Int kv;
    if (weight_ip) {
      kv = binom(Int(l + w - v - 1), w - v) * eta(2 * L - m + l - v, l - v);
      if ((w - v) % 2 == 1) kv = -kv;
    } else {
      kv = binom(Int(l - v), w - v) * eta(2 * L - m + l - v, l - v);
      if (v % 2 == 1) kv = -kv;
    }
    rhs += kv * binom(Int(top), v);
  }

  SumReport rep;
  rep.part = 0;
  rep.p = p;
  rep.r = r;
  rep.value = Rat(lhs);
  rep.target = Rat(rhs);
  rep.required_valuation = 1;
  rep.notes["m"] = std::to_string(m);
  rep.notes["l"] = std::to_string(l);
  rep.notes["w"] = std::to_string(w);
  rep.notes["L"] = std::to_string(L);
  rep.notes["variant"] = variant;
  finish_report(rep, p);
  return rep;
}

SweepGrid default_sweep_grid(int part) {
  SweepGrid g;
  switch (part) {
    case 1:
      g.ps = {3, 5, 7, 11, 13};
      g.r_max = 1500;
      break;
    case 2:
      g.ps = {3, 5, 7};
      g.t_max = 0;  // derived per p below (t in 1..2p)
      break;
    case 3:
    case 4:
      g.ps = {3, 5, 7, 11};
      g.r_max = 1000;
      break;
    case 5:
      g.ps = {3, 5, 7, 11};
      g.r_max = 300;
      break;
    case 6:
      g.ps = {3, 5, 7};
      g.r_max = 60;
      g.A_min = -5;
      g.A_max = 10;
      break;
    default:
      throw UsageError("sweep: part must be in 1..6");
  }
  return g;
}

SweepResult sweep_binomial_sums(int part, const SweepGrid& grid, int jobs) {
  struct Point {
    long p, r;
    std::optional<long> A;
  };
  std::vector<Point> points;
  for (long p : grid.ps) {
    switch (part) {
      case 1:
        for (long r = p; r <= grid.r_max; ++r) points.push_back({p, r, std::nullopt});
        break;
      case 2: {
        long t_max = grid.t_max > 0 ? grid.t_max : 2 * p;
        for (long s = 1; s <= p - 1; ++s)
          for (long t = 1; t <= t_max; ++t) points.push_back({p, t * (p - 1) + s, std::nullopt});
        break;
      }
      case 3:
      case 4:
        for (long r = p; r <= grid.r_max; ++r) {
          Decomposition d = decompose(p, r);
          if (d.s == 1) continue;
          if (part == 4 && d.t % p != 0) continue;
          points.push_back({p, r, std::nullopt});
        }
        break;
      case 5:
        for (long r = 1; r <= grid.r_max; ++r)
          for (long A = 0; A <= 2 * (p - 1); ++A) points.push_back({p, r, A});
        break;
      case 6:
        for (long R = 0; R <= grid.r_max; ++R)
          for (long A = grid.A_min; A <= grid.A_max; ++A) points.push_back({p, R, A});
        break;
      default:
        throw UsageError("sweep: part must be in 1..6");
    }
  }

  std::vector<char> ok(points.size(), 0);
  std::vector<SumReport> reports(points.size());
  parallel_for(static_cast<long>(points.size()), jobs, [&](long i) {
    const Point& pt = points[static_cast<size_t>(i)];
    SumReport rep = binomial_sum_check(part, pt.p, pt.r, pt.A);
    ok[static_cast<size_t>(i)] = rep.pass ? 1 : 0;
    if (!rep.pass) reports[static_cast<size_t>(i)] = rep;
  });

  SweepResult out;
  out.total = static_cast<long>(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (!ok[i]) {
      out.failed += 1;
      out.failures.push_back(reports[i]);
    }
  }
  return out;
}

SweepResult sweep_alternating(long L_max, long b_max, long N_max, long extent, int jobs) {
  struct Point {
    long r, L, b, N;
  };
  std::vector<Point> points;
  for (long L = 0; L <= L_max; ++L)
    for (long b = 0; b <= b_max; ++b)
      for (long N = 1; N <= N_max; ++N)
        for (long r = (L + b) * N; r <= (L + b) * N + extent; ++r)
          points.push_back({r, L, b, N});

  std::vector<char> ok(points.size(), 0);
  parallel_for(static_cast<long>(points.size()), jobs, [&](long i) {
    const Point& pt = points[static_cast<size_t>(i)];
    ok[static_cast<size_t>(i)] =
        alternating_binomial_identity(pt.r, pt.L, pt.b, pt.N) ? 1 : 0;
  });

  SweepResult out;
  out.total = static_cast<long>(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (!ok[i]) {
      out.failed += 1;
      SumReport rep;
      rep.r = points[i].r;
      rep.notes["L"] = std::to_string(points[i].L);
      rep.notes["b"] = std::to_string(points[i].b);
      rep.notes["N"] = std::to_string(points[i].N);
      out.failures.push_back(rep);
    }
  }
  return out;
}

}  // namespace ts
