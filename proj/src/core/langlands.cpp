#include "core/langlands.hpp"

#include <algorithm>

#include "core/roots.hpp"
#include "core/sums.hpp"

namespace ts {

namespace {

MPoly var_r() { return MPoly::var(var_index("r")); }
MPoly var_s() { return MPoly::var(var_index("s")); }
MPoly var_t() { return MPoly::var(var_index("t")); }
MPoly var_p() { return MPoly::var(var_index("p")); }

FunMat to_funmat(const PolyMat& m) {
  FunMat out(m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) out.at(i, j) = RatFun(m.at(i, j));
  return out;
}

// The shared column body: -binom(r-alpha+l, l)*[w=0]
//   + sum_v (-1)^v binom(l-v, w-v) eta(2L-alpha+l-v, l-v) binom(r-alpha+l, v).
MPoly column_entry_body(const MPoly& R, long m, long alpha, long L, long l, long w) {
  (void)m;
  MPoly base = R - MPoly(alpha - l);
  MPoly entry;
  if (w == 0) entry -= gbinom(base, l);
  for (long v = 0; v <= w; ++v) {
    Int c = binom(Int(l - v), w - v) * eta(2 * L - alpha + l - v, l - v);
    if (v % 2 == 1) c = -c;
    if (c != 0) entry += gbinom(base, v) * Rat(c);
  }
  return entry;
}

}  // namespace

void check_matrix_params(long m, long alpha, long L) {
  if (m < 1) throw UsageError("matrix params: m must be >= 1");
  if (alpha < 0 || alpha > m) throw UsageError("matrix params: alpha must be in 0..m");
  if (L < 1 || L > m) throw UsageError("matrix params: L must be in 1..m");
}

PolyMat construct_matrix(long m, long alpha, long L) {
  check_matrix_params(m, alpha, L);
  MPoly R = var_r();
  PolyMat A(alpha + 1, m + 3);

  A.at(0, 0) += MPoly(1L);
  A.at(alpha, 0) -= MPoly(alpha % 2 == 0 ? 1L : -1L);

  if (L >= alpha && m + alpha >= 2 * L) {
    MPoly top = MPoly(2 * L) - R;
    for (long w = 0; w <= alpha; ++w) A.at(w, 1) = gbinom(top, w);
    A.at(alpha, 1) -= MPoly(1L);
  }

  for (long l = alpha - m; l <= alpha; ++l) {
    long col = l + 2 - alpha + m;
    MPoly base = R - MPoly(alpha - l);
    for (long w = 0; w <= alpha; ++w) {
      MPoly entry = column_entry_body(R, m, alpha, L, l, w);
      if (m + alpha >= 2 * L)
        entry -= gbinom(base, 2 * L - alpha) * gbinom(MPoly(2 * L) - R, w);
      A.at(w, col) = entry;
    }
  }
  return A;
}

MPoly gcd_for_the_matrix(long m, long alpha, long L) {
  PolyMat A = construct_matrix(m, alpha, L);
  std::vector<long> cols = {0, 1};
  for (long c = m - alpha + 2; c <= m + 2; ++c) cols.push_back(c);
  long n = alpha + 1;
  long nc = static_cast<long>(cols.size());  // alpha + 3

  MPoly g;
  for (long d1 = 0; d1 < nc; ++d1) {
    for (long d2 = d1 + 1; d2 < nc; ++d2) {
      PolyMat M(n, n);
      long cj = 0;
      for (long j = 0; j < nc; ++j) {
        if (j == d1 || j == d2) continue;
        for (long i = 0; i < n; ++i) M.at(i, cj) = A.at(i, cols[static_cast<size_t>(j)]);
        ++cj;
      }
      g = gcd(g, det_bareiss(std::move(M)));
      if (!g.is_zero() && g.is_constant()) return MPoly(1L);
    }
  }
  return g;
}

namespace {

// Scale a kernel row to polynomial entries sharing no factor, with the first
// nonzero entry's leading coefficient positive.
std::vector<MPoly> clear_kernel_row(const std::vector<RatFun>& row) {
  MPoly den_lcm(1L);
  for (const RatFun& f : row) {
    if (f.is_zero()) continue;
    MPoly g = gcd(den_lcm, f.den);
    den_lcm = *div_exact(den_lcm * f.den, g);
  }
  std::vector<MPoly> cleared;
  cleared.reserve(row.size());
  MPoly common;
  for (const RatFun& f : row) {
    MPoly e = f.num * *div_exact(den_lcm, f.den);
    common = gcd(common, e);
    cleared.push_back(std::move(e));
  }
  if (!common.is_zero() && !common.is_constant()) {
    for (MPoly& e : cleared) e = *div_exact(e, common);
  }
  Rat scale;  // gcd of the entry contents, so the integer coefficients are coprime
  for (const MPoly& e : cleared) {
    if (e.is_zero()) continue;
    Rat c = e.content();
    if (scale == 0) {
      scale = c;
    } else {
      Int n = gcd(Int(scale.get_num()), Int(c.get_num()));
      Int d = Int(scale.get_den()) * Int(c.get_den()) /
              gcd(Int(scale.get_den()), Int(c.get_den()));
      scale = Rat(n) / Rat(d);
    }
  }
  if (scale != 0) {
    Rat inv = Rat(1) / scale;
    for (MPoly& e : cleared) e *= inv;
  }
  for (const MPoly& e : cleared) {
    if (e.is_zero()) continue;
    if (e.leading_coeff() < 0)
      for (MPoly& f : cleared) f = -f;
    break;
  }
  return cleared;
}

}  // namespace

ExceptionalResult exceptional_cases(long m, long alpha, long L) {
  PolyMat Ap = construct_matrix(m, alpha, L);
  FunMat A = to_funmat(Ap);
  std::vector<std::vector<RatFun>> K = kernel_basis(A);

  ExceptionalResult out;
  out.kernel_dimension = static_cast<long>(K.size());
  if (!K.empty()) {
    out.kernel_vector = K[0];
    out.kernel_cleared = clear_kernel_row(K[0]);
    out.kernel_factor = K[0][0];
    const RatFun& last = K[0][static_cast<size_t>(m + 2)];
    if (!last.is_zero()) out.kernel_factor /= last;
    out.product = RatFun(Ap.at(0, 0)) * out.kernel_factor;
  } else {
    out.kernel_factor = RatFun(1L);
    out.product = RatFun(1L);
  }
  if (2 * L - 1 >= alpha && alpha >= L) {
    out.product *= RatFun(gcd_for_the_matrix(m, alpha, L));
    out.used_gcd_factor = true;
  }
  return out;
}

std::vector<RootReport> roots_for_all_matrices(long m) {
  if (m < 1) throw UsageError("roots_for_all_matrices: m must be >= 1");
  std::vector<RootReport> out;
  for (long L = 1; L <= m; ++L) {
    RootReport rep;
    rep.m = m;
    rep.L = L;
    // roots of a product are the union of the factors' roots; rooting each
    // factor keeps the integer coefficients that must be factored small
    std::vector<Rat> roots;
    for (long alpha = 1; alpha <= m; ++alpha) {
      RatFun f = exceptional_cases(m, alpha, L).product;
      if (f.is_zero() || f.num.is_constant()) continue;
      std::vector<Rat> part = rational_roots(f);
      roots.insert(roots.end(), part.begin(), part.end());
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    rep.roots = std::move(roots);
    for (const Rat& z : rep.roots) {
      if (z.get_den() != 1) rep.all_integral = false;
      if (z < Rat(2 * (L - m)) || z > Rat(2 * L)) rep.in_window = false;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

PolyMat construct_small_matrix(long m, long alpha, long L) {
  check_matrix_params(m, alpha, L);
  MPoly R = var_r();
  PolyMat A(2 * m + 2 - alpha, alpha + 1);
  for (long w = 0; w <= 2 * m + 1 - alpha; ++w) {
    for (long l = 0; l <= alpha; ++l) {
      MPoly entry = column_entry_body(R, m, alpha, L, l, w);
      if (alpha >= L) {
        MPoly base = R - MPoly(alpha - l);
        entry -= gbinom(base, 2 * L - alpha) * gbinom(MPoly(2 * L) - R, w);
      }
      A.at(w, l) = entry;
    }
  }
  return A;
}

MwList find_m_w(long m, long alpha, long L) {
  PolyMat Sp = construct_small_matrix(m, alpha, L);
  FunMat A = to_funmat(Sp);
  FunMat B(alpha, alpha + 1);
  for (long i = 0; i < alpha; ++i)
    for (long j = 0; j <= alpha; ++j) B.at(i, j) = A.at(i, j);
  std::vector<std::vector<RatFun>> K = kernel_basis(B);
  if (K.empty()) throw InternalError("find_m_w: kernel of a wide matrix came back empty");

  MwList out;
  out.kernel_dimension = static_cast<long>(K.size());
  out.constants = K[0];
  out.values.reserve(static_cast<size_t>(A.rows));
  for (long i = 0; i < A.rows; ++i) {
    RatFun v;
    for (long j = 0; j <= alpha; ++j) v += A.at(i, j) * out.constants[static_cast<size_t>(j)];
    out.values.push_back(std::move(v));
  }
  return out;
}

Int restricted_column_sum(long p, long r, long alpha, long l, long w) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("restricted sum: p must be an odd prime");
  if (alpha < 0 || w < 0) throw UsageError("restricted sum: alpha and w must be >= 0");
  if (r <= 2 * alpha) throw UsageError("restricted sum: requires r > 2*alpha");
  Int sum = 0;
  for (long i = 1; i * (p - 1) < r - 2 * alpha; ++i) {
    Int cw = binom(Int(i), w);
    if (cw == 0) continue;
    long k = i * (p - 1) + l;
    if (k < 0) continue;
    sum += binom(Int(r - alpha + l), k) * cw;
  }
  return sum;
}

Rat eval_m_w_exact(long p, long r, long alpha, const std::vector<Rat>& C, long w) {
  if (static_cast<long>(C.size()) != alpha)
    throw UsageError("eval_m_w_exact: need exactly alpha constants");
  Rat sum(restricted_column_sum(p, r, alpha, 0, w));
  for (long l = 1; l <= alpha; ++l)
    sum += C[static_cast<size_t>(l - 1)] * Rat(restricted_column_sum(p, r, alpha, l, w));
  return sum;
}

long eval_m_w_valuation(long p, long r, long alpha, const std::vector<Rat>& C, long w) {
  return padic_valuation(eval_m_w_exact(p, r, alpha, C, w), Int(p));
}

FunMat construct_big_matrix(long m, long alpha) {
  if (m < 1) throw UsageError("big matrix: m must be >= 1");
  if (alpha < 0 || alpha > m) throw UsageError("big matrix: alpha must be in 0..m");
  MPoly R = var_r(), S = var_s(), P = var_p();
  FunMat A(alpha + 1, alpha + 1);
  for (long w = 0; w <= alpha; ++w) {
    for (long l = 0; l <= alpha; ++l) {
      RatFun entry;
      if (l == 0) {
        MPoly numer = (S - R) * P * gbinom(R - MPoly(alpha), w);
        MPoly denom = (S - MPoly(alpha)) * gbinom(S - MPoly(alpha + 1), w);
        RatFun a(numer, denom);
        if (w % 2 == 1) a = -a;
        entry += a;
      }
      MPoly b;
      MPoly base = R - MPoly(alpha - l);
      if (w == 0) b -= gbinom(base, l);
      for (long v = 0; v <= w; ++v) {
        Int c = binom(Int(l + w - v - 1), w - v);
        if ((w - v) % 2 == 1) c = -c;
        if (c == 0) continue;
        b += gbinom(S - MPoly(alpha - l + v), l - v) * gbinom(base, v) * Rat(c);
      }
      entry += RatFun(b);
      A.at(w, l) = entry;
    }
  }
  return A;
}

BigPolyResult polynomial_from_the_big_matrix(long m, long alpha) {
  FunMat A = construct_big_matrix(m, alpha);
  RatFun P(var_p());
  for (long w = 0; w <= alpha; ++w) A.at(w, 0) /= P;

  FunMat B(alpha, alpha + 1);
  for (long i = 0; i < alpha; ++i)
    for (long j = 0; j <= alpha; ++j) B.at(i, j) = A.at(i, j);
  std::vector<std::vector<RatFun>> K = kernel_basis(B);

  BigPolyResult out;
  if (!K.empty() && K[0][0] == RatFun(1L)) {
    RatFun x;
    for (long v = 0; v <= alpha; ++v) x += A.at(alpha, v) * K[0][static_cast<size_t>(v)];
    out.value = x.subst(var_index("r"), var_s() - var_t());
    out.kernel_ok = true;
  } else {
    out.value = RatFun(var_t() + MPoly(1L));
    out.kernel_ok = false;
  }
  return out;
}

ConjectureReport verify_conjecture(long m) {
  if (m < 1) throw UsageError("conjecture: m must be >= 1");
  ConjectureReport rep;
  rep.m = m;
  rep.root_reports = roots_for_all_matrices(m);
  rep.roots_ok = true;
  for (const RootReport& rr : rep.root_reports)
    if (!rr.all_integral || !rr.in_window) rep.roots_ok = false;

  rep.kernels_ok = true;
  RatFun f(1L);
  for (long alpha = 0; alpha <= m - 1; ++alpha) {
    BigPolyResult bp = polynomial_from_the_big_matrix(m, alpha);
    if (!bp.kernel_ok) rep.kernels_ok = false;
    f *= bp.value;
  }
  rep.product = f;

  MPoly g(1L);
  for (long alpha = 0; alpha <= m - 1; ++alpha)
    g *= (var_t() - MPoly(alpha)).pow(static_cast<unsigned long>(m));
  std::optional<MPoly> q = div_exact(g * f.den, f.num);
  rep.integral_ok = q.has_value();
  if (q) rep.quotient = *q;
  rep.ok = rep.roots_ok && rep.integral_ok && rep.kernels_ok;
  return rep;
}

namespace {

// product of (S - i) over lo <= i <= hi; empty range gives 1
MPoly s_band(const MPoly& S, long lo, long hi) {
  MPoly out(1L);
  for (long i = lo; i <= hi; ++i) out *= S - MPoly(i);
  return out;
}

}  // namespace

HyperReport verify_hypergeometric(long alpha_max) {
  if (alpha_max < 1) throw UsageError("hyper: alpha_max must be >= 1");
  HyperReport rep;
  rep.alpha_max = alpha_max;
  MPoly R = var_r(), S = var_s();

  for (long alpha = 1; alpha <= alpha_max; ++alpha) {
    HyperReport::PerAlpha pa;
    pa.alpha = alpha;

    // All identities are cleared by E = prod_{i=-1}^{alpha} (s - i); the
    // coefficient d_j has Pochhammer denominator (s-alpha+1)...(s-alpha+1+j),
    // so D_j = d_j * E stays polynomial.
    std::vector<MPoly> D(static_cast<size_t>(alpha) + 1);
    for (long j = 0; j <= alpha; ++j) {
      Rat c = Rat(factorial(j)) / Rat(j + 1) * Rat(binom(alpha, j));
      if (j % 2 == 1) c = -c;
      MPoly lin = (S + MPoly(1L)) * Rat(j + 1) + R * Rat(alpha - j);
      D[static_cast<size_t>(j)] =
          lin * (S - MPoly(alpha)) * s_band(S, -1, alpha - 2 - j) * c;
    }

    {
      MPoly lhs;
      for (long j = 1; j <= alpha; ++j)
        lhs += D[static_cast<size_t>(j)] *
               (gbinom(S + MPoly(j), j) - gbinom(R + MPoly(j), j));
      MPoly rhs = (R - S) * (S + MPoly(1L)) * s_band(S, 1, alpha);
      pa.sum_identity = lhs == rhs;
    }

    {
      MPoly lhs;
      for (long j = 0; j <= alpha; ++j) {
        MPoly term = falling_factorial(S + MPoly(j - 1), j) * (S - MPoly(alpha)) *
                     s_band(S, -1, alpha - j - 1) * Rat(binom(alpha, j));
        if (j % 2 == 1) term = -term;
        lhs += term;
      }
      pa.alternating_identity = lhs.is_zero();
    }

    pa.weighted.assign(static_cast<size_t>(alpha), 0);
    for (long w = 1; w <= alpha; ++w) {
      MPoly lhs;
      for (long j = 1; j <= alpha; ++j) {
        MPoly inner;
        for (long v = 0; v <= w; ++v) {
          Int c = binom(Int(j + w - v - 1), w - v);
          if ((w - v) % 2 == 1) c = -c;
          if (c == 0) continue;
          inner += gbinom(R + MPoly(j), v) * gbinom(S + MPoly(j - v), j - v) * Rat(c);
        }
        lhs += D[static_cast<size_t>(j)] * inner;
      }
      MPoly rhs = (R - S) * falling_factorial(R, w) * (S + MPoly(1L)) *
                  s_band(S, w + 1, alpha);
      if (w % 2 == 1) rhs = -rhs;
      if (w == alpha)
        rhs += falling_factorial(S - R, alpha + 1) * (S + MPoly(1L));
      pa.weighted[static_cast<size_t>(w - 1)] = (lhs == rhs) ? 1 : 0;
    }

    pa.ok = pa.sum_identity && pa.alternating_identity &&
            std::all_of(pa.weighted.begin(), pa.weighted.end(),
                        [](char v) { return v != 0; });
    if (!pa.ok) rep.ok = false;
    rep.checks.push_back(std::move(pa));
  }
  return rep;
}

}  // namespace ts
