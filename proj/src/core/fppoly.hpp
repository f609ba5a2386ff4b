#pragma once

// Homogeneous two-variable polynomials over F_p of a fixed degree r,
// stored densely by the exponent of x. Everything here works with the
// right action of GL_2(F_p) on row vectors, (f.g)(x,y) = f(ax+cy, bx+dy).

#include <vector>

#include "core/num.hpp"

namespace ts {

struct FpHomPoly {
  long p = 3;
  long r = 0;
  std::vector<long> c;  // c[i] = coefficient of x^i y^{r-i}, values in [0, p)

  FpHomPoly() = default;
  FpHomPoly(long p_, long r_) : p(p_), r(r_), c(static_cast<size_t>(r_ + 1), 0) {}
  bool is_zero() const;
  bool operator==(const FpHomPoly& o) const { return p == o.p && r == o.r && c == o.c; }
};

FpHomPoly fp_monomial(long p, long r, long i);

struct Mat2 {
  long a, b, c, d;
};

// Right action on row vectors: substitute x -> a*x + c*y, y -> b*x + d*y.
FpHomPoly gl2_act(const FpHomPoly& f, const Mat2& g);

FpHomPoly fp_add(const FpHomPoly& f, const FpHomPoly& g);
FpHomPoly fp_scale(const FpHomPoly& f, long k);

// Sum over all (u,v) in F_p^2 of f(u,v) * (vX - uY)^{p-1-s}, where
// 1 <= s <= p-1 and s == r (mod p-1). The result is homogeneous of
// degree p-1-s in (X, Y). Computed directly from the definition (with
// the convention 0^0 = 1), so it can serve as an oracle for the closed
// form below.
FpHomPoly psi_apply(const FpHomPoly& f, long s);

// Closed form for the map above on monomials: the coefficient of
// X^j Y^{p-1-s-j} in psi(x^i y^{r-i}). Zero when i is 0 or r, or when
// j != i - s (mod p-1); otherwise (-1)^{s+j} binom(p-1-s, j) mod p.
long psi_matrix_entry(long p, long r, long s, long i, long j);

struct ThetaDivideResult {
  long requested = 0;
  long achieved = 0;          // largest k' <= requested with theta^{k'} | f
  FpHomPoly quotient;         // f / theta^achieved
};

// Divide f by theta = x y^p - x^p y as many times as possible, up to `times`.
ThetaDivideResult theta_divide(const FpHomPoly& f, long times);

struct SpanClosure {
  long dimension = 0;
  std::vector<FpHomPoly> basis;  // row-reduced, leading coefficient 1
  long generations = 0;          // closure iterations until stable
};

// Smallest GL_2(F_p)-stable subspace containing the given polynomials,
// computed by saturating under upper/lower unipotents and a diagonal
// generator, row-reducing after each pass.
SpanClosure span_closure(const std::vector<FpHomPoly>& gens);

// The list of degree-r spanning candidates built from single monomials near
// the ends plus arithmetic-progression combinations in the middle band,
// parameterized by the cut depth m.
std::vector<FpHomPoly> standard_span_list(long p, long r, long m);

// Whether f lies in the row span of the given (already arbitrary) vectors.
bool in_row_span(const FpHomPoly& f, const std::vector<FpHomPoly>& rows);

long primitive_root(long p);

}  // namespace ts
