#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "core/fppoly.hpp"
#include "core/num.hpp"
#include "core/sums.hpp"

using namespace ts;

namespace {

FpHomPoly fp_mul(const FpHomPoly& f, const FpHomPoly& g) {
  FpHomPoly out(f.p, f.r + g.r);
  for (long i = 0; i <= f.r; ++i)
    for (long j = 0; j <= g.r; ++j)
      out.c[static_cast<size_t>(i + j)] =
          (out.c[static_cast<size_t>(i + j)] + f.c[static_cast<size_t>(i)] * g.c[static_cast<size_t>(j)]) % f.p;
  return out;
}

// x y^p - x^p y
FpHomPoly fp_theta(long p) {
  FpHomPoly th(p, p + 1);
  th.c[1] = 1;
  th.c[static_cast<size_t>(p)] = p - 1;
  return th;
}

long det_mod(const Mat2& g, long p) { return mod_reduce(g.a * g.d - g.b * g.c, p); }

long pow_mod(long b, long e, long p) {
  long acc = 1;
  b = mod_reduce(b, p);
  for (; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) acc = acc * b % p;
  return acc;
}

}  // namespace

TEST_CASE("monomials, addition, scaling") {
  FpHomPoly f = fp_monomial(3, 6, 2);
  CHECK(f.c == std::vector<long>{0, 0, 1, 0, 0, 0, 0});
  CHECK_FALSE(f.is_zero());
  CHECK(FpHomPoly(3, 6).is_zero());
  CHECK_THROWS_AS(fp_monomial(3, 6, 7), UsageError);
  CHECK_THROWS_AS(fp_monomial(3, 6, -1), UsageError);

  FpHomPoly g = fp_scale(f, 2);
  CHECK(g.c[2] == 2);
  CHECK(fp_scale(f, 3).is_zero());
  CHECK(fp_add(f, g).c[2] == 0);
  CHECK_THROWS_AS(fp_add(f, fp_monomial(3, 4, 1)), UsageError);
}

TEST_CASE("matrix action on homogeneous polynomials") {
  FpHomPoly f = fp_monomial(5, 7, 3);
  CHECK(gl2_act(f, Mat2{1, 0, 0, 1}) == f);

  FpHomPoly swapped = gl2_act(f, Mat2{0, 1, 1, 0});
  CHECK(swapped == fp_monomial(5, 7, 4));

  // diag(a, d) multiplies x^i y^{r-i} by a^i d^{r-i}
  FpHomPoly scaled = gl2_act(f, Mat2{2, 0, 0, 3});
  FpHomPoly expect = fp_scale(f, pow_mod(2, 3, 5) * pow_mod(3, 4, 5) % 5);
  CHECK(scaled == expect);

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> pick(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    FpHomPoly h(5, 6);
    for (auto& cc : h.c) cc = pick(rng);
    Mat2 g{pick(rng), pick(rng), pick(rng), pick(rng)};
    if (det_mod(g, 5) == 0) continue;
    long dinv = mod_inverse(det_mod(g, 5), 5);
    Mat2 ginv{mod_reduce(g.d * dinv, 5), mod_reduce(-g.b * dinv, 5),
              mod_reduce(-g.c * dinv, 5), mod_reduce(g.a * dinv, 5)};
    REQUIRE(gl2_act(gl2_act(h, g), ginv) == h);
  }
}

TEST_CASE("character sum operator on monomials") {
  FpHomPoly img = psi_apply(fp_monomial(3, 6, 2), 2);
  CHECK(img.r == 0);
  CHECK(img.c == std::vector<long>{1});

  CHECK(psi_apply(fp_monomial(3, 6, 0), 2).is_zero());
  CHECK(psi_apply(fp_monomial(3, 6, 6), 2).is_zero());

  img = psi_apply(fp_monomial(5, 9, 4), 1);
  CHECK(img.r == 3);
  CHECK(img.c == std::vector<long>{0, 0, 0, 1});

  CHECK(psi_matrix_entry(5, 9, 1, 3, 2) == 2);
  CHECK(psi_matrix_entry(3, 6, 2, 0, 0) == 0);
  CHECK(psi_matrix_entry(3, 6, 2, 2, 0) == 1);

  CHECK_THROWS_AS(psi_apply(fp_monomial(3, 6, 2), 0), UsageError);
  CHECK_THROWS_AS(psi_apply(fp_monomial(3, 6, 2), 3), UsageError);
  CHECK_THROWS_AS(psi_apply(fp_monomial(3, 7, 1), 2), UsageError);
  CHECK_THROWS_AS(psi_matrix_entry(3, 6, 2, 7, 0), UsageError);
  CHECK_THROWS_AS(psi_matrix_entry(3, 6, 2, 2, 1), UsageError);
}

TEST_CASE("closed form matches the defining sum everywhere") {
  for (long p : {3L, 5L}) {
    for (long r = 1; r <= 4 * (p + 1); ++r) {
      Decomposition d = decompose(p, r);
      if (d.t < 2) continue;
      for (long i = 0; i <= r; ++i) {
        FpHomPoly img = psi_apply(fp_monomial(p, r, i), d.s);
        REQUIRE(img.r == p - 1 - d.s);
        for (long j = 0; j <= p - 1 - d.s; ++j)
          REQUIRE(img.c[static_cast<size_t>(j)] == psi_matrix_entry(p, r, d.s, i, j));
      }
    }
  }
}

TEST_CASE("progression monomials map to the top power") {
  for (long p : {3L, 5L, 7L}) {
    for (long r = 1; r <= 4 * (p + 1); ++r) {
      Decomposition d = decompose(p, r);
      if (d.t < 2) continue;
      for (long l = 1; l <= d.t - 1; ++l) {
        FpHomPoly img = psi_apply(fp_monomial(p, r, l * (p - 1)), d.s);
        REQUIRE(img == fp_monomial(p, p - 1 - d.s, p - 1 - d.s));
      }
    }
  }
}

TEST_CASE("equivariance with a determinant twist") {
  std::mt19937 rng(99);
  for (long p : {3L, 5L, 7L}) {
    long r = 3 * (p - 1) + 2;  // s = 2, t = 3
    Decomposition d = decompose(p, r);
    REQUIRE(d.s == 2);
    std::uniform_int_distribution<long> pick(0, p - 1);
    int done = 0;
    while (done < 25) {
      FpHomPoly f(p, r);
      for (auto& cc : f.c) cc = pick(rng);
      Mat2 g{pick(rng), pick(rng), pick(rng), pick(rng)};
      long det = det_mod(g, p);
      if (det == 0) continue;
      FpHomPoly lhs = psi_apply(gl2_act(f, g), d.s);
      FpHomPoly rhs = fp_scale(gl2_act(psi_apply(f, d.s), g), pow_mod(det, d.s, p));
      REQUIRE(lhs == rhs);
      ++done;
    }
  }
}

TEST_CASE("multiples of theta are killed") {
  std::mt19937 rng(17);
  for (long p : {3L, 5L}) {
    FpHomPoly th = fp_theta(p);
    std::uniform_int_distribution<long> pick(0, p - 1);
    for (int trial = 0; trial < 10; ++trial) {
      long dh = p - 1;  // deg(theta * h) = p+1+dh, same class as 2 mod p-1
      FpHomPoly h(p, dh);
      for (auto& cc : h.c) cc = pick(rng);
      FpHomPoly prod = fp_mul(th, h);
      Decomposition d = decompose(p, prod.r);
      if (d.t < 1) continue;
      REQUIRE(psi_apply(prod, d.s).is_zero());
    }
  }
}

TEST_CASE("repeated division by theta") {
  FpHomPoly th3 = fp_theta(3);
  ThetaDivideResult td = theta_divide(th3, 1);
  CHECK(td.requested == 1);
  CHECK(td.achieved == 1);
  CHECK(td.quotient.r == 0);
  CHECK(td.quotient.c == std::vector<long>{1});

  FpHomPoly f(3, 8);  // x^2 y^6 - x^6 y^2 = theta * (x y^3 + x^3 y) over F_3
  f.c[2] = 1;
  f.c[6] = 2;
  td = theta_divide(f, 1);
  CHECK(td.achieved == 1);
  CHECK(td.quotient.c == std::vector<long>{0, 1, 0, 1, 0});

  FpHomPoly mono = fp_monomial(3, 4, 4);
  td = theta_divide(mono, 1);
  CHECK(td.requested == 1);
  CHECK(td.achieved == 0);
  CHECK(td.quotient == mono);

  CHECK_THROWS_AS(theta_divide(mono, -1), UsageError);

  std::mt19937 rng(31);
  for (long p : {3L, 5L}) {
    FpHomPoly th = fp_theta(p);
    std::uniform_int_distribution<long> pick_exp(0, 3);
    for (int trial = 0; trial < 12; ++trial) {
      long k = pick_exp(rng);
      long a = pick_exp(rng), b = pick_exp(rng);
      FpHomPoly g = fp_monomial(p, a + b, a);
      FpHomPoly prod = g;
      for (long i = 0; i < k; ++i) prod = fp_mul(prod, th);
      ThetaDivideResult res = theta_divide(prod, k + 2);
      REQUIRE(res.achieved == k);
      FpHomPoly back = res.quotient;
      for (long i = 0; i < res.achieved; ++i) back = fp_mul(back, th);
      REQUIRE(back == prod);
    }
  }
}

TEST_CASE("stable span closures match the reference lists") {
  SpanClosure cl = span_closure({fp_monomial(3, 6, 0)});
  CHECK(cl.dimension == 3);
  CHECK(cl.generations >= 1);
  CHECK(static_cast<long>(cl.basis.size()) == cl.dimension);
  std::vector<FpHomPoly> ref = standard_span_list(3, 6, 0);
  for (const FpHomPoly& b : cl.basis) REQUIRE(in_row_span(b, ref));
  for (const FpHomPoly& v : ref) REQUIRE(in_row_span(v, cl.basis));

  SpanClosure cl2 = span_closure({fp_monomial(5, 28, 0), fp_monomial(5, 28, 1)});
  CHECK(cl2.dimension == 8);
  std::vector<FpHomPoly> ref2 = standard_span_list(5, 28, 1);
  for (const FpHomPoly& b : cl2.basis) REQUIRE(in_row_span(b, ref2));
  for (const FpHomPoly& v : ref2) REQUIRE(in_row_span(v, cl2.basis));

  CHECK_THROWS_AS(span_closure({}), UsageError);
  CHECK_THROWS_AS(span_closure({fp_monomial(3, 6, 0), fp_monomial(3, 4, 0)}), UsageError);
  CHECK_THROWS_AS(standard_span_list(3, 6, 3), UsageError);
  CHECK_THROWS_AS(standard_span_list(3, 6, -1), UsageError);
}

TEST_CASE("row span membership") {
  FpHomPoly a = fp_monomial(3, 4, 0);
  FpHomPoly b = fp_monomial(3, 4, 1);
  CHECK(in_row_span(a, {a, b}));
  CHECK(in_row_span(fp_add(a, fp_scale(b, 2)), {a, b}));
  CHECK_FALSE(in_row_span(fp_monomial(3, 4, 2), {a, b}));
  CHECK(in_row_span(FpHomPoly(3, 4), {a}));
  CHECK_THROWS_AS(in_row_span(fp_monomial(3, 5, 0), {a}), UsageError);
}

TEST_CASE("smallest primitive roots") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(11) == 2);
  CHECK(primitive_root(13) == 2);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    long g = primitive_root(p);
    for (long k = 1; k <= p - 2; ++k) REQUIRE(pow_mod(g, k, p) != 1);
    REQUIRE(pow_mod(g, p - 1, p) == 1);
  }
}
