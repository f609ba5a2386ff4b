#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "core/matrix.hpp"
#include "core/mpoly.hpp"
#include "core/num.hpp"
#include "core/ratfun.hpp"
#include "core/roots.hpp"

using namespace ts;

namespace {

MPoly V(const char* name) { return MPoly::var(var_index(name)); }
MPoly K(long c) { return MPoly(c); }

}  // namespace

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(Int(18), Int(3)) == 2);
  CHECK(padic_valuation(Rat(9, 2), Int(3)) == 2);
  CHECK(padic_valuation(Rat(243, 2), Int(3)) == 5);
  CHECK(padic_valuation(Rat(1, 3), Int(3)) == -1);
  CHECK(padic_valuation(Int(0), Int(5)) == kValInfinity);
  CHECK(padic_valuation(Rat(0), Int(5)) == kValInfinity);
  CHECK(padic_valuation(Int(7), Int(5)) == 0);
  CHECK_THROWS_AS(padic_valuation(Int(12), Int(4)), UsageError);
}

TEST_CASE("primality and integer powers") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(3)));
  CHECK(is_prime(Int(97)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(91)));
  CHECK(int_pow(Int(3), 4) == 81);
  CHECK(int_pow(Int(10), 0) == 1);
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(binom(8L, 2) == 28);
  CHECK(binom(8L, 0) == 1);
  CHECK(binom(8L, 9) == 0);
  CHECK(binom(8L, -1) == 0);
  CHECK(binom(-1L, 2) == 1);
  CHECK(binom(-2L, 2) == 3);
  CHECK(binom(-2L, 3) == -4);
  CHECK(binom_rat(Rat(1, 2), 2) == Rat(-1, 8));
}

TEST_CASE("eta weight") {
  CHECK(eta(3, 1) == 3);
  CHECK(eta(0, 0) == 2);
  CHECK(eta(-1, -3) == 3);
  CHECK(eta(2, -1) == 0);

  auto reference = [](long X, long Y) -> Int {
    if (X >= 1) return Y >= 0 ? binom(X, Y) : Int(0);
    if (Y >= 0) {
      Int v = binom(Int(X - 1), Y);
      if (X == 0 && Y == 0) v *= 2;
      return v;
    }
    return X >= Y ? binom(Int(X - 1), X - Y) : Int(0);
  };
  for (long X = -12; X <= 12; ++X)
    for (long Y = -12; Y <= 12; ++Y) REQUIRE(eta(X, Y) == reference(X, Y));
}

TEST_CASE("factorials, rising and falling products") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(factorial(-1), UsageError);
  CHECK(rising_factorial(Rat(3), 3) == 60);
  CHECK(rising_factorial(Rat(3), 0) == 1);
  CHECK(falling_factorial(Rat(5), 2) == 20);
  CHECK_THROWS_AS(rising_factorial(Rat(3), -1), UsageError);
  MPoly r = V("r");
  CHECK(rising_factorial(r, 2) == r * r + r);
  CHECK(falling_factorial(r, 2) == r * r - r);
  CHECK(rising_factorial(r, 0) == K(1));
}

TEST_CASE("modular helpers") {
  CHECK(mod_reduce(-7L, 5) == 3);
  CHECK(mod_reduce(Int(-7), 5) == 3);
  CHECK(mod_reduce(12L, 5) == 2);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(1, 5) == 1);
  CHECK(rat_str(Rat(9, 2)) == "9/2");
  CHECK(rat_str(Rat(-3)) == "-3");
  CHECK(rat_str(Rat(0)) == "0");
}

TEST_CASE("polynomial printing") {
  MPoly r = V("r"), s = V("s");
  CHECK(gbinom(r, 2).str() == "1/2*r^2 - 1/2*r");
  CHECK((r * r * s * Rat(-1, 2) + K(3)).str() == "-1/2*r^2*s + 3");
  CHECK(MPoly().str() == "0");
  CHECK(K(-1).str() == "-1");
}

TEST_CASE("polynomial arithmetic and structure") {
  MPoly r = V("r"), s = V("s");
  CHECK((r + s) * (r - s) == r * r - s * s);
  CHECK((r + K(1)).pow(3) == r * r * r + K(3) * r * r + K(3) * r + K(1));
  CHECK((r * r).degree_in(var_index("r")) == 2);
  CHECK((r * r).total_degree() == 2);
  CHECK(MPoly().total_degree() == -1);
  CHECK((r * s).depends_on(var_index("s")));
  CHECK_FALSE((r * r).depends_on(var_index("s")));
  CHECK((r * r * r).derivative(var_index("r")) == K(3) * r * r);
  CHECK((r * r - K(1)).subst(var_index("r"), s + K(1)) == s * s + K(2) * s);

  std::array<Rat, kNumVars> pt{};
  pt[static_cast<size_t>(var_index("r"))] = Rat(7);
  CHECK((r * r - K(5)).eval(pt) == 44);

  MPoly f = r * Rat(2, 3) + K(1) * Rat(4, 3);
  CHECK(f.content() == Rat(2, 3));
  CHECK(f.primitive_part() == r + K(2));
  CHECK((MPoly() - r).primitive_part() == r);
  CHECK((K(3) * r * r + r).leading_coeff() == 3);

  std::vector<MPoly> cs = (r * r * s + r + K(4)).coeffs_in(var_index("r"));
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == K(4));
  CHECK(cs[1] == K(1));
  CHECK(cs[2] == s);
  CHECK(MPoly::from_coeffs_in(var_index("r"), cs) == r * r * s + r + K(4));
}

TEST_CASE("polynomial gcd and exact division") {
  MPoly r = V("r"), s = V("s");
  MPoly a = (r - K(1)) * (r + K(1));
  MPoly b = (r - K(1)) * (r - K(1));
  CHECK(gcd(a, b) == r - K(1));
  CHECK(gcd((r - K(1)) * (s + K(2)), (r - K(1)) * (s + K(3))) == r - K(1));
  auto q = div_exact(a, r - K(1));
  REQUIRE(q.has_value());
  CHECK(*q == r + K(1));
  CHECK_FALSE(div_exact(a, r - K(2)).has_value());
}

TEST_CASE("gbinom special cases and integer points") {
  MPoly r = V("r");
  CHECK(gbinom(r, 2) == (r * r - r) * Rat(1, 2));
  CHECK(gbinom(K(-1), 2) == K(1));
  CHECK(gbinom(K(2) - r, 1) == K(2) - r);
  CHECK(gbinom(r, -1) == MPoly());
  CHECK(gbinom(r, 0) == K(1));

  for (long n = -20; n <= 20; ++n) {
    std::array<Rat, kNumVars> pt{};
    pt[static_cast<size_t>(var_index("r"))] = Rat(n);
    for (long k = 0; k <= 10; ++k) REQUIRE(gbinom(r, k).eval(pt) == Rat(binom(n, k)));
  }
}

TEST_CASE("divisibility predicate") {
  MPoly r = V("r"), s = V("s");
  CHECK(divides(r - K(1), r * r - K(1)));
  CHECK_FALSE(divides(r - K(2), r * r - K(1)));
  CHECK(divides(r - s, r * r - s * s));
  CHECK(divides(K(7), r));
  CHECK_THROWS_AS(divides(MPoly(), r), UsageError);

  std::mt19937 rng(42);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    MPoly f = r * coeff(rng) + s * coeff(rng) + K(coeff(rng));
    if (f.is_zero()) continue;
    MPoly g = f * (r * coeff(rng) + K(coeff(rng)));
    REQUIRE(divides(f, g));
  }
}

TEST_CASE("rational function canonical form") {
  MPoly r = V("r"), s = V("s"), t = V("t");
  CHECK(RatFun(Rat(1, 2)).str() == "1/2");
  CHECK(RatFun(r, r * r - K(1)).str() == "r/(r^2 - 1)");
  CHECK(RatFun(t, s).str() == "t/s");
  CHECK(RatFun(t * t - t, s * s - K(3) * s + K(2)).str() ==
        "(t^2 - t)/(s^2 - 3*s + 2)");

  CHECK(RatFun(r * r - K(1), r - K(1)) == RatFun(r + K(1)));
  CHECK(RatFun(r, K(2) * r - K(2)) * RatFun(2) == RatFun(r, r - K(1)));
  CHECK(RatFun(r + K(1)).is_polynomial());
  CHECK_FALSE(RatFun(r, s).is_polynomial());
  CHECK(RatFun(t, s) + RatFun(MPoly() - t, s) == RatFun(0));
  CHECK(RatFun(t, s) / RatFun(t, s) == RatFun(1));
  CHECK(RatFun(K(1), s).subst(var_index("s"), r + K(1)) == RatFun(K(1), r + K(1)));
}

TEST_CASE("determinants agree with cofactor expansion") {
  MPoly r = V("r");
  FunMat m(2, 2);
  m.at(0, 0) = RatFun(K(1));
  m.at(0, 1) = RatFun(K(1));
  m.at(1, 0) = RatFun(K(1) - r);
  m.at(1, 1) = RatFun(K(1));
  CHECK(det_fraction_free(m) == RatFun(r));

  PolyMat pm(2, 2);
  pm.at(0, 0) = K(1);
  pm.at(0, 1) = K(1);
  pm.at(1, 0) = K(1) - r;
  pm.at(1, 1) = K(1);
  CHECK(det_bareiss(pm) == r);

  FunMat id(3, 3);
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) id.at(i, j) = RatFun(i == j ? 1 : 0);
  CHECK(det_fraction_free(id) == RatFun(1));

  std::function<Rat(const std::vector<std::vector<Rat>>&)> cofactor =
      [&](const std::vector<std::vector<Rat>>& a) -> Rat {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    Rat acc = 0;
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Rat>> minor;
      for (size_t i = 1; i < n; ++i) {
        std::vector<Rat> row;
        for (size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(a[i][k]);
        minor.push_back(row);
      }
      Rat term = a[0][j] * cofactor(minor);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    long n = 2 + trial % 3;
    FunMat fm(n, n);
    PolyMat im(n, n);
    std::vector<std::vector<Rat>> ref(static_cast<size_t>(n),
                                      std::vector<Rat>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long e = entry(rng);
        fm.at(i, j) = RatFun(e);
        im.at(i, j) = K(e);
        ref[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(e);
      }
    Rat expected = cofactor(ref);
    REQUIRE(det_fraction_free(fm) == RatFun(expected));
    REQUIRE(det_bareiss(im) == MPoly(expected));
  }
}

TEST_CASE("row reduction and kernel bases") {
  FunMat m(2, 2);
  m.at(0, 0) = RatFun(1);
  m.at(0, 1) = RatFun(1);
  m.at(1, 0) = RatFun(1);
  m.at(1, 1) = RatFun(1);
  std::vector<long> pivots = rref_in_place(m);
  CHECK(pivots == std::vector<long>{0});
  CHECK(m.at(0, 0) == RatFun(1));
  CHECK(m.at(0, 1) == RatFun(1));
  CHECK(m.at(1, 0) == RatFun(0));
  CHECK(m.at(1, 1) == RatFun(0));

  FunMat empty(0, 1);
  auto full = kernel_basis(empty);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == std::vector<RatFun>{RatFun(1)});

  FunMat row(1, 2);
  row.at(0, 0) = RatFun(1);
  row.at(0, 1) = RatFun(1);
  auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<RatFun>{RatFun(1), RatFun(-1)});

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    FunMat a(3, 5);
    for (long i = 0; i < 3; ++i)
      for (long j = 0; j < 5; ++j) a.at(i, j) = RatFun(entry(rng));
    auto basis = kernel_basis(a);
    FunMat copy = a;
    std::vector<long> pv = rref_in_place(copy);
    REQUIRE(basis.size() == 5 - pv.size());
    for (const auto& v : basis) {
      for (long i = 0; i < 3; ++i) {
        RatFun dot(0);
        for (long j = 0; j < 5; ++j) dot += a.at(i, j) * v[static_cast<size_t>(j)];
        REQUIRE(dot == RatFun(0));
      }
    }
  }
}

TEST_CASE("rational roots") {
  MPoly r = V("r"), s = V("s");
  MPoly f = r * (r - K(1)) * (r - K(1));
  CHECK(rational_roots(RatFun(f)) == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(rational_roots(RatFun(1)).empty());
  MPoly g = (r - K(1)) * (r - K(2)) * (r - K(3)) * (r - K(4)) * Rat(1, 2);
  CHECK(rational_roots(RatFun(g)) == std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
  MPoly h = (K(3) * r - K(2)) * (r + K(5));
  CHECK(rational_roots(RatFun(h)) == std::vector<Rat>{Rat(-5), Rat(2, 3)});
  CHECK(rational_roots(RatFun(r - K(1), r - K(2))) == std::vector<Rat>{Rat(1)});
  CHECK_THROWS_AS(rational_roots(RatFun(0)), UsageError);
  CHECK_THROWS_AS(rational_roots(RatFun(r * s)), UsageError);

  for (const Rat& root : rational_roots(RatFun(g))) {
    std::array<Rat, kNumVars> pt{};
    pt[static_cast<size_t>(var_index("r"))] = root;
    REQUIRE(g.eval(pt) == 0);
  }
}

TEST_CASE("integer factorization") {
  std::map<Int, int> f = factor_integer(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[Int(2)] == 3);
  CHECK(f[Int(3)] == 2);
  CHECK(f[Int(5)] == 1);
  CHECK(factor_integer(Int(97)) == std::map<Int, int>{{Int(97), 1}});
  CHECK(factor_integer(Int(1)).empty());
  std::vector<Int> divs = divisors_from_factorization(f, 100);
  CHECK(divs.size() == 24);
}
