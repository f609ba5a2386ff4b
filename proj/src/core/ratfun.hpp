#pragma once

#include "core/mpoly.hpp"

namespace ts {

// Rational function in canonical form: gcd(num, den) = 1, den has coprime
// integer coefficients and positive leading coefficient. Zero is 0/1.
class RatFun {
 public:
  MPoly num;
  MPoly den;

  RatFun() : num(), den(1L) {}
  explicit RatFun(const MPoly& n) : num(n), den(1L) {}
  explicit RatFun(const Rat& c) : num(c), den(1L) {}
  explicit RatFun(long c) : num(c), den(1L) {}
  RatFun(MPoly n, MPoly d);

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.is_constant(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun subst(int v, const MPoly& value) const;

  std::string str() const;

 private:
  void normalize();
};

// True when f divides g exactly in the polynomial ring. Usage error on f = 0.
bool divides(const MPoly& f, const MPoly& g);

}  // namespace ts
