#include "core/ratfun.hpp"

namespace ts {

RatFun::RatFun(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw InternalError("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num.is_zero()) {
    den = MPoly(1L);
    return;
  }
  if (!den.is_constant()) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = *div_exact(num, g);
      den = *div_exact(den, g);
    }
  }
  Rat c = den.content();
  if (den.leading_coeff() < 0) c = -c;
  if (c != 1) {
    Rat inv = Rat(1) / c;
    num *= inv;
    den *= inv;
  }
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num = -out.num;
  return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  MPoly g = gcd(a.den, b.den);
  MPoly bd = g.is_constant() ? b.den : *div_exact(b.den, g);
  MPoly ad = g.is_constant() ? a.den : *div_exact(a.den, g);
  return RatFun(a.num * bd + b.num * ad, a.den * bd);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  MPoly g1 = gcd(a.num, b.den);
  MPoly g2 = gcd(b.num, a.den);
  MPoly an = g1.is_constant() ? a.num : *div_exact(a.num, g1);
  MPoly bd = g1.is_constant() ? b.den : *div_exact(b.den, g1);
  MPoly bn = g2.is_constant() ? b.num : *div_exact(b.num, g2);
  MPoly ad = g2.is_constant() ? a.den : *div_exact(a.den, g2);
  return RatFun(an * bn, ad * bd);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw InternalError("RatFun: division by zero");
  return a * RatFun(b.den, b.num);
}

RatFun& RatFun::operator+=(const RatFun& o) { return *this = *this + o; }
RatFun& RatFun::operator-=(const RatFun& o) { return *this = *this - o; }
RatFun& RatFun::operator*=(const RatFun& o) { return *this = *this * o; }
RatFun& RatFun::operator/=(const RatFun& o) { return *this = *this / o; }

RatFun RatFun::subst(int v, const MPoly& value) const {
  MPoly d = den.subst(v, value);
  if (d.is_zero()) throw UsageError("substitution hits a pole");
  return RatFun(num.subst(v, value), d);
}

std::string RatFun::str() const {
  if (is_polynomial()) {
    // den is canonical, so a constant den is exactly 1
    return num.str();
  }
  std::string n = num.str();
  std::string d = den.str();
  if (num.terms.size() > 1) n = "(" + n + ")";
  if (den.terms.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

bool divides(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) throw UsageError("divides: divisor is the zero polynomial");
  return div_exact(g, f).has_value();
}

}  // namespace ts
