#include "core/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ts {

const char* const kVarNames[kNumVars] = {"r", "s", "t", "p"};

int var_index(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return i;
  return -1;
}

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  unsigned da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

Mono mono_zero() { return Mono{0, 0, 0, 0}; }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  for (int i = 0; i < kNumVars; ++i) {
    unsigned v = static_cast<unsigned>(a[i]) + b[i];
    if (v > 60000) throw InternalError("monomial exponent overflow");
    out[i] = static_cast<unsigned short>(v);
  }
  return out;
}

}  // namespace

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms[mono_zero()] = c;
}
MPoly::MPoly(const Int& c) {
  if (c != 0) terms[mono_zero()] = Rat(c);
}
MPoly::MPoly(long c) {
  if (c != 0) terms[mono_zero()] = Rat(c);
}

MPoly MPoly::var(int idx) {
  if (idx < 0 || idx >= kNumVars) throw InternalError("MPoly::var: bad index");
  MPoly out;
  Mono m = mono_zero();
  m[idx] = 1;
  out.terms[m] = 1;
  return out;
}

bool MPoly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first == mono_zero());
}

Rat MPoly::constant_value() const {
  if (terms.empty()) return Rat(0);
  if (!is_constant()) throw InternalError("constant_value on non-constant");
  return terms.begin()->second;
}

long MPoly::total_degree() const {
  if (terms.empty()) return -1;
  const Mono& m = terms.rbegin()->first;
  long d = 0;
  for (int i = 0; i < kNumVars; ++i) d += m[i];
  return d;
}

long MPoly::degree_in(int v) const {
  if (terms.empty()) return -1;
  long d = 0;
  for (const auto& [m, c] : terms) d = std::max<long>(d, m[v]);
  return d;
}

bool MPoly::depends_on(int v) const {
  for (const auto& [m, c] : terms)
    if (m[v] > 0) return true;
  return false;
}

std::vector<int> MPoly::vars_present() const {
  std::vector<int> out;
  for (int v = 0; v < kNumVars; ++v)
    if (depends_on(v)) out.push_back(v);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out;
  for (const auto& [m, c] : terms) out.terms[m] = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out += b;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  out -= b;
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  if (a.terms.empty() || b.terms.empty()) return out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Mono m = mono_mul(ma, mb);
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        out.terms.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms) coeff *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const Rat& c) {
  MPoly out = a;
  out *= c;
  return out;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly out(1L);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return out;
}

Rat MPoly::content() const {
  if (terms.empty()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms) {
    num_gcd = gcd(num_gcd, Int(c.get_num()));
    den_lcm = lcm(den_lcm, Int(c.get_den()));
  }
  Rat out(num_gcd, den_lcm);
  out.canonicalize();
  if (out < 0) out = -out;
  return out;
}

Rat MPoly::leading_coeff() const {
  if (terms.empty()) return Rat(0);
  return terms.rbegin()->second;
}

MPoly MPoly::primitive_part() const {
  if (terms.empty()) return MPoly();
  Rat c = content();
  if (leading_coeff() < 0) c = -c;
  MPoly out = *this;
  out *= Rat(1) / c;
  return out;
}

std::vector<MPoly> MPoly::coeffs_in(int v) const {
  std::vector<MPoly> out;
  if (terms.empty()) return out;
  out.resize(static_cast<size_t>(degree_in(v)) + 1);
  for (const auto& [m, c] : terms) {
    Mono red = m;
    unsigned short e = red[v];
    red[v] = 0;
    out[e].terms[red] = c;
  }
  return out;
}

MPoly MPoly::from_coeffs_in(int v, const std::vector<MPoly>& cs) {
  MPoly out;
  for (size_t e = 0; e < cs.size(); ++e) {
    for (const auto& [m, c] : cs[e].terms) {
      Mono full = m;
      unsigned v_new = static_cast<unsigned>(full[v]) + e;
      if (v_new > 60000) throw InternalError("monomial exponent overflow");
      full[v] = static_cast<unsigned short>(v_new);
      out.terms[full] += c;
      if (out.terms[full] == 0) out.terms.erase(full);
    }
  }
  return out;
}

MPoly MPoly::subst(int v, const MPoly& value) const {
  if (!depends_on(v)) return *this;
  std::vector<MPoly> cs = coeffs_in(v);
  MPoly out;
  for (size_t i = cs.size(); i-- > 0;) {
    out = out * value + cs[i];
  }
  return out;
}

Rat MPoly::eval(const std::array<Rat, kNumVars>& point) const {
  Rat out = 0;
  for (const auto& [m, c] : terms) {
    Rat term = c;
    for (int v = 0; v < kNumVars; ++v) {
      for (unsigned short e = 0; e < m[v]; ++e) term *= point[v];
    }
    out += term;
  }
  return out;
}

MPoly MPoly::derivative(int v) const {
  MPoly out;
  for (const auto& [m, c] : terms) {
    if (m[v] == 0) continue;
    Mono d = m;
    d[v] -= 1;
    out.terms[d] += c * Rat(m[v]);
    if (out.terms[d] == 0) out.terms.erase(d);
  }
  return out;
}

std::string MPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    bool is_const_term = (m == Mono{0, 0, 0, 0});
    bool coeff_shown = is_const_term || c != 1;
    if (coeff_shown) os << c.get_str();
    bool need_star = coeff_shown;
    for (int v = 0; v < kNumVars; ++v) {
      if (m[v] == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[v];
      if (m[v] > 1) os << "^" << m[v];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

// Content of f viewed as a polynomial in variable v (gcd of coefficients).
MPoly content_in(const MPoly& f, int v) {
  MPoly g;
  for (const MPoly& c : f.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Pseudo-remainder of f by g with respect to variable v (deg_v g >= 1).
MPoly prem(const MPoly& f, const MPoly& g, int v) {
  long dg = g.degree_in(v);
  std::vector<MPoly> gc = g.coeffs_in(v);
  MPoly lg = gc[static_cast<size_t>(dg)];
  MPoly r = f;
  long dr = r.degree_in(v);
  while (!r.is_zero() && dr >= dg) {
    std::vector<MPoly> rc = r.coeffs_in(v);
    MPoly lr = rc[static_cast<size_t>(dr)];
    // r <- lg * r - lr * x^{dr-dg} * g
    MPoly shift = MPoly::var(v).pow(static_cast<unsigned long>(dr - dg));
    r = lg * r - lr * shift * g;
    dr = r.degree_in(v);
  }
  return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return MPoly(1L);

  // Main variable: the most significant one present in either operand.
  int v = -1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a.depends_on(i) || b.depends_on(i)) {
      v = i;
      break;
    }
  }
  if (v < 0) throw InternalError("gcd: no variable found");

  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly c = gcd(ca, cb);
  MPoly f = *div_exact(a, ca);
  MPoly g = *div_exact(b, cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

  while (true) {
    if (g.is_zero()) break;
    if (g.degree_in(v) == 0) {
      // Primitive part in v of a v-free polynomial is a unit.
      f = MPoly(1L);
      break;
    }
    MPoly r = prem(f, g, v);
    f = g;
    if (r.is_zero()) {
      g = MPoly();
    } else {
      MPoly cr = content_in(r, v);
      g = *div_exact(r, cr);
    }
  }

  MPoly pp = f.is_constant() ? MPoly(1L) : *div_exact(f, content_in(f, v));
  return (c * pp).primitive_part();
}

std::optional<MPoly> div_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) {
    MPoly out = a;
    out *= Rat(1) / b.constant_value();
    return out;
  }
  int v = -1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (b.depends_on(i)) {
      v = i;
      break;
    }
  }
  long db = b.degree_in(v);
  long da = a.degree_in(v);
  if (da < db) return std::nullopt;
  std::vector<MPoly> bc = b.coeffs_in(v);
  const MPoly& lb = bc[static_cast<size_t>(db)];

  MPoly rem = a;
  std::vector<MPoly> q(static_cast<size_t>(da - db) + 1);
  while (!rem.is_zero()) {
    long dr = rem.degree_in(v);
    if (dr < db) return std::nullopt;
    std::vector<MPoly> rc = rem.coeffs_in(v);
    auto qc = div_exact(rc[static_cast<size_t>(dr)], lb);
    if (!qc) return std::nullopt;
    q[static_cast<size_t>(dr - db)] = *qc;
    MPoly shift = MPoly::var(v).pow(static_cast<unsigned long>(dr - db));
    rem -= *qc * shift * b;
  }
  return MPoly::from_coeffs_in(v, q);
}

MPoly gbinom(const MPoly& z, long k) {
  if (k < 0) return MPoly();
  MPoly acc(1L);
  for (long i = 0; i < k; ++i) acc *= (z - MPoly(i));
  acc *= Rat(Int(1), factorial(k));
  return acc;
}

MPoly rising_factorial(const MPoly& x, long n) {
  if (n < 0) throw UsageError("rising_factorial: n must be >= 0");
  MPoly acc(1L);
  for (long i = 0; i < n; ++i) acc *= (x + MPoly(i));
  return acc;
}

MPoly falling_factorial(const MPoly& x, long n) {
  if (n < 0) throw UsageError("falling_factorial: n must be >= 0");
  MPoly acc(1L);
  for (long i = 0; i < n; ++i) acc *= (x - MPoly(i));
  return acc;
}

}  // namespace ts
