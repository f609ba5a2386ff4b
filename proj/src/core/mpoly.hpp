#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "core/num.hpp"

namespace ts {

// Polynomials live in Q[r, s, t, p] with a fixed variable set.
inline constexpr int kNumVars = 4;
extern const char* const kVarNames[kNumVars];
int var_index(const std::string& name);  // -1 if unknown

using Mono = std::array<unsigned short, kNumVars>;

// Graded lexicographic order; on equal total degree the later variable
// (p, then t, then s, then r) is the more significant one.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

class MPoly {
 public:
  std::map<Mono, Rat, GrlexLess> terms;

  MPoly() = default;
  explicit MPoly(const Rat& c);
  explicit MPoly(const Int& c);
  explicit MPoly(long c);
  static MPoly var(int idx);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial
  long total_degree() const;   // -1 for zero
  long degree_in(int v) const; // -1 for zero
  bool depends_on(int v) const;
  std::vector<int> vars_present() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator*(const MPoly& a, const Rat& c);
  bool operator==(const MPoly& o) const { return terms == o.terms; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(unsigned long e) const;

  // Positive rational c such that (*this)/c has coprime integer
  // coefficients; 0 for the zero polynomial.
  Rat content() const;
  Rat leading_coeff() const;  // grlex-leading; 0 for zero
  // Divided by signed content: integer coprime coefficients, positive
  // leading coefficient. Zero stays zero.
  MPoly primitive_part() const;

  // Dense coefficient list by degree in v (size degree+1; empty for zero).
  std::vector<MPoly> coeffs_in(int v) const;
  static MPoly from_coeffs_in(int v, const std::vector<MPoly>& cs);

  MPoly subst(int v, const MPoly& value) const;
  Rat eval(const std::array<Rat, kNumVars>& point) const;
  MPoly derivative(int v) const;

  std::string str() const;
};

MPoly gcd(const MPoly& a, const MPoly& b);
std::optional<MPoly> div_exact(const MPoly& a, const MPoly& b);

// z(z-1)...(z-k+1)/k! as a polynomial; zero for k < 0.
MPoly gbinom(const MPoly& z, long k);
MPoly rising_factorial(const MPoly& x, long n);
MPoly falling_factorial(const MPoly& x, long n);

}  // namespace ts
