#pragma once

// Factoring two-variable polynomials supported on an arithmetic progression
// of exponents through powers of theta = x*y^p - x^p*y.

#include <vector>

#include "core/num.hpp"

namespace ts {

struct ThetaFactorization {
  bool ok = false;           // whether the divisibility criterion holds
  long first_violated_w = -1;  // smallest w in [0, alpha) whose moment is nonzero, if any
  long alpha = 0;
  long gamma = 0;
  long r = 0;
  long p = 0;
  // Sign fixed by exact reconstruction. The verified identity is
  //   f = epsilon * (-1)^alpha * sum_j D_j theta^alpha x^{gamma+j(p-1)} y^{r-alpha(p+1)-gamma-j(p-1)}
  // and epsilon is expected to be +1.
  int epsilon = 1;
  std::vector<Int> reduced;   // D_0 .. D_{beta-alpha}
  std::vector<Int> moments;   // sum_j C_j * binom(j, w) for w = 0 .. alpha-1
};

/// Input: coefficients C_0..C_beta of
//   f = sum_j C_j x^{alpha+gamma+j(p-1)} y^{r-alpha-gamma-j(p-1)}.
// Decides whether f is divisible by theta^alpha and, if so, produces the
// coefficients of the quotient against the same kind of exponent ladder.
ThetaFactorization theta_factor(const std::vector<Int>& C, long alpha, long gamma,
                                long r, long p);

}  // namespace ts
