#include "core/thetafac.hpp"

namespace ts {

ThetaFactorization theta_factor(const std::vector<Int>& C, long alpha, long gamma,
                                long r, long p) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("theta_factor: p must be an odd prime");
  if (alpha < 1) throw UsageError("theta_factor: alpha must be >= 1");
  if (gamma < 0) throw UsageError("theta_factor: gamma must be >= 0");
  if (C.empty()) throw UsageError("theta_factor: coefficient list is empty");
  long beta = static_cast<long>(C.size()) - 1;
  if (beta < alpha) throw UsageError("theta_factor: needs at least alpha+1 coefficients");
  if (r < alpha * (p + 1) + beta * (p - 1) + gamma)
    throw UsageError("theta_factor: requires r >= alpha(p+1) + beta(p-1) + gamma");

  ThetaFactorization out;
  out.alpha = alpha;
  out.gamma = gamma;
  out.r = r;
  out.p = p;

  // Divisibility is equivalent to the first alpha moments vanishing.
  out.moments.resize(static_cast<size_t>(alpha));
  for (long w = 0; w < alpha; ++w) {
    Int m = 0;
    for (long j = 0; j <= beta; ++j) m += C[static_cast<size_t>(j)] * binom(Int(j), w);
    out.moments[static_cast<size_t>(w)] = m;
    if (m != 0 && out.first_violated_w < 0) out.first_violated_w = w;
  }
  if (out.first_violated_w >= 0) {
    out.ok = false;
    return out;
  }
  out.ok = true;

  // Quotient ladder: D_j = sum_{i > j} binom(i-j-1, alpha-1) C_i.
  long dlen = beta - alpha + 1;
  out.reduced.assign(static_cast<size_t>(dlen), Int(0));
  for (long j = 0; j < dlen; ++j) {
    Int d = 0;
    for (long i = j + 1; i <= beta; ++i)
      d += binom(Int(i - j - 1), alpha - 1) * C[static_cast<size_t>(i)];
    out.reduced[static_cast<size_t>(j)] = d;
  }

  // Fix the sign by expanding theta^alpha exactly:
  //   theta^alpha = sum_k (-1)^k binom(alpha,k) x^{alpha+k(p-1)} y^{p*alpha-k(p-1)}
  // and convolving against the quotient ladder. The reconstruction must match
  // C up to a global sign.
  std::vector<Int> recon(static_cast<size_t>(beta + 1), Int(0));
  for (long j = 0; j < dlen; ++j) {
    for (long k = 0; k <= alpha; ++k) {
      long n = j + k;
      if (n > beta) break;
      Int term = out.reduced[static_cast<size_t>(j)] * binom(alpha, k);
      if (k % 2 == 1) term = -term;
      recon[static_cast<size_t>(n)] += term;
    }
  }
  if (alpha % 2 == 1)
    for (auto& v : recon) v = -v;

  bool plus = true, minus = true;
  for (long n = 0; n <= beta; ++n) {
    if (recon[static_cast<size_t>(n)] != C[static_cast<size_t>(n)]) plus = false;
    if (recon[static_cast<size_t>(n)] != -C[static_cast<size_t>(n)]) minus = false;
  }
  if (plus) {
    out.epsilon = 1;
  } else if (minus) {
    out.epsilon = -1;
  } else {
    throw InternalError("theta_factor: reconstruction does not match input up to sign");
  }
  return out;
}

}  // namespace ts
