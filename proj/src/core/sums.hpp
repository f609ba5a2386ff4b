#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/num.hpp"

namespace ts {

// Outcome of a congruence check: value vs target at a required p-adic
// valuation of the difference.
struct SumReport {
  int part = 0;
  long p = 0;
  long r = 0;
  Rat value;
  Rat target;
  long required_valuation = 0;
  long achieved_valuation = 0;
  bool pass = false;
  std::map<std::string, std::string> notes;
};

// Calls fn(k, C(r, k)) for k = 0..r, updating the binomial incrementally.
void binom_row_walk(long r, const std::function<void(long, const Int&)>& fn);

// s in {1..p-1} and t >= 0 with r = t(p-1) + s.
struct Decomposition {
  long s = 0;
  long t = 0;
};
Decomposition decompose(long p, long r);

// The six congruence checks for column sums of binomial coefficients along
// arithmetic progressions of step p-1. Parts 1..4 sum over j = 1..t; parts
// 5..6 sum over the full support. Part 5 and 6 take the offset A; part 6
// treats r as the row index R and checks an exact recursion.
SumReport binomial_sum_check(int part, long p, long r, std::optional<long> A = std::nullopt);

// sum_j (-1)^{j-b} C(L, j-b) C(r - jN, u) == [u == L] N^L for all 0 <= u <= L.
bool alternating_binomial_identity(long r, long L, long b, long N);

// which == 1: exact identity C(z,w) = sum_v (-1)^{w-v} C(A+w-v-1, w-v) C(z+A, v).
// which == 2: mod-p congruence C(i,w) = sum_v (-1)^v C(A-v, w-v) C(i(p-1)+A, v).
bool binomial_shift_identity(int which, long A, long z_or_i, long w, long p);

// Congruence mod p between a binomial column sum weighted by C((p-1)i, w)
// (variant "binom-ip") or C(i, w) (variant "binom-i") and its closed form
// in terms of eta weights.
SumReport kappa_congruence_check(long p, long r, long m, long l, long w, long L,
                                 const std::string& variant);

struct SweepResult {
  long total = 0;
  long failed = 0;
  std::vector<SumReport> failures;
};

struct SweepGrid {
  std::vector<long> ps;
  long r_max = 0;
  long A_min = 0;
  long A_max = 0;
  long t_max = 0;
};

SweepGrid default_sweep_grid(int part);
SweepResult sweep_binomial_sums(int part, const SweepGrid& grid, int jobs);
SweepResult sweep_alternating(long L_max, long b_max, long N_max, long extent, int jobs);

// Runs fn(i) for i in [0, n), possibly on several threads; results must be
// written to index-addressed slots so aggregation order is deterministic.
void parallel_for(long n, int jobs, const std::function<void(long)>& fn);

}  // namespace ts
