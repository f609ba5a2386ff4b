#pragma once

// The symbolic matrix pipeline: the (alpha+1) x (m+3) range matrix over Q[r],
// the small matrix whose kernel produces the m_w value list, the big matrix
// over Q(r, s, p) for the large-s case, exceptional congruence classes, the
// conjecture driver, and the cleared-denominator hypergeometric identities.

#include <optional>
#include <vector>

#include "core/matrix.hpp"
#include "core/mpoly.hpp"
#include "core/ratfun.hpp"

namespace ts {

// Shared parameter validation: m >= 1, 0 <= alpha <= m, 1 <= L <= m.
void check_matrix_params(long m, long alpha, long L);

// The (alpha+1) x (m+3) matrix over Q[r]. Column 0 is constant, column 1
// carries binom(2L-r, w) when L >= alpha and m+alpha >= 2L, and columns
// 2..m+2 are indexed by the shift l in {alpha-m, ..., alpha}.
PolyMat construct_matrix(long m, long alpha, long L);

// Gcd over Q[r] of the maximal minors of the column selection
// {0, 1} union {m-alpha+2, ..., m+2} of construct_matrix. Primitive with
// positive leading coefficient (an associate of the mathematical gcd).
MPoly gcd_for_the_matrix(long m, long alpha, long L);

struct ExceptionalResult {
  RatFun product;                     // roots = exceptional congruence classes of r
  RatFun kernel_factor;               // K[0][0] / K[0][m+2] as multiplied into product
                                      // (K[0][0] alone when the last entry vanishes;
                                      // 1 when the kernel is trivial)
  std::vector<RatFun> kernel_vector;  // first kernel-basis vector of the matrix
  std::vector<MPoly> kernel_cleared;  // kernel_vector scaled to polynomial entries
                                      // with no common factor, first entry leading > 0
  long kernel_dimension = 0;
  bool used_gcd_factor = false;       // whether the minor gcd was multiplied in
};

// A[0][0] * K[0][0], divided by K[0][m+2] when that entry is nonzero, and
// multiplied by gcd_for_the_matrix when 2L-1 >= alpha >= L, where K is the
// kernel basis of construct_matrix.
ExceptionalResult exceptional_cases(long m, long alpha, long L);

struct RootReport {
  long m = 0;
  long L = 0;
  std::vector<Rat> roots;  // sorted ascending, deduplicated
  bool all_integral = true;
  bool in_window = true;   // every root lies in [2(L-m), 2L]
};

// For each L in 1..m, the rational roots of the product over alpha = 1..m of
// exceptional_cases(m, alpha, L).
std::vector<RootReport> roots_for_all_matrices(long m);

// The (2m+2-alpha) x (alpha+1) matrix over Q[r] whose top alpha rows cut out
// the constants C_l; rows are indexed by w in 0..2m+1-alpha and columns by
// l in 0..alpha.
PolyMat construct_small_matrix(long m, long alpha, long L);

struct MwList {
  std::vector<RatFun> constants;  // full kernel vector (C_0, ..., C_alpha)
  std::vector<RatFun> values;     // m_0, ..., m_{2m+1-alpha}
  long kernel_dimension = 0;
};

// Solve the top alpha rows of the small matrix for the constants, then push
// them through every row. The first alpha values are identically zero by
// construction.
MwList find_m_w(long m, long alpha, long L);

// sum over 0 < i(p-1) < r-2*alpha of binom(r-alpha+l, i(p-1)+l) * binom(i, w).
Int restricted_column_sum(long p, long r, long alpha, long l, long w);

// The restricted double sum with C_0 = 1 implied and C = (C_1, ..., C_alpha).
Rat eval_m_w_exact(long p, long r, long alpha, const std::vector<Rat>& C, long w);

// p-adic valuation of the value above (kValInfinity when it is zero).
long eval_m_w_valuation(long p, long r, long alpha, const std::vector<Rat>& C, long w);

// The (alpha+1) x (alpha+1) matrix over Q(r, s, p) for the case s outside
// {2, ..., 2m}; p enters as a formal variable.
FunMat construct_big_matrix(long m, long alpha);

struct BigPolyResult {
  RatFun value;           // rational function of s, t, p after r -> s - t
  bool kernel_ok = true;  // false means the sentinel t+1 was returned
};

// Divide column 0 of the big matrix by p, solve the top alpha rows, and push
// the kernel vector through the last row; substitute r -> s - t at the end.
BigPolyResult polynomial_from_the_big_matrix(long m, long alpha);

struct ConjectureReport {
  long m = 0;
  bool roots_ok = false;     // all exceptional roots inside their windows
  bool integral_ok = false;  // product of big-matrix polynomials divides prod (t-alpha)^m
  bool kernels_ok = false;   // no sentinel fallbacks triggered
  bool ok = false;
  std::vector<RootReport> root_reports;
  RatFun product;   // product over alpha = 0..m-1 of the big-matrix polynomials
  MPoly quotient;   // (g * den(product)) / num(product) when the division is exact
};

ConjectureReport verify_conjecture(long m);

struct HyperReport {
  long alpha_max = 0;
  bool ok = true;
  struct PerAlpha {
    long alpha = 0;
    bool sum_identity = false;          // telescoping sum against binomial differences
    bool alternating_identity = false;  // the vanishing alternating sum
    std::vector<char> weighted;         // the weighted identities, w = 1..alpha
    bool ok = false;
  };
  std::vector<PerAlpha> checks;
};

// Verify the three families of hypergeometric identities in formal (r, s),
// after clearing all Pochhammer denominators, for every alpha <= alpha_max.
HyperReport verify_hypergeometric(long alpha_max);

}  // namespace ts
