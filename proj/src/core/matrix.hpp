#pragma once

#include <vector>

#include "core/ratfun.hpp"

namespace ts {

template <class T>
struct Mat {
  long rows = 0;
  long cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
  T& at(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
  const T& at(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

using PolyMat = Mat<MPoly>;
using FunMat = Mat<RatFun>;

// Determinant by fraction-free elimination (row denominators cleared first,
// then Bareiss single-step elimination with exact divisions).
RatFun det_fraction_free(const FunMat& m);

MPoly det_bareiss(PolyMat m);

// In-place reduced row echelon form over the rational function field.
// Returns pivot column indices in increasing order.
std::vector<long> rref_in_place(FunMat& m);

// Basis of the right kernel, echelonized the way Sage reports it: the basis
// matrix is in RREF with leading ones at increasing pivot positions. A matrix
// with no rows has the full space as kernel (identity basis).
std::vector<std::vector<RatFun>> kernel_basis(const FunMat& m);

}  // namespace ts
