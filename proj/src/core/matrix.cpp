#include "core/matrix.hpp"

namespace ts {

MPoly det_bareiss(PolyMat m) {
  if (m.rows != m.cols) throw UsageError("determinant of a non-square matrix");
  long n = m.rows;
  if (n == 0) return MPoly(1L);
  if (n == 1) return m.at(0, 0);
  int sign = 1;
  MPoly prev(1L);
  for (long k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      long pivot = -1;
      for (long i = k + 1; i < n; ++i) {
        if (!m.at(i, k).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return MPoly();
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        MPoly t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        auto q = div_exact(t, prev);
        if (!q) throw InternalError("Bareiss: inexact division");
        m.at(i, j) = *q;
      }
      m.at(i, k) = MPoly();
    }
    prev = m.at(k, k);
  }
  MPoly d = m.at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

RatFun det_fraction_free(const FunMat& m) {
  if (m.rows != m.cols) throw UsageError("determinant of a non-square matrix");
  long n = m.rows;
  if (n == 0) return RatFun(1L);
  PolyMat cleared(n, n);
  MPoly denom(1L);
  for (long i = 0; i < n; ++i) {
    // least common multiple of the row's denominators
    MPoly rowden(1L);
    for (long j = 0; j < n; ++j) {
      const MPoly& d = m.at(i, j).den;
      if (d.is_constant()) continue;
      MPoly g = gcd(rowden, d);
      rowden = rowden * (g.is_constant() ? d : *div_exact(d, g));
    }
    for (long j = 0; j < n; ++j) {
      auto scale = div_exact(rowden, m.at(i, j).den);
      if (!scale) throw InternalError("row clearing: inexact division");
      cleared.at(i, j) = m.at(i, j).num * *scale;
    }
    denom *= rowden;
  }
  return RatFun(det_bareiss(std::move(cleared)), denom);
}

std::vector<long> rref_in_place(FunMat& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols && row < m.rows; ++col) {
    long pr = -1;
    for (long i = row; i < m.rows; ++i) {
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row) {
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
    }
    RatFun inv = RatFun(1L) / m.at(row, col);
    for (long j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      RatFun f = m.at(i, col);
      for (long j = col; j < m.cols; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<RatFun>> kernel_basis(const FunMat& m) {
  long n = m.cols;
  FunMat work = m;
  std::vector<long> pivots = rref_in_place(work);

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<RatFun>> vecs;
  for (long freec = 0; freec < n; ++freec) {
    if (is_pivot[static_cast<size_t>(freec)]) continue;
    std::vector<RatFun> v(static_cast<size_t>(n));
    v[static_cast<size_t>(freec)] = RatFun(1L);
    for (size_t i = 0; i < pivots.size(); ++i) {
      v[static_cast<size_t>(pivots[i])] = -work.at(static_cast<long>(i), freec);
    }
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return vecs;

  FunMat km(static_cast<long>(vecs.size()), n);
  for (size_t i = 0; i < vecs.size(); ++i) {
    for (long j = 0; j < n; ++j) km.at(static_cast<long>(i), j) = vecs[i][static_cast<size_t>(j)];
  }
  rref_in_place(km);
  std::vector<std::vector<RatFun>> out;
  for (long i = 0; i < km.rows; ++i) {
    bool nonzero = false;
    std::vector<RatFun> v(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
      v[static_cast<size_t>(j)] = km.at(i, j);
      nonzero = nonzero || !v[static_cast<size_t>(j)].is_zero();
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ts
