#pragma once

#include <cstddef>
#include <vector>

#include "gontet/bigint.hpp"
#include "gontet/ratfunc.hpp"

namespace gontet {

/// Dense square matrix, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T()) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<BigRational>;
using QMatrix = SquareMatrix<RatFunc>;

/// H(n,s)(i,j) = 1/(i + j - 1 + s), 1-based.
RationalMatrix hilbert(int n, int s = 0);

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Exact inverse by fraction-free elimination; throws Singular.
RationalMatrix invert_exact(const RationalMatrix& m);

BigRational trace(const RationalMatrix& m);

/// tr(H(n,s)^-1).
BigRational trace_inverse(int n, int s = 0);

struct RowSum {
  BigInt value;    // |row sum|, equal to gon(a,b,c)
  BigInt row_sum;  // signed
  int n = 0, s = 0, row = 0;  // H(n,s), 1-based row
};

/// Row sum of H(a+1, b-a)^-1 at row (c+a-b)/2 + 1 after sorting a <= b <= c.
/// Throws NotAdmissible.
RowSum rowsum_gon(int a, int b, int c);

/// H_q(n,s)(i,j) = 1/[i + j - 1 + s]_q.
QMatrix q_hilbert(int n, int s = 0);

/// Exact inverse over the rational-function field; throws Singular.
QMatrix q_invert(const QMatrix& m);

/// tr(H_q(n,s)^-1) from a single fraction-free solve.
RatFunc q_trace_inverse(int n, int s = 0);

}  // namespace gontet
