#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hilspec/errors.hpp"

namespace hilspec {

using Scalar = std::complex<double>;

// Square dense complex matrix, row major storage. Indices here are
// 0-based; the 1-based entry formulas are shifted at the call sites.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, Scalar fill = Scalar{0.0, 0.0})
      : n_(n), a_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1.0, 0.0};
    return m;
  }

  std::size_t size() const { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  Scalar* row(std::size_t i) { return a_.data() + i * n_; }
  const Scalar* row(std::size_t i) const { return a_.data() + i * n_; }

  bool all_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
Scalar trace(const DenseMatrix& a);
double frobenius(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);

// Determinant in log magnitude form, via LU with partial pivoting.
// For a singular matrix sign = 0 and log_abs = -inf. Otherwise phase
// holds det/|det|; sign is +-1 when that phase is real to 1e-9 and 0
// when the determinant is genuinely complex.
struct LogDet {
  int sign = 0;
  double log_abs = 0.0;
  Scalar phase{0.0, 0.0};
};

LogDet log_abs_det(DenseMatrix a);  // by value: elimination scratches it

}  // namespace hilspec
