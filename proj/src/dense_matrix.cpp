#include "hilspec/dense_matrix.hpp"

#include <cmath>
#include <limits>

namespace hilspec {

bool DenseMatrix::all_finite() const {
  for (const Scalar& v : a_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("matmul: operand sizes differ");
  const std::size_t n = a.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar* ci = c.row(i);
    const Scalar* ai = a.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar aik = ai[k];
      if (aik == Scalar{}) continue;
      const Scalar* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

Scalar trace(const DenseMatrix& a) {
  Scalar t{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

double frobenius(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Scalar* r = a.row(i);
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(r[j]);
  }
  return std::sqrt(s);
}

double max_abs(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Scalar* r = a.row(i);
    for (std::size_t j = 0; j < a.size(); ++j) s = std::max(s, std::abs(r[j]));
  }
  return s;
}

LogDet log_abs_det(DenseMatrix a) {
  const std::size_t n = a.size();
  LogDet out;
  if (n == 0) {  // empty product
    out.sign = 1;
    out.log_abs = 0.0;
    out.phase = Scalar{1.0, 0.0};
    return out;
  }
  double log_sum = 0.0;
  Scalar phase{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(a(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best == 0.0) {
      out.sign = 0;
      out.log_abs = -std::numeric_limits<double>::infinity();
      out.phase = Scalar{0.0, 0.0};
      return out;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      phase = -phase;
    }
    const Scalar pivot = a(k, k);
    log_sum += std::log(std::abs(pivot));
    phase *= pivot / std::abs(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar f = a(i, k) / pivot;
      if (f == Scalar{}) continue;
      a(i, k) = Scalar{};
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  out.log_abs = log_sum;
  out.phase = phase;
  if (std::abs(phase.imag()) <= 1e-9)
    out.sign = phase.real() > 0.0 ? 1 : -1;
  else
    out.sign = 0;
  return out;
}

}  // namespace hilspec
