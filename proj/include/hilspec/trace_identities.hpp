#pragma once

#include <cstddef>

#include "hilspec/dense_matrix.hpp"
#include "hilspec/matrix_families.hpp"

namespace hilspec {

// trace(M^2) for a real square matrix, accumulated entrywise as
// sum_{m,n} a_mn a_nm without forming the product. Tiled so the
// transposed reads stay cache resident for large n.
double trace_sq(const DenseMatrix& m);

// Exact finite sums for the trace of the square.
double trace_sq_alternating_closed(std::size_t n);  // -2 sum_{k=1}^{n-1} (n-k)/k^2
double trace_sq_alt_quant_closed(std::size_t n);    // -sin^2(pi/n) (n-1)n(n+1)/3

// Limits of trace(M^2)/n as n grows.
double limit_alternating();          // -pi^2/3
double limit_osc_cos(double theta);  // -(pi^2/3 + theta^2 - pi theta)
double limit_osc_sin(double theta);  // pi theta

struct TraceReport {
  std::size_t n = 0;
  double trace_sq_matrix = 0.0;
  double trace_sq_closed = 0.0;  // NaN when no closed form applies
  double limit_value = 0.0;      // NaN when no limit applies
  double normalized = 0.0;       // trace_sq_matrix / n
};

// Builds the report for one family instance: matrix oracle, closed form
// when the family has one, and the limit of trace(M^2)/n when known.
TraceReport trace_report(MatrixFamily family, std::size_t n,
                         const FamilyParams& params = {});

// trace_sq(OscSin) - trace_sq(OscCos) against 2 sum (n-k)/k^2 + theta^2 n.
struct DifferenceReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};
DifferenceReport trace_difference_check(std::size_t n, double theta);

// Partial sums behind the oscillatory trace limits, with closed forms.
double cos_over_k2_series(double theta, std::size_t terms);  // sum cos(2k theta)/k^2
double cos_over_k2_closed(double theta);  // pi^2/6 - pi theta + theta^2, 0 <= theta <= pi/2
double sin_over_k_series(double x, std::size_t terms);  // sum sin(kx)/k
double sin_over_k_closed(double x);       // (pi - x)/2, 0 < x < 2 pi

}  // namespace hilspec
