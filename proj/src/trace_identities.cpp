#include "hilspec/trace_identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hilspec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kTile = 64;
}  // namespace

double trace_sq(const DenseMatrix& m) {
  const std::size_t n = m.size();
  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = m(i, i).real();
    diag += d * d;
  }
  double cross = 0.0;
  for (std::size_t i0 = 0; i0 < n; i0 += kTile) {
    const std::size_t i1 = std::min(n, i0 + kTile);
    for (std::size_t j0 = i0; j0 < n; j0 += kTile) {
      const std::size_t j1 = std::min(n, j0 + kTile);
      for (std::size_t i = i0; i < i1; ++i) {
        const Scalar* ri = m.row(i);
        const std::size_t js = (j0 == i0) ? i + 1 : j0;
        for (std::size_t j = js; j < j1; ++j)
          cross += ri[j].real() * m(j, i).real();
      }
    }
  }
  return diag + 2.0 * cross;
}

double trace_sq_alternating_closed(std::size_t n) {
  if (n < 1) throw InvalidParameter("trace_sq_alternating_closed: n >= 1");
  double acc = 0.0;
  for (std::size_t k = n; k-- > 1;) {  // ascending terms, summed small to large
    const double kd = static_cast<double>(k);
    acc += (static_cast<double>(n) - kd) / (kd * kd);
  }
  return -2.0 * acc;
}

double trace_sq_alt_quant_closed(std::size_t n) {
  if (n < 1) throw InvalidParameter("trace_sq_alt_quant_closed: n >= 1");
  const double nd = static_cast<double>(n);
  const double s = std::sin(kPi / nd);
  return -s * s * (nd - 1.0) * nd * (nd + 1.0) / 3.0;
}

double limit_alternating() { return -kPi * kPi / 3.0; }

double limit_osc_cos(double theta) {
  return -(kPi * kPi / 3.0 + theta * theta - kPi * theta);
}

double limit_osc_sin(double theta) { return kPi * theta; }

TraceReport trace_report(MatrixFamily family, std::size_t n,
                         const FamilyParams& params) {
  TraceReport rep;
  rep.n = n;
  rep.trace_sq_matrix = trace_sq(build(family, n, params));
  rep.normalized = rep.trace_sq_matrix / static_cast<double>(n);

  const double nan = std::nan("");
  switch (family) {
    case MatrixFamily::Alternating:
      rep.trace_sq_closed = trace_sq_alternating_closed(n);
      rep.limit_value = limit_alternating();
      break;
    case MatrixFamily::AlternatingQuant:
      rep.trace_sq_closed = trace_sq_alt_quant_closed(n);
      // -sin^2(pi/n)(n^2-1)/3 after dividing by n, same limit as above
      rep.limit_value = limit_alternating();
      break;
    case MatrixFamily::OscCos:
      rep.trace_sq_closed = nan;
      rep.limit_value = limit_osc_cos(params.theta);
      break;
    case MatrixFamily::OscSin:
      rep.trace_sq_closed = nan;
      rep.limit_value = limit_osc_sin(params.theta);
      break;
    default:
      rep.trace_sq_closed = nan;
      rep.limit_value = nan;
      break;
  }
  return rep;
}

DifferenceReport trace_difference_check(std::size_t n, double theta) {
  FamilyParams params;
  params.theta = theta;
  const double t_sin = trace_sq(build(MatrixFamily::OscSin, n, params));
  const double t_cos = trace_sq(build(MatrixFamily::OscCos, n, params));

  DifferenceReport rep;
  rep.lhs = t_sin - t_cos;
  rep.rhs = -trace_sq_alternating_closed(n) +
            theta * theta * static_cast<double>(n);
  rep.gap = std::abs(rep.lhs - rep.rhs);
  return rep;
}

double cos_over_k2_series(double theta, std::size_t terms) {
  double acc = 0.0;
  for (std::size_t k = terms; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    acc += std::cos(2.0 * kd * theta) / (kd * kd);
  }
  return acc;
}

double cos_over_k2_closed(double theta) {
  if (!(theta >= 0.0) || theta > kPi / 2.0)
    throw InvalidParameter("cos_over_k2_closed: theta must lie in [0, pi/2]");
  return kPi * kPi / 6.0 - kPi * theta + theta * theta;
}

double sin_over_k_series(double x, std::size_t terms) {
  double acc = 0.0;
  for (std::size_t k = terms; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    acc += std::sin(kd * x) / kd;
  }
  return acc;
}

double sin_over_k_closed(double x) {
  if (!(x > 0.0) || !(x < 2.0 * kPi))
    throw InvalidParameter("sin_over_k_closed: x must lie in (0, 2 pi)");
  return (kPi - x) / 2.0;
}

}  // namespace hilspec
