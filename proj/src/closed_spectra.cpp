#include "hilspec/closed_spectra.hpp"

#include <cmath>
#include <numbers>

namespace hilspec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_n(std::size_t n) {
  if (n < 1) throw InvalidParameter("closed spectra: n must be at least 1");
}

void check_k(std::size_t k, std::size_t lo, std::size_t hi, const char* who) {
  if (k < lo || k > hi) throw InvalidParameter(std::string(who) + ": k out of range");
}

}  // namespace

ClosedFormSpectrum alt_quant_spectrum(std::size_t n) {
  check_n(n);
  ClosedFormSpectrum s;
  s.n = n;
  s.source = ClosedFormSource::AltQuant;
  const double nd = static_cast<double>(n);
  const double scale = 2.0 * std::sin(kPi / nd);
  s.values.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    s.values.emplace_back(0.0, scale * (static_cast<double>(k) - (nd + 1.0) / 2.0));
  return s;
}

ClosedFormSpectrum sym_quant_spectrum(std::size_t n) {
  check_n(n);
  ClosedFormSpectrum s;
  s.n = n;
  s.source = ClosedFormSource::SymQuant;
  const double nd = static_cast<double>(n);
  const double scale = std::sin(kPi / nd);
  s.values.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    s.values.emplace_back((nd + 1.0 - 2.0 * static_cast<double>(k)) * scale, 0.0);
  return s;
}

ClosedFormSpectrum cosec_quant_spectrum(std::size_t n) {
  check_n(n);
  ClosedFormSpectrum s;
  s.n = n;
  s.source = ClosedFormSource::CosecQuant;
  const double nd = static_cast<double>(n);
  s.values.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    s.values.emplace_back(nd + 1.0 - 2.0 * static_cast<double>(k), 0.0);
  return s;
}

DenseMatrix alt_quant_eigenbasis(std::size_t n) {
  check_n(n);
  DenseMatrix p(n);
  const double nd = static_cast<double>(n);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t e = (m * (2 * k - 1)) % (2 * n);
      const double angle = kPi * static_cast<double>(e) / nd;
      p(m - 1, k - 1) = Scalar{std::cos(angle), std::sin(angle)};
    }
  }
  return p;
}

DenseMatrix alt_quant_eigendiag(std::size_t n) {
  check_n(n);
  DenseMatrix d(n);
  const ClosedFormSpectrum s = alt_quant_spectrum(n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = s.values[k];
  return d;
}

DenseMatrix cosec_quant_eigenbasis(std::size_t n) {
  check_n(n);
  DenseMatrix q(n);
  const double nd = static_cast<double>(n);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= n; ++k) {
      // cos has period 2 pi = pi * (4n) / (2n); reduce mod 4n first.
      const std::size_t e = ((2 * m - 1) * (2 * k - 1)) % (4 * n);
      const double angle = kPi * static_cast<double>(e) / (2.0 * nd) - kPi / 4.0;
      q(m - 1, k - 1) = Scalar{std::cos(angle), 0.0};
    }
  }
  return q;
}

DenseMatrix cosec_quant_eigendiag(std::size_t n) {
  check_n(n);
  DenseMatrix d(n);
  const ClosedFormSpectrum s = cosec_quant_spectrum(n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = s.values[k];
  return d;
}

DetCheck cosec_eigenbasis_det_check(std::size_t n) {
  check_n(n);
  DetCheck c;
  c.n = n;
  const double nd = static_cast<double>(n);
  c.log_abs_expected = (nd / 2.0) * std::log(nd / 2.0);
  c.sign_expected = ((n + 1) % 4 == 0) ? -1 : 1;

  const LogDet det = log_abs_det(cosec_quant_eigenbasis(n));
  c.sign_observed = det.sign;
  c.log_abs_observed = det.log_abs;

  const double tol = 1e-8 * std::max(1.0, std::abs(c.log_abs_expected));
  c.pass = (c.sign_observed == c.sign_expected) &&
           std::abs(c.log_abs_observed - c.log_abs_expected) <= tol;
  return c;
}

namespace {
// The finite sums below are only stated for n >= 2 (they run over the
// nontrivial n-th roots of unity).
void check_sum_n(std::size_t n) {
  if (n < 2) throw InvalidParameter("root-of-unity sums need n >= 2");
}
}  // namespace

double rootsum_inverse(std::size_t n) {
  check_sum_n(n);
  Scalar acc{0.0, 0.0};
  const double nd = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const double angle = 2.0 * kPi * static_cast<double>(j) / nd;
    const Scalar zeta{std::cos(angle), std::sin(angle)};
    acc += 1.0 / (Scalar{1.0, 0.0} - zeta);
  }
  return acc.real();
}

double rootsum_ratio(std::size_t n, std::size_t k) {
  check_sum_n(n);
  check_k(k, 1, n - 1, "rootsum_ratio");
  Scalar acc{0.0, 0.0};
  const double nd = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const double angle = 2.0 * kPi * static_cast<double>(j) / nd;
    const double angle_k = 2.0 * kPi * static_cast<double>((k * j) % n) / nd;
    const Scalar zeta{std::cos(angle), std::sin(angle)};
    const Scalar zeta_k{std::cos(angle_k), std::sin(angle_k)};
    acc += (Scalar{1.0, 0.0} - zeta_k) / (Scalar{1.0, 0.0} - zeta);
  }
  return acc.real();
}

Scalar rootsum_shifted(std::size_t n, std::size_t k) {
  check_sum_n(n);
  check_k(k, 1, n, "rootsum_shifted");
  Scalar acc{0.0, 0.0};
  const double nd = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const double angle = 2.0 * kPi * static_cast<double>(j) / nd;
    const double angle_k = 2.0 * kPi * static_cast<double>((k * j) % n) / nd;
    const Scalar zeta{std::cos(angle), std::sin(angle)};
    const Scalar zeta_k{std::cos(angle_k), std::sin(angle_k)};
    acc += zeta_k / (Scalar{1.0, 0.0} - zeta);
  }
  return acc;
}

double cos_cosec_sum(std::size_t n, std::size_t k) {
  check_sum_n(n);
  check_k(k, 1, n, "cos_cosec_sum");
  double acc = 0.0;
  const double nd = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t e = (j * (2 * k - 1)) % (2 * n);
    acc += std::cos(kPi * static_cast<double>(e) / nd) /
           std::sin(kPi * static_cast<double>(j) / nd);
  }
  return acc;
}

double sin_cosec_sum(std::size_t n, std::size_t k) {
  check_sum_n(n);
  check_k(k, 1, n, "sin_cosec_sum");
  double acc = 0.0;
  const double nd = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t e = (j * (2 * k - 1)) % (2 * n);
    acc += std::sin(kPi * static_cast<double>(e) / nd) /
           std::sin(kPi * static_cast<double>(j) / nd);
  }
  return acc;
}

double cosec_sq_sum(std::size_t n) {
  check_sum_n(n);
  double acc = 0.0;
  const double nd = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const double s = std::sin(kPi * static_cast<double>(j) / nd);
    acc += 1.0 / (s * s);
  }
  return acc;
}

}  // namespace hilspec
