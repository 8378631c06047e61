#include "hilspec/spectra_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "hilspec/closed_spectra.hpp"

namespace hilspec {

namespace {

constexpr double kPi = std::numbers::pi;

double eval_fn(TestFn fn, double x, double a, double b) {
  switch (fn) {
    case TestFn::Square: return x * x;
    case TestFn::Quartic: return x * x * x * x;
    case TestFn::Abs: return std::abs(x);
    case TestFn::Indicator: return (x >= a && x <= b) ? 1.0 : 0.0;
  }
  return 0.0;
}

// Real LU with partial pivoting. Factors in place; perm carries the row
// order; returns false when a pivot is exactly zero.
struct RealLU {
  std::size_t n = 0;
  std::vector<double> lu;
  std::vector<std::size_t> perm;

  bool factor(const DenseMatrix& a) {
    n = a.size();
    lu.assign(n * n, 0.0);
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
      for (std::size_t j = 0; j < n; ++j) lu[i * n + j] = a(i, j).real();
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      double best = std::abs(lu[k * n + k]);
      for (std::size_t i = k + 1; i < n; ++i) {
        const double m = std::abs(lu[i * n + k]);
        if (m > best) {
          best = m;
          piv = i;
        }
      }
      if (best == 0.0) return false;
      if (piv != k) {
        for (std::size_t j = 0; j < n; ++j)
          std::swap(lu[k * n + j], lu[piv * n + j]);
        std::swap(perm[k], perm[piv]);
      }
      const double d = lu[k * n + k];
      for (std::size_t i = k + 1; i < n; ++i) {
        const double f = lu[i * n + k] / d;
        lu[i * n + k] = f;
        if (f == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
      }
    }
    return true;
  }

  void solve(const std::vector<double>& b, std::vector<double>& x) const {
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < i; ++j) s -= lu[i * n + j] * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu[i * n + j] * x[j];
      x[i] = s / lu[i * n + i];
    }
  }
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double interior_rms(const FitReport& fit) {
  const std::size_t lo = std::max<std::size_t>(1, fit.n / 8);
  const std::size_t hi = (3 * fit.n) / 8;
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t k = lo; k <= hi && k <= fit.deviations.size(); ++k) {
    acc += fit.deviations[k - 1] * fit.deviations[k - 1];
    ++count;
  }
  return count > 0 ? std::sqrt(acc / static_cast<double>(count)) : 0.0;
}

FitReport alternating_lattice_fit(std::size_t n) {
  const SpectrumSet spec = skew_spectrum(build(MatrixFamily::Alternating, n));
  FitReport fit;
  fit.n = n;
  fit.zero_present = spec.zero_count > 0;
  const double step = 2.0 * kPi / static_cast<double>(n);
  const bool even = n % 2 == 0;
  fit.model = even ? "(2pi/n)(k-1/2)" : "(2pi/n)k";
  fit.deviations.reserve(spec.positive_branch.size());
  double sq = 0.0;
  for (std::size_t k = 1; k <= spec.positive_branch.size(); ++k) {
    const double model =
        even ? step * (static_cast<double>(k) - 0.5) : step * static_cast<double>(k);
    const double d = spec.positive_branch[k - 1] - model;
    fit.deviations.push_back(d);
    fit.max_abs = std::max(fit.max_abs, std::abs(d));
    sq += d * d;
  }
  if (!fit.deviations.empty())
    fit.rms = std::sqrt(sq / static_cast<double>(fit.deviations.size()));
  return fit;
}

ExactMatchReport alt_quant_spectrum_check(std::size_t n, double tol) {
  const SpectrumSet spec = skew_spectrum(build(MatrixFamily::AlternatingQuant, n));
  const ClosedFormSpectrum closed = alt_quant_spectrum(n);

  ExactMatchReport rep;
  rep.n = n;
  for (std::size_t k = 0; k < n; ++k) {
    // closed form values ascend with k already
    const double gap =
        std::abs(spec.eigenvalues[k].imag() - closed.values[k].imag());
    rep.max_gap = std::max(rep.max_gap, gap);
  }
  rep.pass = rep.max_gap <= tol;
  return rep;
}

double szego_symbol_cos(double theta, double x) {
  if (!(x >= 0.0) || x >= 2.0 * kPi)
    throw InvalidParameter("szego_symbol_cos: x must lie in [0, 2pi)");
  if (x < theta) return x;
  if (x < 2.0 * kPi - theta) return x - kPi;
  return x - 2.0 * kPi;
}

int szego_density_cos(double theta, double x) {
  if (!(std::abs(x) <= kPi))
    throw InvalidParameter("szego_density_cos: x must lie in [-pi, pi]");
  const double ax = std::abs(x);
  if (ax < theta) return 2;
  if (ax < kPi - theta) return 1;
  return 0;
}

double szego_symbol_sin(double theta, double x) {
  if (!(x >= 0.0) || x >= 2.0 * kPi)
    throw InvalidParameter("szego_symbol_sin: x must lie in [0, 2pi)");
  if (x < theta) return kPi;
  if (x < 2.0 * kPi - theta) return 0.0;
  return kPi;
}

double szego_model_cdf(double theta, double t) {
  const auto seg = [&](double lo, double hi, double density) {
    const double a = std::max(lo, -kPi);
    const double b = std::min(hi, t);
    return b > a ? density * (b - a) : 0.0;
  };
  if (t <= -kPi) return 0.0;
  if (t >= kPi) return 1.0;
  const double mass = seg(-(kPi - theta), -theta, 1.0) + seg(-theta, theta, 2.0) +
                      seg(theta, kPi - theta, 1.0);
  // Rounding in the segment sums can overshoot the full mass by an ulp.
  return std::clamp(mass / (2.0 * kPi), 0.0, 1.0);
}

namespace {

SplitReport split_counts(std::size_t n, double theta, const SpectrumSet& spec) {
  SplitReport rep;
  rep.n = n;
  rep.theta = theta;
  rep.zero_count = spec.zero_count;
  const auto& mu = spec.positive_branch;
  const std::size_t inside =
      std::upper_bound(mu.begin(), mu.end(), theta) - mu.begin();
  rep.minor_count = 2 * inside;
  rep.major_count = n - rep.minor_count - rep.zero_count;
  rep.predicted_minor =
      static_cast<std::size_t>(std::floor(theta * static_cast<double>(n) / kPi));
  rep.predicted_major = static_cast<std::size_t>(
      std::floor((1.0 - theta / kPi) * static_cast<double>(n)));
  return rep;
}

}  // namespace

SplitReport osc_cos_split(std::size_t n, double theta) {
  FamilyParams params;
  params.theta = theta;
  const SpectrumSet spec = skew_spectrum(build(MatrixFamily::OscCos, n, params));
  SplitReport rep = split_counts(n, theta, spec);

  // One-sample KS distance of the signed eigenvalues against the limit CDF.
  const std::size_t total = spec.eigenvalues.size();
  double d = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double m = szego_model_cdf(theta, spec.eigenvalues[i].imag());
    const double hi = static_cast<double>(i + 1) / static_cast<double>(total);
    const double lo = static_cast<double>(i) / static_cast<double>(total);
    d = std::max({d, hi - m, m - lo});
  }
  rep.ks_distance = d;
  return rep;
}

SplitReport osc_sin_split(std::size_t n, double theta) {
  FamilyParams params;
  params.theta = theta;
  const EigenDecomposition eig =
      hermitian_eigen(build(MatrixFamily::OscSin, n, params));

  SplitReport rep;
  rep.n = n;
  rep.theta = theta;
  for (double v : eig.values)
    if (std::abs(v - kPi) <= kPi / 2.0) ++rep.minor_count;  // clustered at pi
  rep.major_count = n - rep.minor_count;
  rep.predicted_minor =
      static_cast<std::size_t>(std::floor(theta * static_cast<double>(n) / kPi));
  rep.predicted_major = static_cast<std::size_t>(
      std::floor((1.0 - theta / kPi) * static_cast<double>(n)));
  return rep;
}

MomentReport szego_moment_check(MatrixFamily family, std::size_t n, double theta,
                                TestFn fn, double a, double b) {
  if (fn == TestFn::Indicator && !(a <= b))
    throw InvalidParameter("szego_moment_check: indicator needs a <= b");

  FamilyParams params;
  params.theta = theta;
  MomentReport rep;

  if (family == MatrixFamily::OscCos) {
    const SpectrumSet spec = skew_spectrum(build(family, n, params));
    double acc = 0.0;
    for (const Scalar& v : spec.eigenvalues) acc += eval_fn(fn, v.imag(), a, b);
    rep.empirical = acc / static_cast<double>(n);

    // (1/2pi) integral of F(symbol) by the midpoint rule, each smooth
    // piece on its own so the breakpoints never straddle a panel.
    const double edges[4] = {0.0, theta, 2.0 * kPi - theta, 2.0 * kPi};
    constexpr std::size_t kPanels = 100000;
    double integral = 0.0;
    for (int s = 0; s < 3; ++s) {
      const double len = edges[s + 1] - edges[s];
      if (len <= 0.0) continue;
      const auto panels = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::llround(
                 static_cast<double>(kPanels) * len / (2.0 * kPi))));
      const double h = len / static_cast<double>(panels);
      double piece = 0.0;
      for (std::size_t i = 0; i < panels; ++i) {
        const double x = edges[s] + (static_cast<double>(i) + 0.5) * h;
        piece += eval_fn(fn, szego_symbol_cos(theta, x), a, b);
      }
      integral += piece * h;
    }
    rep.predicted = integral / (2.0 * kPi);
  } else if (family == MatrixFamily::OscSin) {
    const EigenDecomposition eig = hermitian_eigen(build(family, n, params));
    double acc = 0.0;
    for (double v : eig.values) acc += eval_fn(fn, v, a, b);
    rep.empirical = acc / static_cast<double>(n);
    rep.predicted = (theta / kPi) * eval_fn(fn, kPi, a, b) +
                    (1.0 - theta / kPi) * eval_fn(fn, 0.0, a, b);
  } else {
    throw InvalidParameter("szego_moment_check: family must be osc-cos or osc-sin");
  }
  rep.gap = std::abs(rep.empirical - rep.predicted);
  return rep;
}

RadiusReport spectral_radius_check(MatrixFamily family, std::size_t n) {
  RadiusReport rep;
  rep.n = n;
  if (family == MatrixFamily::Alternating) {
    const SpectrumSet spec = skew_spectrum(build(family, n));
    rep.radius = spec.positive_branch.empty() ? 0.0 : spec.positive_branch.back();
  } else if (family == MatrixFamily::SymmetricHilbert) {
    const EigenDecomposition eig = hermitian_eigen(build(family, n));
    rep.radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  } else {
    throw InvalidParameter("spectral_radius_check: family must be alt or hilbert");
  }
  rep.pass = rep.radius < kPi;
  return rep;
}

double smallest_sv_upper(const DenseMatrix& a) {
  const std::size_t n = a.size();
  RealLU lu;
  if (!lu.factor(a)) return 0.0;

  // Fixed congruential start vector; two inverse iterations.
  std::vector<double> v(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    v[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  }
  std::vector<double> x;
  for (int it = 0; it < 2; ++it) {
    lu.solve(v, x);
    const double nx = norm2(x);
    if (!(nx > 0.0) || !std::isfinite(nx)) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = x[i] / nx;
  }
  std::vector<double> av(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j).real() * v[j];
    av[i] = s;
  }
  return norm2(av);  // ||v|| = 1
}

double inverse_frobenius(const DenseMatrix& a) {
  const std::size_t n = a.size();
  RealLU lu;
  if (!lu.factor(a)) return std::numeric_limits<double>::infinity();
  std::vector<double> e(n, 0.0);
  std::vector<double> x;
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    lu.solve(e, x);
    e[j] = 0.0;
    for (double t : x) acc += t * t;
  }
  return std::sqrt(acc);
}

}  // namespace hilspec
