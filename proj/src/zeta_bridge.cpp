#include "hilspec/zeta_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>

#include "hilspec/hermitian_eigen.hpp"
#include "hilspec/matrix_families.hpp"

namespace hilspec {

namespace {

constexpr double kPi = std::numbers::pi;

// Kahan-compensated accumulator for the long direct sums.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// sum_{j>=1} (-1)^{j-1} term(j): direct part to n0, then iterated
// averaging of the next `stages` partial sums (Euler transform). For
// smooth slowly varying terms the averaging error dies like the stages-th
// difference of the term sequence, far below roundoff here. stage_delta
// reports the final stage's movement of the answer.
double accelerated_alternating(const std::function<double(std::size_t)>& term,
                               std::size_t n0, int stages,
                               double* stage_delta = nullptr) {
  Kahan direct;
  for (std::size_t j = 1; j < n0; ++j)
    direct.add(j % 2 == 1 ? term(j) : -term(j));

  std::vector<double> s(static_cast<std::size_t>(stages) + 1);
  double run = direct.sum;
  for (int j = 0; j <= stages; ++j) {
    const std::size_t idx = n0 + static_cast<std::size_t>(j);
    run += idx % 2 == 1 ? term(idx) : -term(idx);
    s[static_cast<std::size_t>(j)] = run;
  }
  double prev = s[0];
  for (int stage = 1; stage <= stages; ++stage) {
    for (int j = 0; j + stage <= stages; ++j)
      s[static_cast<std::size_t>(j)] =
          0.5 * (s[static_cast<std::size_t>(j)] + s[static_cast<std::size_t>(j) + 1]);
    if (stage == stages - 1) prev = s[0];
  }
  if (stage_delta != nullptr) *stage_delta = std::abs(s[0] - prev);
  return s[0];
}

void check_even_order(unsigned k2, const char* who) {
  if (k2 < 2 || k2 > 20 || k2 % 2 != 0)
    throw InvalidParameter(std::string(who) + ": order must be even in [2, 20]");
}

}  // namespace

SpecialValue catalan(double eps) {
  if (!(eps > 0.0)) throw InvalidParameter("catalan: eps must be positive");
  SpecialValue out;
  out.name = "catalan";
  Kahan acc;
  constexpr std::size_t kCap = 200000000;
  for (std::size_t j = 0;; ++j) {
    const double denom = static_cast<double>(2 * j + 1);
    const double next = 1.0 / (denom * denom);
    if (next <= eps) {
      out.series_terms = j;
      out.error_bound = next;
      break;
    }
    if (j == kCap) throw NoConvergence("catalan: eps below reachable range");
    acc.add(j % 2 == 0 ? next : -next);
  }
  out.value = acc.sum;
  return out;
}

SpecialValue zeta_even(unsigned k2) {
  check_even_order(k2, "zeta_even");
  const double s = static_cast<double>(k2);
  constexpr std::size_t kN = 1000;
  const double nd = static_cast<double>(kN);

  Kahan acc;
  for (std::size_t n = kN - 1; n >= 1; --n)
    acc.add(std::pow(static_cast<double>(n), -s));

  // Euler-Maclaurin value of sum_{n >= kN} n^{-s}; the correction series
  // alternates in sign with decreasing magnitude, so the first omitted
  // term bounds the rest.
  acc.add(std::pow(nd, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(nd, -s));
  acc.add(s * std::pow(nd, -s - 1.0) / 12.0);
  acc.add(-s * (s + 1.0) * (s + 2.0) * std::pow(nd, -s - 3.0) / 720.0);
  acc.add(s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
          std::pow(nd, -s - 5.0) / 30240.0);

  SpecialValue out;
  out.name = "zeta(" + std::to_string(k2) + ")";
  out.value = acc.sum;
  out.series_terms = kN - 1;
  out.error_bound = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
                    (s + 5.0) * (s + 6.0) * std::pow(nd, -s - 7.0) / 1209600.0;
  return out;
}

SpecialValue dirichlet_L_chi4(unsigned k2) {
  check_even_order(k2, "dirichlet_L_chi4");
  const double s = static_cast<double>(k2);
  const auto term = [s](std::size_t j) {
    return std::pow(static_cast<double>(2 * j - 1), -s);
  };
  SpecialValue out;
  out.name = "L(" + std::to_string(k2) + ",chi4)";
  double delta = 0.0;
  out.value = accelerated_alternating(term, 600, 48, &delta);
  out.series_terms = 600 + 48;
  out.error_bound = std::max(delta, 1e-15);
  return out;
}

SpecialValue alpha(unsigned k) {
  if (k < 1 || k > 10)
    throw InvalidParameter("alpha: k must lie in [1, 10]");
  const SpecialValue z = zeta_even(2 * k);
  const SpecialValue l = dirichlet_L_chi4(2 * k);
  const double pow4 = std::ldexp(1.0, static_cast<int>(2 * k));  // 2^{2k}

  SpecialValue out;
  out.name = "alpha(" + std::to_string(k) + ")";
  out.value = -0.5 * (pow4 - 1.0) * z.value - 0.5 * pow4 * l.value + 2.0 * pow4;
  out.series_terms = z.series_terms + l.series_terms;
  out.error_bound =
      0.5 * (pow4 - 1.0) * z.error_bound + 0.5 * pow4 * l.error_bound + 1e-15;
  return out;
}

TrigammaReport trigamma_quarter() {
  constexpr std::size_t kN = 1000000;
  Kahan acc;
  for (std::size_t n = kN; n-- > 0;) {
    const double d = static_cast<double>(n) + 0.25;
    acc.add(1.0 / (d * d));
  }
  acc.add(1.0 / (static_cast<double>(kN) + 0.25));  // integral tail

  TrigammaReport rep;
  rep.series_value = acc.sum;
  rep.identity_value = kPi * kPi + 8.0 * catalan(1e-13).value;
  rep.gap = std::abs(rep.series_value - rep.identity_value);
  return rep;
}

namespace {

// eta^{(d)} up to sign: sum (-1)^{j-1} log^d(j) j^{-s}.
double eta_series(double s, int d, double* delta) {
  const auto term = [s, d](std::size_t j) {
    const double lj = std::log(static_cast<double>(j));
    double f = std::pow(static_cast<double>(j), -s);
    for (int i = 0; i < d; ++i) f *= lj;
    return f;
  };
  return accelerated_alternating(term, 4000, 64, delta);
}

}  // namespace

double zeta_via_eta(double s) {
  if (!(s > 0.0) || s == 1.0)
    throw InvalidParameter("zeta_via_eta: need s > 0, s != 1");
  double delta = 0.0;
  const double eta = eta_series(s, 0, &delta);
  return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

SpecialValue zeta_log_deriv2_half() {
  double d0 = 0.0, d1 = 0.0, d2 = 0.0;
  const double e0 = eta_series(0.5, 0, &d0);
  const double e1 = eta_series(0.5, 1, &d1);
  const double e2 = eta_series(0.5, 2, &d2);
  const double worst = std::max({d0, d1, d2});
  if (worst > 1e-8)
    throw NoConvergence("zeta_log_deriv2_half: acceleration stagnated");

  const double root2 = std::numbers::sqrt2;
  const double ln2 = std::numbers::ln2;
  const double c = 1.0 - root2;         // 1 - 2^{1-s} at s = 1/2
  const double c1 = root2 * ln2;        // its s-derivative
  const double c2 = -root2 * ln2 * ln2;

  const double zeta = e0 / c;
  const double zeta1 = (-e1 - zeta * c1) / c;
  const double zeta2 = (e2 - 2.0 * zeta1 * c1 - zeta * c2) / c;

  SpecialValue out;
  out.name = "(zeta'/zeta)'(1/2)";
  out.value = zeta2 / zeta - (zeta1 / zeta) * (zeta1 / zeta);
  out.series_terms = 4000 + 64;
  out.error_bound = std::max(worst * 8.0, 1e-12);
  return out;
}

ZerosTable parse_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zeros file: " + path, 0);

  ZerosTable table;
  table.source_path = path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(a, b - a + 1);

    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (end != body.c_str() + body.size())
      throw ParseError("zeros file: not a number: '" + body + "'", line_no);
    if (!(v > 0.0) || !std::isfinite(v))
      throw ParseError("zeros file: ordinate must be positive", line_no);
    if (!table.ordinates.empty() && v <= table.ordinates.back())
      throw NotIncreasing("zeros file: ordinates must strictly increase", line_no);
    table.ordinates.push_back(v);
  }
  if (!table.ordinates.empty() &&
      std::abs(table.ordinates.front() - 14.134725) > 1e-3) {
    table.warning = "first ordinate " + std::to_string(table.ordinates.front()) +
                    " is not the standard table's 14.134725";
  }
  return table;
}

ZeroSumPartial zero_sum(unsigned k2, const ZerosTable& zeros) {
  if (k2 < 2 || k2 % 2 != 0)
    throw InvalidParameter("zero_sum: order must be even and >= 2");
  if (zeros.ordinates.empty()) throw EmptyTable("zero_sum: no zeros loaded");

  const double sign = (k2 / 2) % 2 == 0 ? 2.0 : -2.0;
  Kahan acc;
  for (double g : zeros.ordinates)
    acc.add(sign * std::pow(g, -static_cast<double>(k2)));
  return {acc.sum, zeros.ordinates.size()};
}

IdentityReport zero_sum_identity_check(const ZerosTable& zeros) {
  const ZeroSumPartial partial = zero_sum(2, zeros);

  IdentityReport rep;
  rep.partial = partial.partial;
  rep.zeros_used = partial.used;
  const double g = dirichlet_L_chi4(2).value;
  rep.rhs = -zeta_log_deriv2_half().value - kPi * kPi / 4.0 - 2.0 * g + 8.0;
  rep.gap = std::abs(rep.partial - rep.rhs);

  const double t = zeros.ordinates.back();
  rep.truncation_estimate = (std::log(t / (2.0 * kPi)) + 1.0) / (kPi * t);
  rep.corrected_gap = std::abs(rep.partial - rep.truncation_estimate - rep.rhs);
  return rep;
}

FitReport prime_limit_check(std::uint64_t p, std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw InvalidParameter("prime_limit_check: n must be odd and >= 3");
  FamilyParams params;
  params.p = p;
  DenseMatrix a = build(MatrixFamily::PrimeScaled, n, params);
  const double scale = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) *= scale;

  const SpectrumSet spec = skew_spectrum(a);
  const double spacing = 2.0 * kPi / std::log(static_cast<double>(p));

  FitReport fit;
  fit.n = n;
  fit.model = "(2pi/log p)k";
  fit.zero_present = spec.zero_count > 0;
  double sq = 0.0;
  for (std::size_t k = 1; k <= spec.positive_branch.size(); ++k) {
    const double d = spec.positive_branch[k - 1] - spacing * static_cast<double>(k);
    fit.deviations.push_back(d);
    fit.max_abs = std::max(fit.max_abs, std::abs(d));
    sq += d * d;
  }
  if (!fit.deviations.empty())
    fit.rms = std::sqrt(sq / static_cast<double>(fit.deviations.size()));
  return fit;
}

double interior_relative_rms(const FitReport& fit, double spacing) {
  if (!(spacing > 0.0))
    throw InvalidParameter("interior_relative_rms: spacing must be positive");
  const std::size_t lo = std::max<std::size_t>(1, fit.n / 8);
  const std::size_t hi = (3 * fit.n) / 8;
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t k = lo; k <= hi && k <= fit.deviations.size(); ++k) {
    const double rel = fit.deviations[k - 1] / (spacing * static_cast<double>(k));
    acc += rel * rel;
    ++count;
  }
  return count > 0 ? std::sqrt(acc / static_cast<double>(count)) : 0.0;
}

}  // namespace hilspec
