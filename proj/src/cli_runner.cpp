#include "hilspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>

#include "hilspec/closed_spectra.hpp"
#include "hilspec/hermitian_eigen.hpp"
#include "hilspec/report_io.hpp"
#include "hilspec/spectra_lab.hpp"
#include "hilspec/sweep.hpp"
#include "hilspec/trace_identities.hpp"
#include "hilspec/zeta_bridge.hpp"

namespace hilspec {

std::vector<std::size_t> parse_n_spec(const std::string& text) {
  const auto parse_one = [&](const std::string& part) -> std::size_t {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(part.c_str(), &end, 10);
    if (end != part.c_str() + part.size() || part.empty() || v == 0)
      throw InvalidParameter("bad n value: '" + part + "'");
    return static_cast<std::size_t>(v);
  };

  std::vector<std::size_t> out;
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t from = parse_one(text.substr(0, dots));
    const std::size_t to = parse_one(text.substr(dots + 2));
    if (to < from) throw InvalidParameter("n range must ascend: " + text);
    if (to - from >= 1000000) throw InvalidParameter("n range too large: " + text);
    for (std::size_t n = from; n <= to; ++n) out.push_back(n);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_one(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InvalidParameter("empty n list");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw InvalidParameter("n list must strictly ascend: " + text);
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Output {
  std::vector<std::string> columns;
  std::vector<Json> rows;
  Json params = Json::object();
};

bool family_is_skew(MatrixFamily f) {
  return f == MatrixFamily::Alternating || f == MatrixFamily::AlternatingQuant ||
         f == MatrixFamily::OscCos || f == MatrixFamily::PrimeScaled;
}

double pick_tol(double override_tol, double fallback) {
  return override_tol > 0.0 ? override_tol : fallback;
}

const std::vector<std::size_t>& require_n(const RunConfig& config) {
  if (config.n_values.empty())
    throw InvalidParameter(config.command + ": --n is required");
  return config.n_values;
}

FamilyParams family_params(const RunConfig& config) {
  FamilyParams p;
  p.theta = config.theta;
  p.p = config.p;
  return p;
}

void add_family_params(const RunConfig& config, Json& params) {
  params["family"] = family_token(config.family);
  if (family_uses_theta(config.family)) params["theta"] = config.theta;
  if (family_uses_prime(config.family)) params["p"] = config.p;
}

std::size_t snapped_zero_count(const std::vector<double>& values, double norm,
                               std::size_t n) {
  const double thresh = static_cast<double>(n) * 1e-11 * norm;
  std::size_t count = 0;
  for (double v : values)
    if (std::abs(v) <= thresh) ++count;
  return count;
}

Output do_build(const RunConfig& config) {
  const auto& ns = require_n(config);
  if (ns.size() != 1) throw InvalidParameter("build: takes a single n");
  const DenseMatrix m = build(config.family, ns[0], family_params(config));
  validate_structure(config.family, m);

  Output out;
  out.columns = {"row", "col", "re", "im"};
  out.params["n"] = ns[0];
  add_family_params(config, out.params);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      Json row = Json::object();
      row["row"] = i + 1;
      row["col"] = j + 1;
      row["re"] = m(i, j).real();
      row["im"] = m(i, j).imag();
      out.rows.push_back(std::move(row));
    }
  return out;
}

Output do_spectrum(const RunConfig& config) {
  Output out;
  out.columns = {"n", "index", "re", "im", "zero_count", "residual"};
  add_family_params(config, out.params);
  const double tol = pick_tol(config.tol, 1e-12);
  out.params["tol"] = tol;
  out.params["kind"] =
      family_is_skew(config.family) ? "skew-imaginary" : "hermitian-real";

  for (std::size_t n : require_n(config)) {
    const DenseMatrix m = build(config.family, n, family_params(config));
    if (family_is_skew(config.family)) {
      const SpectrumSet spec = skew_spectrum(m, tol);
      for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        Json row = Json::object();
        row["n"] = n;
        row["index"] = i + 1;
        row["re"] = spec.eigenvalues[i].real();
        row["im"] = spec.eigenvalues[i].imag();
        row["zero_count"] = spec.zero_count;
        row["residual"] = spec.residual;
        out.rows.push_back(std::move(row));
      }
    } else {
      const EigenDecomposition eig = hermitian_eigen(m, tol);
      const std::size_t zeros = snapped_zero_count(eig.values, frobenius(m), n);
      for (std::size_t i = 0; i < eig.values.size(); ++i) {
        Json row = Json::object();
        row["n"] = n;
        row["index"] = i + 1;
        row["re"] = eig.values[i];
        row["im"] = 0.0;
        row["zero_count"] = zeros;
        row["residual"] = eig.residual;
        out.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

Output do_trace(const RunConfig& config) {
  Output out;
  out.columns = {"n",      "family",     "trace_sq_matrix",
                 "trace_sq_closed", "limit_value", "normalized"};
  add_family_params(config, out.params);
  for (std::size_t n : require_n(config)) {
    const TraceReport rep = trace_report(config.family, n, family_params(config));
    Json row = Json::object();
    row["n"] = rep.n;
    row["family"] = family_token(config.family);
    row["trace_sq_matrix"] = rep.trace_sq_matrix;
    row["trace_sq_closed"] = rep.trace_sq_closed;
    row["limit_value"] = rep.limit_value;
    row["normalized"] = rep.normalized;
    out.rows.push_back(std::move(row));
  }
  return out;
}

double max_entry_gap(const DenseMatrix& x, const DenseMatrix& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      worst = std::max(worst, std::abs(x(i, j) - y(i, j)));
  return worst;
}

// Sorted numeric spectrum of a symmetric family against a closed form.
double closed_spectrum_gap(MatrixFamily family, const ClosedFormSpectrum& closed,
                           std::size_t n) {
  const EigenDecomposition eig = hermitian_eigen(build(family, n));
  std::vector<double> expect;
  expect.reserve(n);
  for (const Scalar& v : closed.values) expect.push_back(v.real());
  std::sort(expect.begin(), expect.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(eig.values[i] - expect[i]));
  return worst;
}

Output do_verify(const RunConfig& config) {
  Output out;
  out.params["theorem"] = config.theorem;
  const auto& ns = require_n(config);
  const std::string& tag = config.theorem;

  if (tag == "1") {
    out.columns = {"n", "normalized", "limit", "gap", "pass"};
    double prev = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const TraceReport rep = trace_report(MatrixFamily::Alternating, ns[i]);
      const double gap = std::abs(rep.normalized - limit_alternating());
      Json row = Json::object();
      row["n"] = ns[i];
      row["normalized"] = rep.normalized;
      row["limit"] = limit_alternating();
      row["gap"] = gap;
      row["pass"] = i == 0 || gap < prev;
      out.rows.push_back(std::move(row));
      prev = gap;
    }
  } else if (tag == "2") {
    out.columns = {"n", "trace_sq_matrix", "trace_sq_closed", "gap", "tol", "pass"};
    for (std::size_t n : ns) {
      const double oracle = trace_sq(build(MatrixFamily::AlternatingQuant, n));
      const double closed = trace_sq_alt_quant_closed(n);
      const double gap = std::abs(oracle - closed);
      const double tol =
          pick_tol(config.tol, 1e-9 * static_cast<double>(n) * static_cast<double>(n));
      Json row = Json::object();
      row["n"] = n;
      row["trace_sq_matrix"] = oracle;
      row["trace_sq_closed"] = closed;
      row["gap"] = gap;
      row["tol"] = tol;
      row["pass"] = gap <= tol;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "3") {
    out.columns = {"n", "family", "theta", "normalized", "limit", "gap", "pass"};
    out.params["theta"] = config.theta;
    const MatrixFamily fams[2] = {MatrixFamily::OscCos, MatrixFamily::OscSin};
    for (MatrixFamily fam : fams) {
      FamilyParams fp;
      fp.theta = config.theta;
      double prev = 0.0;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        const TraceReport rep = trace_report(fam, ns[i], fp);
        const double gap = std::abs(rep.normalized - rep.limit_value);
        Json row = Json::object();
        row["n"] = ns[i];
        row["family"] = family_token(fam);
        row["theta"] = config.theta;
        row["normalized"] = rep.normalized;
        row["limit"] = rep.limit_value;
        row["gap"] = gap;
        row["pass"] = i == 0 || gap < prev;
        out.rows.push_back(std::move(row));
        prev = gap;
      }
    }
  } else if (tag == "4") {
    out.columns = {"n", "max_gap", "tol", "pass"};
    const double tol = pick_tol(config.tol, 1e-8);
    for (std::size_t n : ns) {
      const ExactMatchReport rep = alt_quant_spectrum_check(n, tol);
      Json row = Json::object();
      row["n"] = n;
      row["max_gap"] = rep.max_gap;
      row["tol"] = tol;
      row["pass"] = rep.pass;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "sym-quant" || tag == "cosec-quant") {
    out.columns = {"n", "max_gap", "tol", "pass"};
    const bool sym = tag == "sym-quant";
    const double tol = pick_tol(config.tol, sym ? 1e-8 : 1e-7);
    for (std::size_t n : ns) {
      const double gap = closed_spectrum_gap(
          sym ? MatrixFamily::SymmetricQuant : MatrixFamily::CosecQuant,
          sym ? sym_quant_spectrum(n) : cosec_quant_spectrum(n), n);
      Json row = Json::object();
      row["n"] = n;
      row["max_gap"] = gap;
      row["tol"] = tol;
      row["pass"] = gap <= tol;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "det-q") {
    out.columns = {"n", "sign_expected", "sign_observed",
                   "log_abs_expected", "log_abs_observed", "pass"};
    for (std::size_t n : ns) {
      const DetCheck rep = cosec_eigenbasis_det_check(n);
      Json row = Json::object();
      row["n"] = rep.n;
      row["sign_expected"] = rep.sign_expected;
      row["sign_observed"] = rep.sign_observed;
      row["log_abs_expected"] = rep.log_abs_expected;
      row["log_abs_observed"] = rep.log_abs_observed;
      row["pass"] = rep.pass;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "eigenbasis") {
    out.columns = {"n", "alt_residual", "cosec_residual", "tol", "pass"};
    for (std::size_t n : ns) {
      const DenseMatrix a = build(MatrixFamily::AlternatingQuant, n);
      const double r1 = max_entry_gap(matmul(a, alt_quant_eigenbasis(n)),
                                      matmul(alt_quant_eigenbasis(n),
                                             alt_quant_eigendiag(n)));
      const DenseMatrix c = build(MatrixFamily::CosecQuant, n);
      const double r2 = max_entry_gap(matmul(c, cosec_quant_eigenbasis(n)),
                                      matmul(cosec_quant_eigenbasis(n),
                                             cosec_quant_eigendiag(n)));
      const double tol = pick_tol(config.tol, 1e-10 * static_cast<double>(n));
      Json row = Json::object();
      row["n"] = n;
      row["alt_residual"] = r1;
      row["cosec_residual"] = r2;
      row["tol"] = tol;
      row["pass"] = r1 <= tol && r2 <= tol;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "trig-sums") {
    out.columns = {"n", "max_gap", "tol", "pass"};
    const double tol = pick_tol(config.tol, 1e-10);
    for (std::size_t n : ns) {
      double worst = std::abs(rootsum_inverse(n) -
                              (static_cast<double>(n) - 1.0) / 2.0);
      if (n >= 2)
        worst = std::max(worst, std::abs(cosec_sq_sum(n) -
                                         (static_cast<double>(n * n) - 1.0) / 3.0));
      for (std::size_t k = 1; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double nn = static_cast<double>(n);
        if (k <= n - 1)
          worst = std::max(worst, std::abs(rootsum_ratio(n, k) - (nn - kk)));
        worst = std::max(worst,
                         std::abs(rootsum_shifted(n, k) -
                                  Scalar(kk - (nn + 1.0) / 2.0, 0.0)));
        worst = std::max(worst, std::abs(cos_cosec_sum(n, k)));
        worst = std::max(worst,
                         std::abs(sin_cosec_sum(n, k) - (nn + 1.0 - 2.0 * kk)));
      }
      Json row = Json::object();
      row["n"] = n;
      row["max_gap"] = worst;
      row["tol"] = tol;
      row["pass"] = worst <= tol;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "difference") {
    out.columns = {"n", "theta", "lhs", "rhs", "gap", "tol", "pass"};
    out.params["theta"] = config.theta;
    for (std::size_t n : ns) {
      const DifferenceReport rep = trace_difference_check(n, config.theta);
      const double tol = pick_tol(config.tol, 1e-9 * static_cast<double>(n));
      Json row = Json::object();
      row["n"] = n;
      row["theta"] = config.theta;
      row["lhs"] = rep.lhs;
      row["rhs"] = rep.rhs;
      row["gap"] = rep.gap;
      row["tol"] = tol;
      row["pass"] = rep.gap <= tol;
      out.rows.push_back(std::move(row));
    }
  } else if (tag == "radius") {
    out.columns = {"n", "family", "radius", "pass"};
    const MatrixFamily fams[2] = {MatrixFamily::Alternating,
                                  MatrixFamily::SymmetricHilbert};
    for (std::size_t n : ns)
      for (MatrixFamily fam : fams) {
        const RadiusReport rep = spectral_radius_check(fam, n);
        Json row = Json::object();
        row["n"] = n;
        row["family"] = family_token(fam);
        row["radius"] = rep.radius;
        row["pass"] = rep.pass;
        out.rows.push_back(std::move(row));
      }
  } else if (tag == "structure") {
    out.columns = {"n", "family", "skew", "symmetric", "toeplitz", "hankel", "pass"};
    const MatrixFamily all[8] = {
        MatrixFamily::Alternating,     MatrixFamily::AlternatingQuant,
        MatrixFamily::OscCos,          MatrixFamily::OscSin,
        MatrixFamily::SymmetricHilbert, MatrixFamily::SymmetricQuant,
        MatrixFamily::CosecQuant,      MatrixFamily::PrimeScaled};
    for (std::size_t n : ns)
      for (MatrixFamily fam : all) {
        const StructureReport rep =
            validate_structure(fam, build(fam, n, family_params(config)));
        Json row = Json::object();
        row["n"] = n;
        row["family"] = family_token(fam);
        row["skew"] = rep.skew;
        row["symmetric"] = rep.symmetric;
        row["toeplitz"] = rep.toeplitz;
        row["hankel"] = rep.hankel;
        row["pass"] = true;
        out.rows.push_back(std::move(row));
      }
  } else {
    throw InvalidParameter("verify: unknown theorem tag '" + tag + "'");
  }
  return out;
}

Output do_conjecture(const RunConfig& config) {
  Output out;
  out.params["which"] = config.which;
  const auto& ns = require_n(config);

  if (config.which == 1) {
    out.columns = {"n",   "model",       "max_abs",   "rms",
                   "interior_rms", "zero_present", "deviations"};
    for (std::size_t n : ns) {
      const FitReport fit = alternating_lattice_fit(n);
      Json row = Json::object();
      row["n"] = fit.n;
      row["model"] = fit.model;
      row["max_abs"] = fit.max_abs;
      row["rms"] = fit.rms;
      row["interior_rms"] = interior_rms(fit);
      row["zero_present"] = fit.zero_present;
      row["deviations"] = fit.deviations;
      out.rows.push_back(std::move(row));
    }
  } else if (config.which == 2) {
    out.columns = {"n", "max_gap", "tol", "pass"};
    const double tol = pick_tol(config.tol, 1e-8);
    for (std::size_t n : ns) {
      const ExactMatchReport rep = alt_quant_spectrum_check(n, tol);
      Json row = Json::object();
      row["n"] = n;
      row["max_gap"] = rep.max_gap;
      row["tol"] = tol;
      row["pass"] = rep.pass;
      out.rows.push_back(std::move(row));
    }
  } else if (config.which == 3) {
    out.columns = {"n",          "theta",        "case",
                   "minor_count", "predicted_minor", "major_count",
                   "predicted_major", "zero_count", "ks_distance"};
    out.params["theta"] = config.theta;
    for (std::size_t n : ns) {
      const SplitReport cos_rep = osc_cos_split(n, config.theta);
      const SplitReport sin_rep = osc_sin_split(n, config.theta);
      const SplitReport* reps[2] = {&cos_rep, &sin_rep};
      const char* names[2] = {"cos", "sin"};
      for (int i = 0; i < 2; ++i) {
        Json row = Json::object();
        row["n"] = reps[i]->n;
        row["theta"] = reps[i]->theta;
        row["case"] = names[i];
        row["minor_count"] = reps[i]->minor_count;
        row["predicted_minor"] = reps[i]->predicted_minor;
        row["major_count"] = reps[i]->major_count;
        row["predicted_major"] = reps[i]->predicted_major;
        row["zero_count"] = reps[i]->zero_count;
        if (i == 0)
          row["ks_distance"] = reps[i]->ks_distance;
        else
          row["ks_distance"] = nullptr;
        out.rows.push_back(std::move(row));
      }
    }
  } else {
    throw InvalidParameter("conjecture: --which must be 1, 2, or 3");
  }
  return out;
}

Output do_szego(const RunConfig& config) {
  TestFn fn;
  if (config.szego_fn == "sq") fn = TestFn::Square;
  else if (config.szego_fn == "quartic") fn = TestFn::Quartic;
  else if (config.szego_fn == "abs") fn = TestFn::Abs;
  else if (config.szego_fn == "indicator") fn = TestFn::Indicator;
  else throw InvalidParameter("szego: unknown --F '" + config.szego_fn + "'");

  MatrixFamily fam;
  if (config.szego_case == "cos") fam = MatrixFamily::OscCos;
  else if (config.szego_case == "sin") fam = MatrixFamily::OscSin;
  else throw InvalidParameter("szego: --case must be cos or sin");

  Output out;
  out.columns = {"n", "theta", "case", "fn", "a", "b", "empirical", "predicted", "gap"};
  out.params["theta"] = config.theta;
  out.params["case"] = config.szego_case;
  out.params["fn"] = config.szego_fn;
  for (std::size_t n : require_n(config)) {
    const MomentReport rep =
        szego_moment_check(fam, n, config.theta, fn, config.a, config.b);
    Json row = Json::object();
    row["n"] = n;
    row["theta"] = config.theta;
    row["case"] = config.szego_case;
    row["fn"] = config.szego_fn;
    row["a"] = config.a;
    row["b"] = config.b;
    row["empirical"] = rep.empirical;
    row["predicted"] = rep.predicted;
    row["gap"] = rep.gap;
    out.rows.push_back(std::move(row));
  }
  return out;
}

Output do_zeta(const RunConfig& config) {
  Output out;
  out.params["op"] = config.zeta_op;
  const std::string& op = config.zeta_op;

  const auto special_row = [&](const SpecialValue& v) {
    Json row = Json::object();
    row["name"] = v.name;
    row["value"] = v.value;
    row["series_terms"] = v.series_terms;
    row["error_bound"] = v.error_bound;
    out.rows.push_back(std::move(row));
  };

  const auto load_table = [&]() {
    if (config.zeros_path.empty())
      throw InvalidParameter("zeta --op " + op + " needs --zeros");
    ZerosTable table = parse_zeros(config.zeros_path);
    if (!table.warning.empty())
      std::cerr << "warning: " << table.warning << "\n";
    return table;
  };

  if (op == "catalan") {
    out.columns = {"name", "value", "series_terms", "error_bound"};
    out.params["eps"] = config.eps;
    special_row(catalan(config.eps));
  } else if (op == "alpha") {
    out.columns = {"name", "value", "series_terms", "error_bound"};
    out.params["k"] = config.k;
    special_row(alpha(config.k));
  } else if (op == "trigamma") {
    out.columns = {"series_value", "identity_value", "gap"};
    const TrigammaReport rep = trigamma_quarter();
    Json row = Json::object();
    row["series_value"] = rep.series_value;
    row["identity_value"] = rep.identity_value;
    row["gap"] = rep.gap;
    out.rows.push_back(std::move(row));
  } else if (op == "zerosum") {
    out.columns = {"k2", "partial", "used", "source"};
    out.params["k2"] = config.k2;
    const ZerosTable table = load_table();
    const ZeroSumPartial rep = zero_sum(config.k2, table);
    Json row = Json::object();
    row["k2"] = config.k2;
    row["partial"] = rep.partial;
    row["used"] = rep.used;
    row["source"] = table.source_path;
    out.rows.push_back(std::move(row));
  } else if (op == "identity") {
    out.columns = {"zeros_used",          "partial", "rhs", "gap",
                   "truncation_estimate", "corrected_gap", "source"};
    const ZerosTable table = load_table();
    const IdentityReport rep = zero_sum_identity_check(table);
    Json row = Json::object();
    row["zeros_used"] = rep.zeros_used;
    row["partial"] = rep.partial;
    row["rhs"] = rep.rhs;
    row["gap"] = rep.gap;
    row["truncation_estimate"] = rep.truncation_estimate;
    row["corrected_gap"] = rep.corrected_gap;
    row["source"] = table.source_path;
    out.rows.push_back(std::move(row));
  } else if (op == "primelimit") {
    out.columns = {"n",   "p",   "model",        "max_abs", "rms",
                   "interior_relative_rms", "zero_present", "deviations"};
    out.params["p"] = config.p;
    const double spacing = 2.0 * kPi / std::log(static_cast<double>(config.p));
    for (std::size_t n : require_n(config)) {
      const FitReport fit = prime_limit_check(config.p, n);
      Json row = Json::object();
      row["n"] = fit.n;
      row["p"] = config.p;
      row["model"] = fit.model;
      row["max_abs"] = fit.max_abs;
      row["rms"] = fit.rms;
      row["interior_relative_rms"] = interior_relative_rms(fit, spacing);
      row["zero_present"] = fit.zero_present;
      row["deviations"] = fit.deviations;
      out.rows.push_back(std::move(row));
    }
  } else {
    throw InvalidParameter("zeta: unknown --op '" + op + "'");
  }
  return out;
}

Output do_sweep(const RunConfig& config) {
  const auto& ns = require_n(config);
  Output out;
  out.columns = {"n", "family", "radius", "zero_count", "residual", "trace_sq"};
  add_family_params(config, out.params);

  std::vector<Json> slots(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    const std::size_t n = ns[i];
    const DenseMatrix m = build(config.family, n, family_params(config));
    double radius = 0.0;
    std::size_t zeros = 0;
    double residual = 0.0;
    if (family_is_skew(config.family)) {
      const SpectrumSet spec = skew_spectrum(m);
      radius = spec.positive_branch.empty() ? 0.0 : spec.positive_branch.back();
      zeros = spec.zero_count;
      residual = spec.residual;
    } else {
      const EigenDecomposition eig = hermitian_eigen(m);
      radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
      zeros = snapped_zero_count(eig.values, frobenius(m), n);
      residual = eig.residual;
    }
    Json row = Json::object();
    row["n"] = n;
    row["family"] = family_token(config.family);
    row["radius"] = radius;
    row["zero_count"] = zeros;
    row["residual"] = residual;
    row["trace_sq"] = trace_sq(m);
    slots[i] = std::move(row);
  });
  out.rows = std::move(slots);
  return out;
}

}  // namespace

int run_command(const RunConfig& config) {
  if (config.format != "csv" && config.format != "json")
    throw InvalidParameter("format must be csv or json");

  Output out;
  if (config.command == "build") out = do_build(config);
  else if (config.command == "spectrum") out = do_spectrum(config);
  else if (config.command == "verify") out = do_verify(config);
  else if (config.command == "trace") out = do_trace(config);
  else if (config.command == "conjecture") out = do_conjecture(config);
  else if (config.command == "szego") out = do_szego(config);
  else if (config.command == "zeta") out = do_zeta(config);
  else if (config.command == "sweep") out = do_sweep(config);
  else throw InvalidParameter("unknown command '" + config.command + "'");

  const std::string text =
      config.format == "json"
          ? to_json_text(make_document(config.command, out.params, out.rows))
          : to_csv(out.columns, out.rows);
  write_text(text, config.output_path);

  for (const Json& row : out.rows) {
    const auto it = row.find("pass");
    if (it != row.end() && it->is_boolean() && !it->get<bool>()) return 1;
  }
  return 0;
}

int run_cli(const RunConfig& config) {
  try {
    return run_command(config);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotIncreasing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hilspec
