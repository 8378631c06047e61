#include "hilspec/matrix_families.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace hilspec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_common(std::size_t n) {
  if (n < 1) throw InvalidParameter("build: n must be at least 1");
}

void check_theta(double theta) {
  if (!(theta >= 0.0) || theta > kPi / 2.0)
    throw InvalidParameter("build: theta must lie in [0, pi/2]");
}

// Toeplitz fill from the k = m - n > 0 generator; gen[k-1] holds the
// value below the diagonal. sign -1 mirrors skew families bitwise.
DenseMatrix fill_toeplitz(std::size_t n, const std::vector<double>& gen,
                          double diag, double mirror_sign) {
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Scalar{diag, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      const double v = gen[i - j - 1];
      a(i, j) = Scalar{v, 0.0};
      a(j, i) = Scalar{mirror_sign * v, 0.0};
    }
  }
  return a;
}

// Hankel fill from the s = m + n - 1 generator, s = 1..2n-1.
DenseMatrix fill_hankel(std::size_t n, const std::vector<double>& gen) {
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar{gen[i + j], 0.0};
  return a;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

DenseMatrix build(MatrixFamily family, std::size_t n, const FamilyParams& params) {
  check_common(n);
  const double nd = static_cast<double>(n);

  switch (family) {
    case MatrixFamily::Alternating: {
      std::vector<double> gen(n > 0 ? n - 1 : 0);
      for (std::size_t k = 1; k < n; ++k) gen[k - 1] = 1.0 / static_cast<double>(k);
      return fill_toeplitz(n, gen, 0.0, -1.0);
    }
    case MatrixFamily::PrimeScaled: {
      if (!is_prime(params.p))
        throw InvalidParameter("build: PrimeScaled needs a prime p");
      const double logp = std::log(static_cast<double>(params.p));
      std::vector<double> gen(n > 0 ? n - 1 : 0);
      for (std::size_t k = 1; k < n; ++k)
        gen[k - 1] = (1.0 / static_cast<double>(k)) / logp;
      return fill_toeplitz(n, gen, 0.0, -1.0);
    }
    case MatrixFamily::AlternatingQuant: {
      const double scale = std::sin(kPi / nd);
      std::vector<double> gen(n > 0 ? n - 1 : 0);
      for (std::size_t k = 1; k < n; ++k)
        gen[k - 1] = scale / std::sin(kPi * static_cast<double>(k) / nd);
      return fill_toeplitz(n, gen, 0.0, -1.0);
    }
    case MatrixFamily::OscCos: {
      check_theta(params.theta);
      std::vector<double> gen(n > 0 ? n - 1 : 0);
      for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        gen[k - 1] = std::cos(kd * params.theta) / kd;
      }
      return fill_toeplitz(n, gen, 0.0, -1.0);
    }
    case MatrixFamily::OscSin: {
      check_theta(params.theta);
      std::vector<double> gen(n > 0 ? n - 1 : 0);
      for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        gen[k - 1] = std::sin(kd * params.theta) / kd;
      }
      // sin((m-n)theta)/(m-n) is even in m-n, hence the symmetric mirror.
      return fill_toeplitz(n, gen, params.theta, 1.0);
    }
    case MatrixFamily::SymmetricHilbert: {
      std::vector<double> gen(2 * n - 1);
      for (std::size_t s = 1; s <= 2 * n - 1; ++s)
        gen[s - 1] = 1.0 / static_cast<double>(s);
      return fill_hankel(n, gen);
    }
    case MatrixFamily::SymmetricQuant: {
      const double scale = std::sin(kPi / nd);
      std::vector<double> gen(2 * n - 1, 0.0);
      for (std::size_t s = 1; s <= 2 * n - 1; ++s) {
        if (s % n == 0) continue;  // sine vanishes; entry stays zero
        gen[s - 1] = scale / std::sin(kPi * static_cast<double>(s) / nd);
      }
      return fill_hankel(n, gen);
    }
    case MatrixFamily::CosecQuant: {
      std::vector<double> gen(2 * n - 1, 0.0);
      for (std::size_t s = 1; s <= 2 * n - 1; ++s) {
        if (s % n == 0) continue;
        gen[s - 1] = 1.0 / std::sin(kPi * static_cast<double>(s) / nd);
      }
      return fill_hankel(n, gen);
    }
  }
  throw InvalidParameter("build: unknown family");
}

const char* family_token(MatrixFamily family) {
  switch (family) {
    case MatrixFamily::Alternating: return "alt";
    case MatrixFamily::AlternatingQuant: return "alt-quant";
    case MatrixFamily::OscCos: return "osc-cos";
    case MatrixFamily::OscSin: return "osc-sin";
    case MatrixFamily::SymmetricHilbert: return "hilbert";
    case MatrixFamily::SymmetricQuant: return "hilbert-quant";
    case MatrixFamily::CosecQuant: return "cosec-quant";
    case MatrixFamily::PrimeScaled: return "prime";
  }
  return "?";
}

bool family_from_token(const std::string& token, MatrixFamily& out) {
  static const MatrixFamily all[] = {
      MatrixFamily::Alternating,      MatrixFamily::AlternatingQuant,
      MatrixFamily::OscCos,           MatrixFamily::OscSin,
      MatrixFamily::SymmetricHilbert, MatrixFamily::SymmetricQuant,
      MatrixFamily::CosecQuant,       MatrixFamily::PrimeScaled,
  };
  for (MatrixFamily f : all) {
    if (token == family_token(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

bool family_uses_theta(MatrixFamily family) {
  return family == MatrixFamily::OscCos || family == MatrixFamily::OscSin;
}

bool family_uses_prime(MatrixFamily family) {
  return family == MatrixFamily::PrimeScaled;
}

StructureReport validate_structure(MatrixFamily family, const DenseMatrix& m,
                                   double tol) {
  const std::size_t n = m.size();
  const double scale = max_abs(m);
  const double bound = tol * (scale > 0.0 ? scale : 1.0);

  const bool skew = family == MatrixFamily::Alternating ||
                    family == MatrixFamily::AlternatingQuant ||
                    family == MatrixFamily::OscCos ||
                    family == MatrixFamily::PrimeScaled;
  const bool hankel = family == MatrixFamily::SymmetricHilbert ||
                      family == MatrixFamily::SymmetricQuant ||
                      family == MatrixFamily::CosecQuant;

  StructureReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).imag() != 0.0)
        throw StructureViolation("validate_structure: complex entry", i + 1, j + 1);

  if (skew) {
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(m(i, i)) > bound)
        throw StructureViolation("validate_structure: nonzero diagonal", i + 1, i + 1);
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(m(i, j).real() + m(j, i).real()) > bound)
          throw StructureViolation("validate_structure: not skew-symmetric", i + 1, j + 1);
    }
    rep.skew = true;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(m(i, j).real() - m(j, i).real()) > bound)
          throw StructureViolation("validate_structure: not symmetric", i + 1, j + 1);
    rep.symmetric = true;
  }

  if (hankel) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 1; j < n; ++j)
        if (std::abs(m(i, j).real() - m(i + 1, j - 1).real()) > bound)
          throw StructureViolation("validate_structure: not Hankel", i + 1, j + 1);
    rep.hankel = true;
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j)
        if (std::abs(m(i, j).real() - m(i + 1, j + 1).real()) > bound)
          throw StructureViolation("validate_structure: not Toeplitz", i + 1, j + 1);
    rep.toeplitz = true;
  }
  return rep;
}

}  // namespace hilspec
