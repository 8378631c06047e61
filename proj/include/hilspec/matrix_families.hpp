#pragma once

#include <cstdint>
#include <string>

#include "hilspec/dense_matrix.hpp"

namespace hilspec {

enum class MatrixFamily {
  Alternating,       // 1/(m-n), zero diagonal
  AlternatingQuant,  // sin(pi/n)/sin(pi(m-n)/n), zero diagonal
  OscCos,            // cos((m-n)theta)/(m-n), zero diagonal
  OscSin,            // sin((m-n)theta)/(m-n), theta on the diagonal
  SymmetricHilbert,  // 1/(m+n-1)
  SymmetricQuant,    // sin(pi/n)/sin(pi(m+n-1)/n), zero where the sine vanishes
  CosecQuant,        // 1/sin(pi(m+n-1)/n), zero where the sine vanishes
  PrimeScaled,       // Alternating(n)/log p
};

struct FamilyParams {
  double theta = 0.0;  // OscCos, OscSin; must lie in [0, pi/2]
  std::uint64_t p = 2; // PrimeScaled; must be prime
};

// All builders accept n >= 1 and produce real entries. Indices m, n in
// the comments above run 1..n.
DenseMatrix build(MatrixFamily family, std::size_t n,
                  const FamilyParams& params = {});

const char* family_token(MatrixFamily family);
bool family_from_token(const std::string& token, MatrixFamily& out);
bool family_uses_theta(MatrixFamily family);
bool family_uses_prime(MatrixFamily family);

struct StructureReport {
  bool skew = false;       // a_mn = -a_nm with zero diagonal
  bool symmetric = false;  // a_mn = a_nm
  bool toeplitz = false;   // entries depend on m-n only
  bool hankel = false;     // entries depend on m+n only
};

// Confirms the algebraic shape the family promises and reports which
// properties were checked. Throws StructureViolation carrying the first
// offending 1-based index pair.
StructureReport validate_structure(MatrixFamily family, const DenseMatrix& m,
                                   double tol = 1e-13);

bool is_prime(std::uint64_t p);

}  // namespace hilspec
