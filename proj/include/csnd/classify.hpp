#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "csnd/kernel_matrix.hpp"
#include "csnd/tolerance.hpp"

namespace csnd {

enum class Verdict { holds, fails, not_applicable };

const char* to_string(Verdict v);

/// Verdicts for the four definiteness classes of a symmetric kernel,
/// together with the spectra that decided them and a witness vector for the
/// strongest failed class.
///
/// PD:   sum l_i l_j K(x_i,x_j) >= 0 for all coefficient vectors
/// SPD:  ... > 0 for all nonzero coefficient vectors
/// CND:  ... <= 0 for all coefficient vectors summing to 0
/// CSND: ... < 0 for all nonzero coefficient vectors summing to 0
struct ClassReport {
  Verdict pd = Verdict::not_applicable;
  Verdict spd = Verdict::not_applicable;
  Verdict cnd = Verdict::not_applicable;
  Verdict csnd = Verdict::not_applicable;

  /// Eigenvalues of K, ascending.
  std::vector<double> kernel_spectrum;
  /// Eigenvalues of zero_sum_reduction(K), ascending; empty when n == 1.
  std::vector<double> reduced_spectrum;

  /// Witness coefficients for the first failed class in the order
  /// cnd, csnd, pd, spd, normalized to max-norm 1 with a deterministic sign.
  /// For cnd/csnd the witness sums to zero.
  std::optional<Eigen::VectorXd> certificate;
  std::string certificate_for;  // "pd" | "spd" | "cnd" | "csnd" | ""

  double tolerance_used = 0.0;  // rel_eps that was applied
  double scale = 1.0;           // scale(K) the thresholds refer to
};

/// Quadratic form of K restricted to the zero-sum subspace, written in the
/// basis u_i = delta_i - delta_n with the last label as pivot:
///   M[i][j] = K[i][j] - K[i][n] - K[n][j] + K[n][n],  0 <= i,j < n-1.
/// K is CND iff M is negative semidefinite and CSND iff M is negative
/// definite. Requires n >= 2.
Eigen::MatrixXd zero_sum_reduction(const KernelMatrix& k);

/// Decide all four classes from the spectrum of K and of its zero-sum
/// reduction. A single-point kernel is vacuously CND and CSND.
ClassReport classify(const KernelMatrix& k, TolerancePolicy tol = {});

/// CSND decision for CND Schoenberg kernels via matrix invertibility: such
/// a kernel is CSND iff its zero-sum reduction M is nonsingular, iff its
/// quadratic embedding is affinely independent. CSND implies det K != 0 but
/// not conversely (three collinear points give det K = 8 with a zero-sum
/// annihilator), so `determinant` reports det K while the verdict comes from
/// M. On integer kernels both determinants are computed exactly and the
/// verdict carries no tolerance. Requires n >= 2 (a single point is
/// vacuously CSND but has determinant 0).
struct InvertibilityReport {
  bool csnd = false;
  bool exact = false;             // integer Bareiss path taken
  double determinant = 0.0;       // approximate value
  std::string determinant_exact;  // decimal digits when exact, else empty
};
InvertibilityReport csnd_by_invertibility(const KernelMatrix& k,
                                          TolerancePolicy tol = {});

/// Split of a CND kernel as K(x,y) = -A(x,y) + F(x) + F(y) with A positive
/// definite, where F(x) = K(x, base) and
///   A(x,y) = K(x, base) + K(base, y) - K(x,y).
/// A vanishes on its base row/column; when K is CSND, A restricted to the
/// other points is strictly positive definite.
struct CndDecomposition {
  KernelMatrix a;
  Eigen::VectorXd f;
  std::string base;
};
CndDecomposition cnd_decompose(const KernelMatrix& k, const std::string& base,
                               TolerancePolicy tol = {});

/// Kernel of the wedge X1 v X2 of two pointed label sets: both factors keep
/// their kernels, and cross terms are K1(x, e1) + K2(e2, y). The glued
/// points e1 ~ e2 become one point labeled e1. Label sets must be disjoint
/// apart from the basepoints. Preserves the Schoenberg property, and for
/// Schoenberg kernels preserves CND and CSND.
KernelMatrix markov_sum_kernel(const KernelMatrix& k1, const std::string& e1,
                               const KernelMatrix& k2, const std::string& e2);

/// Entrywise exp(-s*K), s > 0. Maps CND kernels to PD kernels and, for
/// Schoenberg kernels, CSND to SPD.
KernelMatrix schur_exponential(const KernelMatrix& k, double s);

}  // namespace csnd
