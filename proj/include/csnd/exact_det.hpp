#pragma once

#include <Eigen/Dense>

#include <string>

namespace csnd {

/// Exact determinant of an integer matrix.
struct ExactDeterminant {
  bool is_zero = false;
  std::string decimal;  // exact base-10 value, e.g. "-50"
  double approx = 0.0;  // nearest double (may round to +-inf for huge values)
};

/// Fraction-free Bareiss elimination over the integers.
///
/// Entries must be exactly integral. The computation runs in 64-bit
/// arithmetic and restarts in arbitrary precision as soon as any
/// intermediate product would overflow, so the result is exact for every
/// input size.
ExactDeterminant exact_integer_determinant(const Eigen::MatrixXd& m);

}  // namespace csnd
