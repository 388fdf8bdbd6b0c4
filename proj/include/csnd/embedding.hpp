#pragma once

#include <Eigen/Dense>

#include <string>

#include "csnd/classify.hpp"
#include "csnd/kernel_matrix.hpp"
#include "csnd/point_config.hpp"
#include "csnd/tolerance.hpp"

namespace csnd {

/// Quadratic embedding of a CND Schoenberg kernel: points alpha(x) with
/// ||alpha(x) - alpha(y)||^2 = K(x,y) for all x, y.
///
/// The pivot label (default: the last one) is placed at the origin and the
/// Gram matrix G[i][j] = (K[i][p] + K[j][p] - K[i][j]) / 2 is factored
/// through a symmetric eigendecomposition, keeping eigenvalues above
/// rel_eps * scale(K). The dimension is rank(G) <= n - 1, with equality iff
/// K is CSND, and then the image is affinely independent.
PointConfig quadratic_embed(const KernelMatrix& k, TolerancePolicy tol = {});
PointConfig quadratic_embed(const KernelMatrix& k, const std::string& pivot,
                            TolerancePolicy tol = {});

/// A sphere through a finite point set whose center lies in the affine span
/// of the points.
struct Sphere {
  Eigen::VectorXd center;
  double radius = 0.0;
};

/// The unique sphere with center in the affine span passing through every
/// point of an affinely independent configuration.
Sphere circumsphere(const PointConfig& p, double rel_eps = 1e-9);

/// Decomposition K(x,y) = -A(x,y) + c of a CSND Schoenberg kernel, with A
/// strictly positive definite and c = A(x,x) > 0 constant: embed K, pad the
/// coordinates to dimension n, translate the circumcenter to the origin,
/// and append one constant coordinate t = radius (t = 1 when the radius is
/// 0, i.e. n = 1). Then A = 2<a(x)+v, a(y)+v> and c = 2(radius^2 + t^2).
struct SpdShiftDecomposition {
  KernelMatrix spd_part;  // A
  double shift = 0.0;     // c
};
SpdShiftDecomposition spd_shift_decompose(const KernelMatrix& k,
                                          TolerancePolicy tol = {});

/// Sign-vector embedding of the odd cycle C_{2n+1}, n >= 1: each vertex is
/// sent to a +-1 vector in dimension 2n+1 (vertex k, 1-based, to the sign
/// pattern of {1..2k} and vertex n+k to the opposite pattern of {1..2k-1}),
/// scaled so that kernel_of_config returns exactly the cycle path metric.
/// The scaled vectors are linearly independent, so odd cycles are CSND.
/// The scale is verified on all pairs in exact rational arithmetic.
PointConfig odd_cycle_embedding(int n);

}  // namespace csnd
