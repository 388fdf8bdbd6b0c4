#pragma once

#include <vector>

#include "csnd/graph.hpp"
#include "csnd/kernel_matrix.hpp"
#include "csnd/point_config.hpp"

namespace csnd {

/// Kernel of Euclidean distances (not squared) between the points. For
/// pairwise distinct points this kernel is CSND in every dimension.
KernelMatrix euclidean_kernel(const PointConfig& p);

/// Shortest-path distances on a positively weighted tree (connected and
/// acyclic; anything else raises ValidationError). Weighted tree metrics
/// are always CSND: a tree is an iterated wedge of two-point spaces.
KernelMatrix weighted_tree_kernel(const Graph& tree);

/// Arc-length distances between sample points on a circle of the given
/// circumference, at strictly increasing angles in [0, 2*pi). A sample
/// containing two antipodal pairs is never CSND; the four points follow
/// the antipodal-pair obstruction pattern with real arcs.
KernelMatrix circle_kernel(const std::vector<double>& angles,
                           double circumference);

/// Quadrature check of the one-dimensional identity
///   int_R exp(-2*pi*t*|x|) cos(2*pi*xi*x) dx = t / (pi * (t^2 + xi^2)),
/// t > 0: the Fourier transform of the exponential kernel is the (strictly
/// positive) Cauchy density. Composite Gauss-Legendre panels of width
/// min(1, 1/|xi|) cover [0, X] with X chosen so the dropped tail is below
/// 1e-9 relative; panel sums are reduced pairwise in a fixed order.
struct FourierCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;
};

/// Panels are evaluated in parallel (OpenMP); reduction order is fixed, so
/// the result is deterministic.
FourierCheck fourier_identity_check(double t, double xi);

/// Single-threaded reference with bit-identical output.
FourierCheck fourier_identity_check_serial(double t, double xi);

}  // namespace csnd
