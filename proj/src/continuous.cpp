#include "csnd/continuous.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"
#include "csnd/graph_metric.hpp"

namespace csnd {

KernelMatrix euclidean_kernel(const PointConfig& p) {
  const int n = p.size();
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      double d = (p.coords().row(i) - p.coords().row(j)).norm();
      k(i, j) = d;
      k(j, i) = d;
    }
  }
  return KernelMatrix(p.labels(), std::move(k));
}

KernelMatrix weighted_tree_kernel(const Graph& tree) {
  if (tree.size() < 1) throw ValidationError("tree is empty");
  if (auto w = tree.disconnected_witness())
    throw ValidationError("graph is disconnected: no path from '" + w->first +
                          "' to '" + w->second + "'");
  if (tree.edge_count() != tree.size() - 1)
    throw ValidationError("graph has a cycle; not a tree");
  return path_metric(tree);
}

KernelMatrix circle_kernel(const std::vector<double>& angles, double circumference) {
  if (!(circumference > 0)) throw ValidationError("circumference must be positive");
  const int n = static_cast<int>(angles.size());
  if (n < 1) throw ValidationError("circle sample is empty");
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < n; ++i) {
    if (!(angles[i] >= 0.0) || !(angles[i] < two_pi))
      throw ValidationError("angles must lie in [0, 2*pi)");
    if (i > 0 && !(angles[i] > angles[i - 1]))
      throw ValidationError("angles must be strictly increasing");
  }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      double delta = angles[j] - angles[i];
      double arc = std::min(delta, two_pi - delta);
      double d = arc / two_pi * circumference;
      k(i, j) = d;
      k(j, i) = d;
    }
  }
  return KernelMatrix(std::move(labels), std::move(k));
}

namespace {

// Deterministic pairwise reduction: the summation tree depends only on the
// element count, so serial and parallel runs return identical bits.
double pairwise_sum(const double* v, size_t count) {
  if (count == 0) return 0.0;
  if (count == 1) return v[0];
  size_t half = count / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, count - half);
}

FourierCheck fourier_impl(double t, double xi, bool parallel) {
  if (!(t > 0)) throw ValidationError("decay parameter t must be positive");
  if (!std::isfinite(xi)) throw ValidationError("frequency must be finite");
  const double pi = std::numbers::pi;

  // Cut where exp(-2*pi*t*x) reaches 1e-12: the dropped tail is bounded by
  // 1e-12 / (2*pi*t), far below the 1e-6 acceptance tolerance.
  const double x_max = std::log(1e12) / (2.0 * pi * t);
  const double width = std::min(1.0, 1.0 / std::max(1.0e-12, std::abs(xi)));
  const auto panels = static_cast<size_t>(std::ceil(x_max / width));

  auto integrand = [t, xi, pi](double x) {
    return std::exp(-2.0 * pi * t * x) * std::cos(2.0 * pi * xi * x);
  };

  std::vector<double> partial(panels);
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < static_cast<long long>(panels); ++i) {
    double a = static_cast<double>(i) * width;
    double b = std::min(x_max, a + width);
    partial[static_cast<size_t>(i)] =
        boost::math::quadrature::gauss<double, 16>::integrate(integrand, a, b);
  }

  FourierCheck out;
  out.lhs = 2.0 * pairwise_sum(partial.data(), partial.size());
  out.rhs = t / (pi * (t * t + xi * xi));
  out.abs_error = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace

FourierCheck fourier_identity_check(double t, double xi) {
  return fourier_impl(t, xi, true);
}

FourierCheck fourier_identity_check_serial(double t, double xi) {
  return fourier_impl(t, xi, false);
}

}  // namespace csnd
