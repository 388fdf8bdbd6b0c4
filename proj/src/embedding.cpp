#include "csnd/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

namespace {

PointConfig embed_at(const KernelMatrix& k, int pivot, TolerancePolicy tol) {
  if (!k.is_schoenberg())
    throw HypothesisError(
        "kernel is not a Schoenberg kernel (zero diagonal, nonnegative entries)");
  ClassReport rep = classify(k, tol);
  if (rep.cnd != Verdict::holds)
    throw HypothesisError("kernel is not conditionally negative definite");

  const int n = k.size();
  const double thr = tol.rel_eps * k.scale();

  // Gram matrix of the would-be image with alpha(pivot) at the origin.
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = 0.5 * (k(i, pivot) + k(j, pivot) - k(i, j));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  if (es.info() != Eigen::Success)
    throw NumericalError("eigendecomposition of the Gram matrix failed");
  if (es.eigenvalues()(0) < -thr)
    throw NumericalError("Gram matrix has a negative eigenvalue beyond tolerance");

  std::vector<int> kept;  // descending eigenvalue order
  for (int i = n - 1; i >= 0; --i)
    if (es.eigenvalues()(i) > thr) kept.push_back(i);

  // A CND kernel on n points embeds in dimension at most n - 1; use one
  // zero column for the degenerate single-point or all-zero case.
  const int d = std::max<int>(1, static_cast<int>(kept.size()));
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n, d);
  for (size_t c = 0; c < kept.size(); ++c)
    coords.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(kept[c]) * std::sqrt(es.eigenvalues()(kept[c]));
  return PointConfig(k.labels(), std::move(coords));
}

}  // namespace

PointConfig quadratic_embed(const KernelMatrix& k, TolerancePolicy tol) {
  return embed_at(k, k.size() - 1, tol);
}

PointConfig quadratic_embed(const KernelMatrix& k, const std::string& pivot,
                            TolerancePolicy tol) {
  return embed_at(k, k.index_of(pivot), tol);
}

Sphere circumsphere(const PointConfig& p, double rel_eps) {
  if (!is_affinely_independent(p, rel_eps))
    throw HypothesisError(
        "points are affinely dependent; no unique circumscribed sphere");
  const int n = p.size();
  Sphere s;
  if (n == 1) {
    s.center = p.coords().row(0).transpose();
    s.radius = 0.0;
    return s;
  }

  // Center alpha_0 + B y with B the difference vectors from alpha_0;
  // equal distances to alpha_0 give 2 B^T B y = (|b_i|^2)_i.
  Eigen::MatrixXd b(n - 1, p.dim());
  Eigen::VectorXd rhs(n - 1);
  for (int i = 1; i < n; ++i) {
    b.row(i - 1) = p.coords().row(i) - p.coords().row(0);
    rhs(i - 1) = b.row(i - 1).squaredNorm();
  }
  Eigen::VectorXd y = (2.0 * b * b.transpose()).ldlt().solve(rhs);
  s.center = p.coords().row(0).transpose() + b.transpose() * y;
  s.radius = (p.coords().row(0).transpose() - s.center).norm();
  return s;
}

SpdShiftDecomposition spd_shift_decompose(const KernelMatrix& k, TolerancePolicy tol) {
  ClassReport rep = classify(k, tol);
  if (!k.is_schoenberg())
    throw HypothesisError(
        "kernel is not a Schoenberg kernel (zero diagonal, nonnegative entries)");
  if (rep.csnd != Verdict::holds)
    throw HypothesisError("kernel is not strictly negative definite on zero sums");

  const int n = k.size();
  PointConfig emb = quadratic_embed(k, tol);
  Sphere sph = circumsphere(emb, tol.rel_eps);

  // Pad to dimension n, center the circumsphere at the origin and append
  // one constant coordinate t; then 2<x, y> differs from -K by the
  // constant 2(r^2 + t^2) on the sphere.
  const double t = sph.radius > 0 ? sph.radius : 1.0;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n + 1);
  x.leftCols(emb.dim()) = emb.coords().rowwise() - sph.center.transpose();
  x.col(n).setConstant(t);

  Eigen::MatrixXd a = 2.0 * (x * x.transpose());
  const double c = 2.0 * (sph.radius * sph.radius + t * t);
  return SpdShiftDecomposition{KernelMatrix(k.labels(), std::move(a)), c};
}

PointConfig odd_cycle_embedding(int n) {
  if (n < 1) throw ValidationError("odd cycle embedding needs n >= 1");
  const int big_n = 2 * n + 1;

  // Sign patterns: vertex k (1-based) flips the first 2k coordinates,
  // vertex n+k is the complement of flipping the first 2k-1.
  std::vector<std::vector<int>> sign(big_n, std::vector<int>(big_n, 1));
  auto flip_prefix = [&](std::vector<int>& row, int len, bool complement) {
    for (int i = 0; i < big_n; ++i) {
      bool in_prefix = i < len;
      bool neg = complement ? !in_prefix : in_prefix;
      row[i] = neg ? -1 : 1;
    }
  };
  for (int k = 1; k <= n; ++k) flip_prefix(sign[k - 1], 2 * k, false);
  for (int k = 1; k <= n + 1; ++k) flip_prefix(sign[n + k - 1], 2 * k - 1, true);

  // Vertices 1..2n+1 are consecutive around the cycle. Verify in exact
  // integers that squared sign-vector distances are a constant multiple of
  // the cycle metric: |difference set| = 2 * d for every pair.
  auto cyc_dist = [&](int i, int j) {
    int d = std::abs(i - j);
    return std::min(d, big_n - d);
  };
  for (int i = 0; i < big_n; ++i)
    for (int j = i + 1; j < big_n; ++j) {
      std::int64_t diff = 0;
      for (int c = 0; c < big_n; ++c)
        if (sign[i][c] != sign[j][c]) ++diff;
      if (diff != 2 * static_cast<std::int64_t>(cyc_dist(i, j)))
        throw NumericalError("odd cycle sign embedding failed verification");
    }

  // ||tau_i - tau_j||^2 = 4 |difference set| = 8 d, so scaling by
  // 1/(2*sqrt(2)) reproduces the metric.
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  Eigen::MatrixXd coords(big_n, big_n);
  std::vector<std::string> labels(big_n);
  for (int v = 0; v < big_n; ++v) {
    labels[v] = std::to_string(v);
    for (int c = 0; c < big_n; ++c) coords(v, c) = s * sign[v][c];
  }
  return PointConfig(std::move(labels), std::move(coords));
}

}  // namespace csnd
