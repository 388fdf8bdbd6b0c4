#include "csnd/classify.hpp"

#include <cmath>
#include <utility>

#include "csnd/errors.hpp"
#include "csnd/exact_det.hpp"

namespace csnd {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "not-applicable";
  }
}

namespace {

// Deterministic witness normalization: max-norm 1, largest-magnitude
// component positive.
Eigen::VectorXd normalize_witness(Eigen::VectorXd v) {
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  double top = v(arg);
  if (top != 0) v /= top;
  return v;
}

// Lift a vector on the zero-sum basis u_i = delta_i - delta_n back to
// coefficients on the points: lambda = (w, -sum w).
Eigen::VectorXd lift_zero_sum(const Eigen::VectorXd& w) {
  Eigen::VectorXd lambda(w.size() + 1);
  lambda.head(w.size()) = w;
  lambda(w.size()) = -w.sum();
  return lambda;
}

}  // namespace

Eigen::MatrixXd zero_sum_reduction(const KernelMatrix& k) {
  const int n = k.size();
  if (n < 2) throw ValidationError("zero-sum reduction needs at least two points");
  const Eigen::MatrixXd& K = k.entries();
  Eigen::MatrixXd m(n - 1, n - 1);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      m(i, j) = K(i, j) - K(i, n - 1) - K(n - 1, j) + K(n - 1, n - 1);
  return m;
}

ClassReport classify(const KernelMatrix& k, TolerancePolicy tol) {
  if (tol.rel_eps < 0) throw ValidationError("tolerance must be nonnegative");
  const int n = k.size();
  ClassReport rep;
  rep.tolerance_used = tol.rel_eps;
  rep.scale = k.scale();
  const double thr = tol.rel_eps * rep.scale;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_k(k.entries());
  if (es_k.info() != Eigen::Success)
    throw NumericalError("eigendecomposition of the kernel failed");
  rep.kernel_spectrum.assign(es_k.eigenvalues().data(),
                             es_k.eigenvalues().data() + n);
  const double min_eig = rep.kernel_spectrum.front();
  rep.pd = min_eig >= -thr ? Verdict::holds : Verdict::fails;
  rep.spd = min_eig > thr ? Verdict::holds : Verdict::fails;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_m;
  if (n == 1) {
    // A single point has no nonzero zero-sum vector.
    rep.cnd = Verdict::holds;
    rep.csnd = Verdict::holds;
  } else {
    es_m.compute(zero_sum_reduction(k));
    if (es_m.info() != Eigen::Success)
      throw NumericalError("eigendecomposition of the zero-sum reduction failed");
    const int r = n - 1;
    rep.reduced_spectrum.assign(es_m.eigenvalues().data(),
                                es_m.eigenvalues().data() + r);
    const double max_red = rep.reduced_spectrum.back();
    rep.cnd = max_red <= thr ? Verdict::holds : Verdict::fails;
    rep.csnd = max_red < -thr ? Verdict::holds : Verdict::fails;
  }

  if (rep.cnd == Verdict::fails || rep.csnd == Verdict::fails) {
    rep.certificate_for = rep.cnd == Verdict::fails ? "cnd" : "csnd";
    rep.certificate = normalize_witness(
        lift_zero_sum(es_m.eigenvectors().col(n - 2)));
  } else if (rep.pd == Verdict::fails || rep.spd == Verdict::fails) {
    rep.certificate_for = rep.pd == Verdict::fails ? "pd" : "spd";
    rep.certificate = normalize_witness(es_k.eigenvectors().col(0));
  }
  return rep;
}

InvertibilityReport csnd_by_invertibility(const KernelMatrix& k, TolerancePolicy tol) {
  if (k.size() < 2)
    throw HypothesisError(
        "invertibility route needs at least two points "
        "(a single point is vacuously CSND but has determinant 0)");
  if (!k.is_schoenberg())
    throw HypothesisError(
        "kernel is not a Schoenberg kernel (zero diagonal, nonnegative entries)");
  ClassReport rep = classify(k, tol);
  if (rep.cnd != Verdict::holds)
    throw HypothesisError("kernel is not conditionally negative definite");

  // The verdict rests on the zero-sum reduction M, not on K itself: under the
  // CND hypothesis M is negative semidefinite and K is CSND exactly when M is
  // nonsingular.  det(K) != 0 is necessary for CSND but not sufficient (e.g.
  // the squared-distance kernel of three collinear points [[0,1,4],[1,0,1],
  // [4,1,0]] has determinant 8 yet is annihilated by (1,-2,1)), so the
  // reported determinant of K is informational while M decides.
  InvertibilityReport out;
  if (k.is_integer()) {
    ExactDeterminant det_k = exact_integer_determinant(k.entries());
    ExactDeterminant det_m = exact_integer_determinant(zero_sum_reduction(k));
    out.csnd = !det_m.is_zero;
    out.exact = true;
    out.determinant = det_k.approx;
    out.determinant_exact = det_k.decimal;
  } else {
    const double thr = tol.rel_eps * k.scale();
    double min_abs_reduced = std::abs(rep.reduced_spectrum.front());
    for (double mu : rep.reduced_spectrum)
      min_abs_reduced = std::min(min_abs_reduced, std::abs(mu));
    double det = 1.0;
    for (double mu : rep.kernel_spectrum) det *= mu;
    out.csnd = min_abs_reduced > thr;
    out.determinant = det;
  }
  return out;
}

CndDecomposition cnd_decompose(const KernelMatrix& k, const std::string& base,
                               TolerancePolicy tol) {
  const int b = k.index_of(base);
  ClassReport rep = classify(k, tol);
  if (rep.cnd != Verdict::holds)
    throw HypothesisError("kernel is not conditionally negative definite");

  const int n = k.size();
  const Eigen::MatrixXd& K = k.entries();
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) {
    f(i) = K(i, b);
    for (int j = 0; j < n; ++j) a(i, j) = K(i, b) + K(b, j) - K(i, j);
  }
  return CndDecomposition{KernelMatrix(k.labels(), std::move(a)), std::move(f), base};
}

KernelMatrix markov_sum_kernel(const KernelMatrix& k1, const std::string& e1,
                               const KernelMatrix& k2, const std::string& e2) {
  const int b1 = k1.index_of(e1);
  const int b2 = k2.index_of(e2);
  const int n1 = k1.size();
  const int n2 = k2.size();

  std::vector<std::string> labels = k1.labels();
  std::vector<int> idx2;  // second-factor indices in output order
  for (int j = 0; j < n2; ++j) {
    if (j == b2) continue;
    if (k1.has_label(k2.labels()[j]))
      throw ValidationError("label sets overlap beyond the basepoints: '" +
                            k2.labels()[j] + "'");
    labels.push_back(k2.labels()[j]);
    idx2.push_back(j);
  }

  const int n = n1 + n2 - 1;
  Eigen::MatrixXd m(n, n);
  m.topLeftCorner(n1, n1) = k1.entries();
  for (int p = 0; p < n2 - 1; ++p) {
    for (int i = 0; i < n1; ++i) {
      double cross = k1(i, b1) + k2(b2, idx2[p]);
      m(i, n1 + p) = cross;
      m(n1 + p, i) = cross;
    }
    for (int q = 0; q < n2 - 1; ++q)
      m(n1 + p, n1 + q) = k2(idx2[p], idx2[q]);
  }
  return KernelMatrix(std::move(labels), std::move(m));
}

KernelMatrix schur_exponential(const KernelMatrix& k, double s) {
  if (!(s > 0)) throw ValidationError("exponent scale s must be positive");
  return KernelMatrix(k.labels(), (-s * k.entries().array()).exp().matrix());
}

}  // namespace csnd
