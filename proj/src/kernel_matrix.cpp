#include "csnd/kernel_matrix.hpp"

#include <cctype>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "csnd/errors.hpp"

namespace csnd {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw ValidationError("kernel needs at least one point");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ValidationError("empty label");
    for (unsigned char c : l)
      if (std::isspace(c))
        throw ValidationError("label contains whitespace: '" + l + "'");
    if (!seen.insert(l).second)
      throw ValidationError("duplicate label: '" + l + "'");
  }
}

bool all_integral(const Eigen::MatrixXd& m) {
  constexpr double kMaxExact = 9007199254740992.0;  // 2^53
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double v = m(i, j);
      if (!std::isfinite(v) || std::abs(v) > kMaxExact || std::nearbyint(v) != v)
        return false;
    }
  return true;
}

}  // namespace

KernelMatrix::KernelMatrix(std::vector<std::string> labels, Eigen::MatrixXd entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  check_labels(labels_);
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (entries_.rows() != n || entries_.cols() != n)
    throw ValidationError("matrix shape does not match the label count");
  if (!entries_.allFinite())
    throw ValidationError("matrix has non-finite entries");

  double s = entries_.cwiseAbs().maxCoeff();
  double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * (s > 0 ? s : 1.0))
    throw ValidationError("matrix is not symmetric");
  if (asym > 0) entries_ = ((entries_ + entries_.transpose()) / 2).eval();

  integer_ = all_integral(entries_);
}

int KernelMatrix::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw ValidationError("unknown label: '" + label + "'");
}

bool KernelMatrix::has_label(const std::string& label) const {
  for (const auto& l : labels_)
    if (l == label) return true;
  return false;
}

bool KernelMatrix::is_schoenberg() const {
  for (int i = 0; i < size(); ++i) {
    if (entries_(i, i) != 0.0) return false;
    for (int j = 0; j < size(); ++j)
      if (entries_(i, j) < 0.0) return false;
  }
  return true;
}

double KernelMatrix::scale() const {
  double s = entries_.cwiseAbs().maxCoeff();
  return s > 0 ? s : 1.0;
}

KernelMatrix KernelMatrix::restrict_to(const std::vector<std::string>& subset) const {
  const auto m = static_cast<int>(subset.size());
  Eigen::MatrixXd sub(m, m);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = index_of(subset[i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sub(i, j) = entries_(idx[i], idx[j]);
  return KernelMatrix(subset, std::move(sub));
}

KernelMatrix KernelMatrix::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size())
    throw ValidationError("label count does not match the kernel size");
  return KernelMatrix(std::move(labels), entries_);
}

}  // namespace csnd
