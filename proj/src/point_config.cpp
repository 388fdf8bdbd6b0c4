#include "csnd/point_config.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

#include "csnd/errors.hpp"

namespace csnd {

PointConfig::PointConfig(std::vector<std::string> labels, Eigen::MatrixXd coords)
    : labels_(std::move(labels)), coords_(std::move(coords)) {
  if (labels_.empty()) throw ValidationError("point configuration is empty");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("empty label");
    for (unsigned char c : l)
      if (std::isspace(c))
        throw ValidationError("label contains whitespace: '" + l + "'");
    if (!seen.insert(l).second)
      throw ValidationError("duplicate label: '" + l + "'");
  }
  if (coords_.rows() != static_cast<Eigen::Index>(labels_.size()))
    throw ValidationError("coordinate row count does not match the label count");
  if (coords_.cols() < 1)
    throw ValidationError("points need at least one coordinate");
  if (!coords_.allFinite())
    throw ValidationError("coordinates have non-finite entries");
}

int PointConfig::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw ValidationError("unknown label: '" + label + "'");
}

KernelMatrix kernel_of_config(const PointConfig& p) {
  const int n = p.size();
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      double d2 = (p.coords().row(i) - p.coords().row(j)).squaredNorm();
      k(i, j) = d2;
      k(j, i) = d2;
    }
  }
  return KernelMatrix(p.labels(), std::move(k));
}

int affine_rank(const PointConfig& p, double rel_eps) {
  const int n = p.size();
  if (n == 1) return 0;
  Eigen::MatrixXd diffs(n - 1, p.dim());
  for (int i = 1; i < n; ++i)
    diffs.row(i - 1) = p.coords().row(i) - p.coords().row(0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_eps * sv(0)) ++rank;
  return rank;
}

bool is_affinely_independent(const PointConfig& p, double rel_eps) {
  return affine_rank(p, rel_eps) == p.size() - 1;
}

}  // namespace csnd
