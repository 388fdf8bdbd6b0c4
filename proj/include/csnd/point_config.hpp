#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "csnd/kernel_matrix.hpp"

namespace csnd {

/// A finite labeled list of points in d-dimensional real space. Row i of
/// the coordinate matrix is the position of point i.
class PointConfig {
 public:
  PointConfig(std::vector<std::string> labels, Eigen::MatrixXd coords);

  int size() const { return static_cast<int>(labels_.size()); }
  int dim() const { return static_cast<int>(coords_.cols()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::MatrixXd& coords() const { return coords_; }
  Eigen::RowVectorXd point(int i) const { return coords_.row(i); }
  int index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd coords_;
};

/// Kernel of squared Euclidean distances between the points. Always a CND
/// Schoenberg kernel; integer coordinates give an integer kernel.
KernelMatrix kernel_of_config(const PointConfig& p);

/// Dimension of the affine span: the rank of the difference vectors from
/// the first point, counted by singular values above rel_eps * sigma_max.
/// Invariant under translation and under which point is taken as base.
int affine_rank(const PointConfig& p, double rel_eps = 1e-9);

/// True iff affine_rank == size - 1, i.e. no point lies in the affine span
/// of the others; equivalently a unique circumscribed sphere with center in
/// the affine span exists.
bool is_affinely_independent(const PointConfig& p, double rel_eps = 1e-9);

}  // namespace csnd
