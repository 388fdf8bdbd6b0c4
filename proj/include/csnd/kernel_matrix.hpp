#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace csnd {

/// A symmetric real kernel on a finite labeled point set.
///
/// Entries are symmetrized on construction; asymmetry beyond 1e-12 * scale
/// is rejected. Labels are nonempty, whitespace-free and pairwise distinct.
class KernelMatrix {
 public:
  KernelMatrix(std::vector<std::string> labels, Eigen::MatrixXd entries);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  /// Position of a label; unknown labels raise ValidationError.
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;

  /// True iff every entry is exactly an integer (and at most 2^53 in
  /// magnitude), which enables the exact arithmetic paths.
  bool is_integer() const { return integer_; }

  /// Zero diagonal and nonnegative off-diagonal entries. Every pseudometric
  /// is of this form.
  bool is_schoenberg() const;

  /// max |entry|, or 1 for the zero matrix; the reference scale for all
  /// relative tolerance decisions.
  double scale() const;

  /// Principal submatrix on the given labels, in the given order.
  KernelMatrix restrict_to(const std::vector<std::string>& subset) const;

  /// Same entries under new labels (sizes must match).
  KernelMatrix with_labels(std::vector<std::string> labels) const;

 private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd entries_;
  bool integer_ = false;
};

}  // namespace csnd
