#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "csnd/classify.hpp"
#include "csnd/embedding.hpp"
#include "csnd/graph.hpp"
#include "csnd/groups.hpp"
#include "csnd/kernel_matrix.hpp"
#include "csnd/point_config.hpp"

namespace csnd {

/// All writers round floating-point values to 12 significant digits and
/// emit keys in sorted order, so equal inputs produce byte-identical
/// output across runs and platforms.
double round_sig12(double v);

/// Kernels: {"labels": [...], "matrix": [[...], ...]}.
KernelMatrix kernel_from_json(const nlohmann::json& j);
nlohmann::json kernel_to_json(const KernelMatrix& k);

/// CSV with a header row: label,<l1>,...,<ln>; one labeled row per point.
KernelMatrix kernel_from_csv(std::istream& in);
std::string kernel_to_csv(const KernelMatrix& k);

/// Point configurations: {"labels": [...], "coords": [[...], ...]}.
PointConfig points_from_json(const nlohmann::json& j);
nlohmann::json points_to_json(const PointConfig& p);

/// Edge lists: one "u v [weight]" line per edge, '#' starts a comment,
/// "!base u" marks the basepoint, "!vertex u" declares an isolated vertex.
/// Labels are whitespace-free.
Graph graph_from_edge_list(std::istream& in);
std::string graph_to_edge_list(const Graph& g);

/// Presentations: {"kind": "coxeter"|"artin", "generators": [...],
/// "m": [[...]]} with "inf" (or null) for infinite coefficients; the
/// diagonal is ignored.
GroupPresentation presentation_from_json(const nlohmann::json& j);

/// Circle samples: {"angles": [...], "L": circumference}.
struct CircleSample {
  std::vector<double> angles;
  double circumference = 0.0;
};
CircleSample circle_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ClassReport& r);
nlohmann::json invertibility_to_json(const InvertibilityReport& r);
nlohmann::json decomposition_to_json(const SpdShiftDecomposition& d);

/// Parses a file as JSON; IO or parse failures raise ValidationError.
nlohmann::json load_json_file(const std::string& path);
/// Loads a kernel from a .json or .csv file (by extension).
KernelMatrix load_kernel_file(const std::string& path);
Graph load_graph_file(const std::string& path);

}  // namespace csnd
