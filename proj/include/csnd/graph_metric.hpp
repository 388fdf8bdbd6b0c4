#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "csnd/graph.hpp"
#include "csnd/kernel_matrix.hpp"

namespace csnd {

/// All-pairs shortest-path distances of a connected graph: one BFS per
/// source (Dijkstra when edge weights are present), sources fanned out over
/// OpenMP threads. Rows are independent, so the result is deterministic.
/// Unweighted graphs yield integer kernels. Disconnected input raises
/// ValidationError naming two unreachable vertices.
KernelMatrix path_metric(const Graph& g);

/// Single-threaded reference with identical output, kept for differential
/// tests and benchmarks.
KernelMatrix path_metric_serial(const Graph& g);

/// Length and vertex sequence of a shortest cycle; nullopt for forests.
/// The witness cycle is isometrically embedded: graph distances between its
/// vertices equal the distances along the cycle. Unweighted graphs only.
struct GirthResult {
  int length = 0;
  std::vector<std::string> cycle;
};
std::optional<GirthResult> girth(const Graph& g);

/// Four points x1..x4 of a metric whose mutual distances follow the
/// two-antipodal-pairs pattern
///   [[0, k, n+k, n], [k, 0, n, n+k], [n+k, n, 0, k], [n, n+k, k, 0]]
/// with arcs k, n > 0. The coefficients (1,-1,1,-1) are annihilated by this
/// matrix, so the quadratic form vanishes on them and the metric is not
/// CSND (and, since the certificate is exact, no tolerance is involved).
struct CycleCertificate {
  std::vector<std::string> cycle_vertices;  // shortest even cycle, if any
  std::array<std::string, 4> quad;          // x1, x2, x3, x4
  std::array<int, 4> lambda{1, -1, 1, -1};
  double arc_k = 0.0;
  double arc_n = 0.0;
};

/// For a connected unweighted graph of even girth 2m: the quad at positions
/// (0, 1, m, m+1) along a shortest cycle, with arcs k = 1 and n = m - 1.
/// nullopt when the girth is odd or infinite.
std::optional<CycleCertificate> even_cycle_certificate(const Graph& g);

/// Searches a kernel for four labels matching the antipodal-pair pattern,
/// in label order; entries match exactly when tol_abs == 0. cycle_vertices
/// is left empty. nullopt when no quad matches.
std::optional<CycleCertificate> obstruction_quad(const KernelMatrix& k,
                                                 double tol_abs = 0.0);

/// Labels whose path-metric distance from the center is at most radius;
/// the safe interior of a ball of radius R is ball_labels(g, base, R/2).
std::vector<std::string> ball_labels(const Graph& g, const std::string& center,
                                     double radius);

}  // namespace csnd
