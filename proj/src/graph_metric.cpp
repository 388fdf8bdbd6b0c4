#include "csnd/graph_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

namespace {

void bfs_row(const Graph& g, int src, std::vector<int>& dist) {
  dist.assign(g.size(), -1);
  std::vector<int> frontier{src}, next;
  dist[src] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (int u : frontier)
      for (const auto& nb : g.neighbors(u))
        if (dist[nb.to] < 0) {
          dist[nb.to] = depth;
          next.push_back(nb.to);
        }
    frontier.swap(next);
  }
}

void dijkstra_row(const Graph& g, int src, std::vector<double>& dist) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  dist.assign(g.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& nb : g.neighbors(u)) {
      double nd = d + nb.weight;
      if (nd < dist[nb.to]) {
        dist[nb.to] = nd;
        heap.emplace(nd, nb.to);
      }
    }
  }
}

KernelMatrix path_metric_impl(const Graph& g, bool parallel) {
  if (auto w = g.disconnected_witness())
    throw ValidationError("graph is disconnected: no path from '" + w->first +
                          "' to '" + w->second + "'");
  const int n = g.size();
  Eigen::MatrixXd d(n, n);
  const bool weighted = g.is_weighted();

#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (int src = 0; src < n; ++src) {
    if (weighted) {
      std::vector<double> row;
      dijkstra_row(g, src, row);
      for (int j = 0; j < n; ++j) d(src, j) = row[j];
    } else {
      std::vector<int> row;
      bfs_row(g, src, row);
      for (int j = 0; j < n; ++j) d(src, j) = row[j];
    }
  }
  return KernelMatrix(g.vertices(), std::move(d));
}

}  // namespace

KernelMatrix path_metric(const Graph& g) { return path_metric_impl(g, true); }

KernelMatrix path_metric_serial(const Graph& g) { return path_metric_impl(g, false); }

std::optional<GirthResult> girth(const Graph& g) {
  if (g.is_weighted())
    throw ValidationError("girth is defined here for unweighted graphs only");
  const int n = g.size();
  int best = std::numeric_limits<int>::max();
  int best_root = -1, best_u = -1, best_w = -1;

  // One BFS per root; a non-tree edge (u, w) closes a cycle through the
  // root of length dist(u) + dist(w) + 1. The minimum over all roots and
  // edges is the girth, attained when the root lies on a shortest cycle.
  std::vector<int> dist(n), parent(n), order;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    order.assign(1, root);
    dist[root] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
      int u = order[head];
      if (2 * dist[u] >= best) break;
      for (const auto& nb : g.neighbors(u)) {
        if (dist[nb.to] < 0) {
          dist[nb.to] = dist[u] + 1;
          parent[nb.to] = u;
          order.push_back(nb.to);
        } else if (nb.to != parent[u] && dist[nb.to] >= 0) {
          int len = dist[u] + dist[nb.to] + 1;
          if (len < best) {
            best = len;
            best_root = root;
            best_u = u;
            best_w = nb.to;
          }
        }
      }
    }
  }
  if (best_root < 0) return std::nullopt;

  // Reconstruct the witness from the optimal root: the two tree branches
  // meet only at the root, so the walk u..root..w plus the edge (w, u) is a
  // simple cycle of length `best`.
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(parent.begin(), parent.end(), -1);
  order.assign(1, best_root);
  dist[best_root] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (const auto& nb : g.neighbors(u))
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[u] + 1;
        parent[nb.to] = u;
        order.push_back(nb.to);
      }
  }
  std::vector<int> up;  // u .. root
  for (int x = best_u; x != -1; x = parent[x]) up.push_back(x);
  std::vector<int> down;  // root .. w
  for (int x = best_w; x != -1; x = parent[x]) down.push_back(x);
  std::reverse(down.begin(), down.end());

  GirthResult res;
  res.length = best;
  for (int x : up) res.cycle.push_back(g.vertex(x));
  for (size_t i = 1; i < down.size(); ++i) res.cycle.push_back(g.vertex(down[i]));
  if (static_cast<int>(res.cycle.size()) != best)
    throw std::logic_error("girth witness reconstruction failed");
  return res;
}

std::optional<CycleCertificate> even_cycle_certificate(const Graph& g) {
  if (auto w = g.disconnected_witness())
    throw ValidationError("graph is disconnected: no path from '" + w->first +
                          "' to '" + w->second + "'");
  auto gr = girth(g);
  if (!gr || gr->length % 2 != 0) return std::nullopt;

  const int m = gr->length / 2;
  CycleCertificate cert;
  cert.cycle_vertices = gr->cycle;
  cert.quad = {gr->cycle[0], gr->cycle[1], gr->cycle[m], gr->cycle[m + 1]};
  cert.arc_k = 1;
  cert.arc_n = m - 1;

  // A shortest cycle is isometrically embedded, so the quad distances are
  // forced; checked here because the certificate must be exact.
  KernelMatrix d = path_metric(g);
  int x[4];
  for (int i = 0; i < 4; ++i) x[i] = d.index_of(cert.quad[i]);
  auto expect = [&](int a, int b, double v) {
    if (d(x[a], x[b]) != v)
      throw std::logic_error("shortest even cycle is not isometric");
  };
  expect(0, 1, cert.arc_k);
  expect(2, 3, cert.arc_k);
  expect(0, 3, cert.arc_n);
  expect(1, 2, cert.arc_n);
  expect(0, 2, cert.arc_k + cert.arc_n);
  expect(1, 3, cert.arc_k + cert.arc_n);
  return cert;
}

std::optional<CycleCertificate> obstruction_quad(const KernelMatrix& k, double tol_abs) {
  const int n = k.size();
  auto close = [&](double a, double b) { return std::abs(a - b) <= tol_abs; };

  // Scan ordered quads (x1, x2, x3, x4) with x1 < x3 the first antipodal
  // pair; swapping x2 and x4 only swaps the arcs, so x2 < x4 as well.
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c)
      for (int b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        for (int e = b + 1; e < n; ++e) {
          if (e == a || e == c) continue;
          double arc_k = k(a, b);
          double arc_n = k(b, c);
          if (!(arc_k > 0) || !(arc_n > 0)) continue;
          if (!close(k(c, e), arc_k) || !close(k(a, e), arc_n)) continue;
          if (!close(k(a, c), arc_k + arc_n) || !close(k(b, e), arc_k + arc_n))
            continue;
          CycleCertificate cert;
          cert.quad = {k.labels()[a], k.labels()[b], k.labels()[c], k.labels()[e]};
          cert.arc_k = arc_k;
          cert.arc_n = arc_n;
          return cert;
        }
      }
  return std::nullopt;
}

std::vector<std::string> ball_labels(const Graph& g, const std::string& center,
                                     double radius) {
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  const int c = g.index_of(center);
  std::vector<std::string> out;
  if (g.is_weighted()) {
    std::vector<double> dist;
    dijkstra_row(g, c, dist);
    for (int i = 0; i < g.size(); ++i)
      if (dist[i] <= radius) out.push_back(g.vertex(i));
  } else {
    std::vector<int> dist;
    bfs_row(g, c, dist);
    for (int i = 0; i < g.size(); ++i)
      if (dist[i] >= 0 && dist[i] <= radius) out.push_back(g.vertex(i));
  }
  return out;
}

}  // namespace csnd
