#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace csnd {

/// A finite simple graph with string-labeled vertices, optional positive
/// edge weights (default 1) and an optional distinguished basepoint.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> vertices);

  /// Appends a vertex; duplicate labels raise ValidationError.
  int add_vertex(const std::string& label);
  /// Adds an undirected edge; self-loops, duplicate edges and nonpositive
  /// weights raise ValidationError.
  void add_edge(const std::string& u, const std::string& v, double weight = 1.0);
  void add_edge(int u, int v, double weight = 1.0);

  int size() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(int i) const { return vertices_[i]; }
  int index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const;
  bool has_edge(int u, int v) const;

  struct Neighbor {
    int to;
    double weight;
  };
  const std::vector<Neighbor>& neighbors(int i) const { return adj_[i]; }

  struct Edge {
    int u, v;  // u < v
    double weight;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  /// True iff some edge has weight != 1.
  bool is_weighted() const { return weighted_; }

  int degree(int i) const { return static_cast<int>(adj_[i].size()); }

  void set_basepoint(const std::string& label);
  const std::optional<std::string>& basepoint() const { return basepoint_; }

  /// Same graph with every label rewritten; collisions after renaming raise
  /// ValidationError. The basepoint is renamed along.
  Graph relabeled(const std::function<std::string(const std::string&)>& f) const;

  /// A pair (u, v) with v unreachable from u, when the graph is
  /// disconnected; nullopt when connected (or empty).
  std::optional<std::pair<std::string, std::string>> disconnected_witness() const;

 private:
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<Edge> edges_;
  bool weighted_ = false;
  std::optional<std::string> basepoint_;
};

/// K_n on labels "0".."n-1", n >= 1.
Graph complete_graph(int n);
/// C_n on labels "0".."n-1" in cycle order, n >= 3.
Graph cycle_graph(int n);
/// P_n, the path with n vertices, labels "0".."n-1", n >= 1.
Graph path_graph(int n);
/// Star with center "0" and n-1 leaves, n >= 1 vertices total.
Graph star_graph(int n);
/// Tree from a parent array: parents[i] is the parent index of vertex i, or
/// -1 for the unique root. Labels "0".."n-1".
Graph tree_from_parent_array(const std::vector<int>& parents);

}  // namespace csnd
