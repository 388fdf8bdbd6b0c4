#include "csnd/graph.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

namespace {

void check_label(const std::string& label) {
  if (label.empty()) throw ValidationError("empty vertex label");
  for (unsigned char c : label)
    if (std::isspace(c))
      throw ValidationError("vertex label contains whitespace: '" + label + "'");
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

int Graph::add_vertex(const std::string& label) {
  check_label(label);
  auto [it, fresh] = index_.emplace(label, size());
  if (!fresh) throw ValidationError("duplicate vertex label: '" + label + "'");
  vertices_.push_back(label);
  adj_.emplace_back();
  return it->second;
}

void Graph::add_edge(const std::string& u, const std::string& v, double weight) {
  add_edge(index_of(u), index_of(v), weight);
}

void Graph::add_edge(int u, int v, double weight) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw ValidationError("edge endpoint out of range");
  if (u == v)
    throw ValidationError("self-loop at vertex '" + vertices_[u] + "'");
  if (has_edge(u, v))
    throw ValidationError("duplicate edge between '" + vertices_[u] + "' and '" +
                          vertices_[v] + "'");
  if (!(weight > 0)) throw ValidationError("edge weight must be positive");
  adj_[u].push_back({v, weight});
  adj_[v].push_back({u, weight});
  edges_.push_back({std::min(u, v), std::max(u, v), weight});
  if (weight != 1.0) weighted_ = true;
}

int Graph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw ValidationError("unknown vertex label: '" + label + "'");
  return it->second;
}

bool Graph::has_vertex(const std::string& label) const {
  return index_.count(label) > 0;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= size() || v >= size()) return false;
  const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& nb : shorter)
    if (nb.to == other) return true;
  return false;
}

void Graph::set_basepoint(const std::string& label) {
  index_of(label);
  basepoint_ = label;
}

Graph Graph::relabeled(const std::function<std::string(const std::string&)>& f) const {
  Graph out;
  for (const auto& v : vertices_) out.add_vertex(f(v));
  for (const auto& e : edges_) out.add_edge(e.u, e.v, e.weight);
  if (basepoint_) out.set_basepoint(f(*basepoint_));
  return out;
}

std::optional<std::pair<std::string, std::string>> Graph::disconnected_witness() const {
  if (size() == 0) return std::nullopt;
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& nb : adj_[u])
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        stack.push_back(nb.to);
      }
  }
  for (int i = 0; i < size(); ++i)
    if (!seen[i]) return std::make_pair(vertices_[0], vertices_[i]);
  return std::nullopt;
}

Graph complete_graph(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle graph needs n >= 3");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw ValidationError("path graph needs n >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw ValidationError("star graph needs n >= 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph tree_from_parent_array(const std::vector<int>& parents) {
  const int n = static_cast<int>(parents.size());
  if (n < 1) throw ValidationError("tree needs at least one vertex");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (parents[i] == -1) {
      ++roots;
      continue;
    }
    if (parents[i] < 0 || parents[i] >= n)
      throw ValidationError("parent index out of range");
    g.add_edge(i, parents[i]);
  }
  if (roots != 1) throw ValidationError("parent array must have exactly one root");
  if (g.disconnected_witness())
    throw ValidationError("parent array does not describe a tree");
  return g;
}

}  // namespace csnd
