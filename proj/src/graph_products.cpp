#include "csnd/graph_products.hpp"

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

Graph wedge_sum(const Graph& g1, const std::string& v1,
                const Graph& g2, const std::string& v2) {
  g1.index_of(v1);
  const int b2 = g2.index_of(v2);

  Graph out;
  for (const auto& v : g1.vertices()) out.add_vertex(v);

  // Second-factor vertices keep their labels when possible; collisions get
  // primes appended. The basepoint of g2 maps onto v1.
  std::vector<std::string> mapped(g2.size());
  for (int i = 0; i < g2.size(); ++i) {
    if (i == b2) {
      mapped[i] = v1;
      continue;
    }
    std::string name = g2.vertex(i);
    while (out.has_vertex(name)) name += '\'';
    mapped[i] = name;
    out.add_vertex(name);
  }

  for (const auto& e : g1.edges()) out.add_edge(e.u, e.v, e.weight);
  for (const auto& e : g2.edges())
    out.add_edge(mapped[e.u], mapped[e.v], e.weight);
  out.set_basepoint(v1);
  return out;
}

Graph comb_product(const Graph& g1, const Graph& g2, const std::string& v2) {
  g2.index_of(v2);

  // The spine vertex u carries the tooth copy {u|w : w in g2}, glued at
  // u|v2; building it as an iterated wedge keeps the metric a Markov sum.
  Graph out = g1.relabeled([&](const std::string& u) { return u + "|" + v2; });
  for (const auto& u : g1.vertices()) {
    Graph tooth = g2.relabeled([&](const std::string& w) { return u + "|" + w; });
    out = wedge_sum(out, u + "|" + v2, tooth, u + "|" + v2);
  }
  if (!g1.vertices().empty()) out.set_basepoint(g1.vertices().front() + "|" + v2);
  return out;
}

namespace {

struct Letter {
  int factor;  // 1 or 2
  int vertex;  // index in its factor, never the basepoint
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

std::string render(const Word& w, const Graph& g1, const Graph& g2) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    const Graph& g = w[i].factor == 1 ? g1 : g2;
    out += g.vertex(w[i].vertex) + "@" + (w[i].factor == 1 ? "1" : "2");
  }
  return out;
}

}  // namespace

Graph free_product_ball(const Graph& g1, const std::string& v1,
                        const Graph& g2, const std::string& v2, int radius) {
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  if (g1.is_weighted() || g2.is_weighted())
    throw ValidationError("free product ball requires unweighted factors");
  const int b[3] = {-1, g1.index_of(v1), g2.index_of(v2)};
  const Graph* gs[3] = {nullptr, &g1, &g2};
  for (const Graph* g : {&g1, &g2})
    for (const auto& v : g->vertices())
      if (v.find('.') != std::string::npos)
        throw ValidationError("factor labels must not contain '.': '" + v + "'");

  // Breadth-first over alternating words. Every edge of the free product
  // either rewrites the first letter along a factor edge (dropping it when
  // it reaches the basepoint) or prepends a basepoint neighbor, so all
  // edges incident to a word are enumerated below.
  std::map<Word, int> index;
  std::vector<Word> words;
  std::vector<int> depth;
  Graph out;

  auto intern = [&](const Word& w) {
    auto [it, fresh] = index.emplace(w, static_cast<int>(words.size()));
    if (fresh) {
      words.push_back(w);
      depth.push_back(w.empty() ? 0 : -1);
      out.add_vertex(render(w, g1, g2));
    }
    return std::pair(it->second, fresh);
  };

  intern(Word{});
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    const Word w = words[u];

    // BFS depth equals the free-product distance, so a neighbor enters the
    // ball iff depth[u] + 1 <= radius; edges between ball vertices are
    // always kept.
    auto visit = [&](const Word& next) {
      auto it = index.find(next);
      int v;
      if (it != index.end()) {
        v = it->second;
      } else {
        if (depth[u] + 1 > radius) return;
        v = intern(next).first;
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
      if (!out.has_edge(u, v)) out.add_edge(u, v);
    };

    if (!w.empty()) {
      // Move the first letter along an edge of its factor.
      const Letter head = w.front();
      const Graph& g = *gs[head.factor];
      for (const auto& nb : g.neighbors(head.vertex)) {
        Word next = w;
        if (nb.to == b[head.factor])
          next.erase(next.begin());
        else
          next.front().vertex = nb.to;
        visit(next);
      }
    }
    // Prepend a letter of the other factor (either factor at the root).
    for (int f : {1, 2}) {
      if (!w.empty() && w.front().factor == f) continue;
      for (const auto& nb : gs[f]->neighbors(b[f])) {
        Word next;
        next.reserve(w.size() + 1);
        next.push_back({f, nb.to});
        next.insert(next.end(), w.begin(), w.end());
        visit(next);
      }
    }
  }
  out.set_basepoint("1");
  return out;
}

}  // namespace csnd
