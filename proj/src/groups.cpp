#include "csnd/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

void GroupPresentation::validate() const {
  const int r = rank();
  if (r < 1) throw ValidationError("presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& s : generators) {
    if (s.empty()) throw ValidationError("empty generator name");
    if (s == "1") throw ValidationError("generator name '1' is reserved for the identity");
    for (unsigned char c : s)
      if (std::isspace(c) || c == '.')
        throw ValidationError("generator name contains whitespace or '.': '" + s + "'");
    if (!seen.insert(s).second)
      throw ValidationError("duplicate generator name: '" + s + "'");
  }
  if (coefficients.rows() != r || coefficients.cols() != r)
    throw ValidationError("coefficient table shape does not match the generators");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (coefficients(i, j) != coefficients(j, i))
        throw ValidationError("coefficient table is not symmetric");
      if (coefficients(i, j) != kNoRelation && coefficients(i, j) < 2)
        throw ValidationError("coefficients must be at least 2 (or infinite)");
    }
}

bool GroupPresentation::is_free() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (coefficients(i, j) != kNoRelation) return false;
  return true;
}

std::vector<std::string> alternating_product(const std::string& s,
                                             const std::string& t, int k) {
  if (k < 1) throw ValidationError("alternating product needs k >= 1");
  std::vector<std::string> word(k);
  for (int i = 0; i < k; ++i) word[i] = i % 2 == 0 ? s : t;
  return word;
}

namespace {

std::string join_word(const std::vector<std::string>& letters) {
  if (letters.empty()) return "1";
  std::string out = letters[0];
  for (size_t i = 1; i < letters.size(); ++i) out += "." + letters[i];
  return out;
}

}  // namespace

CayleyBall coxeter_cayley_ball(const GroupPresentation& p, int radius, int max_finite_m) {
  p.validate();
  if (p.kind != GroupPresentation::Kind::coxeter)
    throw HypothesisError("reflection-representation ball applies to Coxeter presentations");
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  const int r = p.rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (p.coefficients(i, j) != kNoRelation && p.coefficients(i, j) > max_finite_m)
        throw ValidationError("finite coefficient exceeds the identification bound");

  // Canonical reflection representation: B(a_s, a_t) = -cos(pi / m(s,t)).
  Eigen::MatrixXd bform(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j)
        bform(i, j) = 1.0;
      else if (p.coefficients(i, j) == kNoRelation)
        bform(i, j) = -1.0;
      else
        bform(i, j) = -std::cos(std::numbers::pi / p.coefficients(i, j));
    }
  std::vector<Eigen::MatrixXd> gen(r);
  for (int s = 0; s < r; ++s) {
    gen[s] = Eigen::MatrixXd::Identity(r, r);
    for (int t = 0; t < r; ++t) gen[s](s, t) -= 2.0 * bform(s, t);
  }

  // Expand generators in sorted-name order so the canonical words (and so
  // the whole output) do not depend on the input generator order.
  std::vector<int> by_name(r);
  for (int i = 0; i < r; ++i) by_name[i] = i;
  std::sort(by_name.begin(), by_name.end(),
            [&](int a, int b) { return p.generators[a] < p.generators[b]; });

  // Elements are identified by their matrix, snapped to a 1e-7 grid. Word
  // length is a parity homomorphism (the determinant sign), so a collision
  // between words of different parity is a numerical failure, not algebra.
  constexpr double kGrid = 1e-7;
  auto key_of = [&](const Eigen::MatrixXd& m) {
    std::vector<std::int64_t> key(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        key[static_cast<size_t>(i) * r + j] = std::llround(m(i, j) / kGrid);
    return key;
  };

  std::map<std::vector<std::int64_t>, int> index;
  std::vector<Eigen::MatrixXd> mats{Eigen::MatrixXd::Identity(r, r)};
  std::vector<std::vector<std::string>> words{{}};
  std::vector<int> depth{0};
  Graph graph;
  graph.add_vertex("1");
  index.emplace(key_of(mats[0]), 0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int s : by_name) {
      Eigen::MatrixXd next = mats[u] * gen[s];
      auto key = key_of(next);
      auto it = index.find(key);
      int v;
      if (it != index.end()) {
        v = it->second;
        if ((depth[u] + 1 - depth[v]) % 2 != 0)
          throw NumericalError(
              "element identification collided across word-length parity; "
              "the 1e-7 grid is too coarse for this presentation");
      } else {
        if (depth[u] + 1 > radius) continue;
        v = static_cast<int>(mats.size());
        index.emplace(std::move(key), v);
        mats.push_back(std::move(next));
        words.push_back(words[u]);
        words.back().push_back(p.generators[s]);
        depth.push_back(depth[u] + 1);
        graph.add_vertex(join_word(words.back()));
        queue.push_back(v);
      }
      if (u != v && !graph.has_edge(u, v)) graph.add_edge(u, v);
    }
  }

  CayleyBall ball;
  for (const auto& w : words) ball.words.push_back(join_word(w));
  graph.set_basepoint("1");
  ball.graph = std::move(graph);
  ball.radius = radius;
  ball.exactness = "reflection-numerical";
  return ball;
}

CayleyBall free_group_ball(int num_generators, int radius) {
  if (num_generators < 1 || num_generators > 26)
    throw ValidationError("free group ball supports 1 to 26 generators");
  if (radius < 0) throw ValidationError("radius must be nonnegative");

  // Letters: 'a'.. for generators, 'A'.. for inverses. Words are freely
  // reduced, so appending the inverse of the last letter steps back to the
  // parent and everything else extends the word: the ball is a tree.
  auto inverse = [](char c) -> char {
    return std::islower(static_cast<unsigned char>(c))
               ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
               : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  };
  std::vector<char> letters;
  for (int i = 0; i < num_generators; ++i) {
    letters.push_back(static_cast<char>('a' + i));
    letters.push_back(static_cast<char>('A' + i));
  }

  std::map<std::string, int> index;
  std::vector<std::string> words{""};
  std::vector<int> depth{0};
  Graph graph;
  graph.add_vertex("1");
  index.emplace("", 0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    const std::string w = words[u];
    for (char c : letters) {
      std::string next = w;
      if (!next.empty() && next.back() == inverse(c))
        next.pop_back();
      else
        next += c;
      auto it = index.find(next);
      int v;
      if (it != index.end()) {
        v = it->second;
      } else {
        if (depth[u] + 1 > radius) continue;
        v = static_cast<int>(words.size());
        index.emplace(next, v);
        words.push_back(next);
        depth.push_back(depth[u] + 1);
        graph.add_vertex(next.empty() ? "1" : next);
        queue.push_back(v);
      }
      if (!graph.has_edge(u, v)) graph.add_edge(u, v);
    }
  }

  CayleyBall ball;
  for (const auto& w : words) ball.words.push_back(w.empty() ? "1" : w);
  graph.set_basepoint("1");
  ball.graph = std::move(graph);
  ball.radius = radius;
  ball.exactness = "normal-form-exact";
  return ball;
}

namespace {

// Normal form in Z_m *_{Z_d} Z_n: a central power c^t (c = a^{m/d} = b^{n/d},
// t in 0..d-1) times an alternating product of coset representatives a^i
// (1 <= i < m/d) and b^j (1 <= j < n/d).
struct AmalgamElement {
  int central = 0;
  std::vector<std::pair<char, int>> word;  // ('a'|'b', exponent)
  auto operator<=>(const AmalgamElement&) const = default;
};

}  // namespace

CayleyBall amalgam_cyclic_ball(int m, int n, int d, int radius) {
  if (m < 1 || n < 1 || d < 1) throw ValidationError("orders must be positive");
  if (m % d != 0 || n % d != 0)
    throw ValidationError("the amalgamated order d must divide both m and n");
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  const int qa = m / d, qb = n / d;

  // Right-multiplication by a^{+-1} or b^{+-1} in normal form; exponents
  // wrap into the central part via a^{qa} = b^{qb} = c.
  auto step = [&](AmalgamElement e, char fac, int dir) {
    const int q = fac == 'a' ? qa : qb;
    if (q == 1) {
      // The factor coincides with the center.
      e.central = (e.central + dir + d) % d;
      return e;
    }
    if (!e.word.empty() && e.word.back().first == fac) {
      int exp = e.word.back().second + dir;
      if (exp == q) {
        e.word.pop_back();
        e.central = (e.central + 1) % d;
      } else if (exp == 0) {
        e.word.pop_back();
      } else {
        e.word.back().second = exp;
      }
    } else if (dir == 1) {
      e.word.emplace_back(fac, 1);
    } else {
      // x * a^{-1} = x c^{-1} a^{q-1}: c is central, so it migrates left.
      e.word.emplace_back(fac, q - 1);
      e.central = (e.central - 1 + d) % d;
    }
    return e;
  };

  auto render = [&](const AmalgamElement& e) {
    std::vector<std::string> parts;
    if (e.central != 0) parts.push_back("c" + std::to_string(e.central));
    for (const auto& [fac, exp] : e.word)
      parts.push_back(std::string(1, fac) + std::to_string(exp));
    return join_word(parts);
  };

  std::map<AmalgamElement, int> index;
  std::vector<AmalgamElement> elems{{}};
  std::vector<int> depth{0};
  Graph graph;
  graph.add_vertex("1");
  index.emplace(elems[0], 0);

  const std::pair<char, int> moves[4] = {{'a', 1}, {'a', -1}, {'b', 1}, {'b', -1}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& [fac, dir] : moves) {
      AmalgamElement next = step(elems[u], fac, dir);
      if (next == elems[u]) continue;  // order-1 or order-2 degeneracies
      auto it = index.find(next);
      int v;
      if (it != index.end()) {
        v = it->second;
      } else {
        if (depth[u] + 1 > radius) continue;
        v = static_cast<int>(elems.size());
        index.emplace(next, v);
        elems.push_back(next);
        depth.push_back(depth[u] + 1);
        graph.add_vertex(render(next));
        queue.push_back(v);
      }
      if (u != v && !graph.has_edge(u, v)) graph.add_edge(u, v);
    }
  }

  CayleyBall ball;
  for (const auto& e : elems) ball.words.push_back(render(e));
  graph.set_basepoint("1");
  ball.graph = std::move(graph);
  ball.radius = radius;
  ball.exactness = "normal-form-exact";
  return ball;
}

WordMetricVerdict word_metric_csnd_verdict(const GroupPresentation& p) {
  p.validate();
  const bool coxeter = p.kind == GroupPresentation::Kind::coxeter;
  WordMetricVerdict v;
  if (p.is_free()) {
    v.csnd = true;
    v.tree_degree = coxeter ? p.rank() : 2 * p.rank();
    v.statement = std::string(coxeter ? "free Coxeter group" : "free group") +
                  ": the Cayley graph is the " + std::to_string(v.tree_degree) +
                  "-regular tree, and tree metrics are strictly negative "
                  "definite on zero-sum coefficients";
    return v;
  }

  // The smallest finite coefficient gives the shortest relator; the relator
  // traces an isometrically embedded cycle of length 2m in the Cayley
  // graph, and even cycles admit an exact zero of the quadratic form.
  int best_i = -1, best_j = -1;
  for (int i = 0; i < p.rank(); ++i)
    for (int j = i + 1; j < p.rank(); ++j) {
      int mij = p.coefficients(i, j);
      if (mij == kNoRelation) continue;
      if (best_i < 0 || mij < p.coefficients(best_i, best_j)) {
        best_i = i;
        best_j = j;
      }
    }
  v.csnd = false;
  v.s = p.generators[best_i];
  v.t = p.generators[best_j];
  v.min_coefficient = p.coefficients(best_i, best_j);
  v.relator_left = alternating_product(v.s, v.t, v.min_coefficient);
  v.relator_right = alternating_product(v.t, v.s, v.min_coefficient);
  v.cycle_length = 2 * v.min_coefficient;
  v.statement = "relation between '" + v.s + "' and '" + v.t +
                "' embeds a cycle of length " + std::to_string(v.cycle_length) +
                " isometrically in the Cayley graph, so the word metric is "
                "not strictly negative definite on zero-sum coefficients";
  return v;
}

}  // namespace csnd
