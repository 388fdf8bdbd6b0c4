// The `demo` subcommand: regenerates the example catalogue end to end and
// prints one pass/fail row per example. Returns 0 when every row passes,
// 1 otherwise.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "csnd/classify.hpp"
#include "csnd/continuous.hpp"
#include "csnd/embedding.hpp"
#include "csnd/errors.hpp"
#include "csnd/graph.hpp"
#include "csnd/graph_metric.hpp"
#include "csnd/graph_products.hpp"
#include "csnd/groups.hpp"
#include "csnd/point_config.hpp"

namespace {

using namespace csnd;

struct Row {
  std::string label;
  std::function<bool(std::string&)> check;  // fills a short detail string
};

bool near(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += w;
  return out;
}

Graph primed(const Graph& g) {
  return g.relabeled([](const std::string& s) { return s + "'"; });
}

GroupPresentation uniform_presentation(GroupPresentation::Kind kind, int rank,
                                       int coefficient) {
  GroupPresentation p;
  p.kind = kind;
  for (int i = 0; i < rank; ++i)
    p.generators.push_back(std::string(1, static_cast<char>('s' + i)));
  p.coefficients = Eigen::MatrixXi::Constant(rank, rank, coefficient);
  return p;
}

// Exact integer value of the quadratic form of lambda on the quad labels.
long long quad_form(const KernelMatrix& k, const CycleCertificate& c) {
  long long q = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      q += c.lambda[i] * c.lambda[j] *
           llround(k(k.index_of(c.quad[i]), k.index_of(c.quad[j])));
  return q;
}

// Random points in [-1,1]^dim with pairwise separation at least min_sep.
PointConfig separated_points(int n, int dim, double min_sep,
                             std::mt19937& rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<std::string> labels;
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n, dim);
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (bool ok = false; !ok;) {
      for (int d = 0; d < dim; ++d) coords(i, d) = coord(rng);
      ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = (coords.row(i) - coords.row(j)).norm() >= min_sep;
    }
  }
  return PointConfig(std::move(labels), std::move(coords));
}

// Random binary tree grown by splitting leaves, edge lengths in (0,1].
Graph random_binary_tree(int leaves, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Graph g(std::vector<std::string>{"n0"});
  std::vector<std::string> frontier{"n0"};
  int next = 1;
  while (static_cast<int>(frontier.size()) < leaves) {
    std::uniform_int_distribution<size_t> pick(0, frontier.size() - 1);
    size_t at = pick(rng);
    std::string parent = frontier[at];
    frontier.erase(frontier.begin() + static_cast<long>(at));
    for (int c = 0; c < 2; ++c) {
      std::string child = "n" + std::to_string(next++);
      g.add_vertex(child);
      g.add_edge(parent, child, 1.0 - unit(rng));  // weight in (0,1]
      frontier.push_back(child);
    }
  }
  return g;
}

std::vector<Row> build_rows() {
  std::vector<Row> rows;

  rows.push_back({"C4 metric: negative type holds, strict fails, certificate "
                  "(1,-1,1,-1)",
                  [](std::string& d) {
                    ClassReport r = classify(path_metric(cycle_graph(4)));
                    if (r.cnd != Verdict::holds || r.csnd != Verdict::fails)
                      return false;
                    if (!r.certificate || r.certificate_for != "csnd")
                      return false;
                    const Eigen::VectorXd& c = *r.certificate;
                    if (c.size() != 4) return false;
                    double s = c(0) > 0 ? 1.0 : -1.0;
                    for (int i = 0; i < 4; ++i)
                      if (!near(s * c(i), i % 2 == 0 ? 1.0 : -1.0, 1e-9))
                        return false;
                    d = "certificate sums to zero and annihilates the form";
                    return true;
                  }});

  rows.push_back({"K3 complete-graph metric is strictly of negative type",
                  [](std::string& d) {
                    ClassReport r = classify(path_metric(complete_graph(3)));
                    d = "csnd holds";
                    return r.csnd == Verdict::holds;
                  }});

  rows.push_back({"C4 invertibility route: not strict, exact determinant 0",
                  [](std::string& d) {
                    InvertibilityReport r =
                        csnd_by_invertibility(path_metric(cycle_graph(4)));
                    d = "det = " + r.determinant_exact;
                    return !r.csnd && r.exact && r.determinant_exact == "0";
                  }});

  rows.push_back({"Markov sum of two triangle metrics stays strict (5 points)",
                  [](std::string& d) {
                    KernelMatrix k1 = path_metric(complete_graph(3));
                    KernelMatrix k2 = path_metric(primed(complete_graph(3)));
                    KernelMatrix sum = markov_sum_kernel(k1, "0", k2, "0'");
                    d = std::to_string(sum.size()) + " points, csnd holds";
                    return sum.size() == 5 &&
                           classify(sum).csnd == Verdict::holds;
                  }});

  rows.push_back(
      {"Scaled unit basis k*e_k: circumsphere radius tracks N^1.5",
       [](std::string& d) {
         auto ratio = [](int n) {
           std::vector<std::string> labels;
           Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n, n);
           for (int k = 1; k <= n; ++k) {
             labels.push_back("p" + std::to_string(k));
             coords(k - 1, k - 1) = k;
           }
           PointConfig p(std::move(labels), std::move(coords));
           return circumsphere(p).radius / std::pow(n, 1.5);
         };
         double r20 = ratio(20), r40 = ratio(40);
         std::ostringstream os;
         os << "radius/N^1.5 = " << r20 << " (N=20) vs " << r40 << " (N=40)";
         d = os.str();
         return std::abs(r20 - r40) / r40 < 0.2;
       }});

  rows.push_back({"Shift decomposition of C4 is refused (not strict)",
                  [](std::string& d) {
                    try {
                      spd_shift_decompose(path_metric(cycle_graph(4)));
                    } catch (const HypothesisError&) {
                      d = "hypothesis-not-met raised as required";
                      return true;
                    }
                    return false;
                  }});

  rows.push_back(
      {"Sign-vector embeddings reproduce odd cycle metrics (C5, C7, C9)",
       [](std::string& d) {
         for (int n = 2; n <= 4; ++n) {
           PointConfig e = odd_cycle_embedding(n);
           KernelMatrix got = kernel_of_config(e);
           KernelMatrix want = path_metric(cycle_graph(2 * n + 1));
           if (got.size() != want.size()) return false;
           for (int i = 0; i < got.size(); ++i)
             for (int j = 0; j < got.size(); ++j)
               if (!near(got(i, j), want(i, j), 1e-12)) return false;
           if (classify(got).csnd != Verdict::holds) return false;
         }
         d = "metrics match to 1e-12 and classify strict";
         return true;
       }});

  rows.push_back({"Path metric of C4 equals the frozen 4x4 table",
                  [](std::string& d) {
                    KernelMatrix k = path_metric(cycle_graph(4));
                    const double want[4][4] = {{0, 1, 2, 1},
                                               {1, 0, 1, 2},
                                               {2, 1, 0, 1},
                                               {1, 2, 1, 0}};
                    for (int i = 0; i < 4; ++i)
                      for (int j = 0; j < 4; ++j)
                        if (k(i, j) != want[i][j]) return false;
                    d = "all 16 entries";
                    return true;
                  }});

  rows.push_back({"Path metric of K4 is 1 off the diagonal",
                  [](std::string& d) {
                    KernelMatrix k = path_metric(complete_graph(4));
                    for (int i = 0; i < 4; ++i)
                      for (int j = 0; j < 4; ++j)
                        if (k(i, j) != (i == j ? 0.0 : 1.0)) return false;
                    d = "all 16 entries";
                    return true;
                  }});

  rows.push_back(
      {"Even-cycle witness for C6: arcs 1 and 2, quad at positions 0,1,3,4",
       [](std::string& d) {
         auto c = even_cycle_certificate(cycle_graph(6));
         if (!c || c->arc_k != 1 || c->arc_n != 2) return false;
         if (c->lambda != std::array<int, 4>{1, -1, 1, -1}) return false;
         const auto& cy = c->cycle_vertices;
         if (cy.size() != 6) return false;
         if (c->quad != std::array<std::string, 4>{cy[0], cy[1], cy[3], cy[4]})
           return false;
         long long q = quad_form(path_metric(cycle_graph(6)), *c);
         d = "quad form = " + std::to_string(q) + " exactly";
         return q == 0;
       }});

  rows.push_back(
      {"Even-cycle witness for C4 uses all four vertices, arcs 1 and 1",
       [](std::string& d) {
         auto c = even_cycle_certificate(cycle_graph(4));
         if (!c || c->arc_k != 1 || c->arc_n != 1) return false;
         const auto& cy = c->cycle_vertices;
         if (cy.size() != 4) return false;
         if (c->quad != std::array<std::string, 4>{cy[0], cy[1], cy[2], cy[3]})
           return false;
         long long q = quad_form(path_metric(cycle_graph(4)), *c);
         d = "quad form = " + std::to_string(q) + " exactly";
         return q == 0;
       }});

  rows.push_back({"Wedge of two triangles (bowtie) is strict",
                  [](std::string& d) {
                    Graph g = wedge_sum(complete_graph(3), "0",
                                        primed(complete_graph(3)), "0'");
                    d = std::to_string(g.size()) + " vertices, csnd holds";
                    return g.size() == 5 &&
                           classify(path_metric(g)).csnd == Verdict::holds;
                  }});

  rows.push_back({"Comb product of two triangles: 9 vertices, strict",
                  [](std::string& d) {
                    Graph g = comb_product(complete_graph(3),
                                           primed(complete_graph(3)), "0'");
                    d = std::to_string(g.size()) + " vertices, csnd holds";
                    return g.size() == 9 &&
                           classify(path_metric(g)).csnd == Verdict::holds;
                  }});

  rows.push_back(
      {"Free product of two segments, radius 3: the 7-vertex path",
       [](std::string& d) {
         Graph g = free_product_ball(complete_graph(2), "0",
                                     primed(complete_graph(2)), "0'", 3);
         if (g.size() != 7) return false;
         int deg1 = 0, deg2 = 0;
         for (int i = 0; i < g.size(); ++i) {
           if (g.degree(i) == 1) ++deg1;
           if (g.degree(i) == 2) ++deg2;
         }
         d = "7 vertices, no cycle, two endpoints";
         return deg1 == 2 && deg2 == 5 && !girth(g).has_value();
       }});

  rows.push_back(
      {"Free product of triangle and segment: interior ball metric is strict",
       [](std::string& d) {
         Graph g = free_product_ball(complete_graph(3), "0",
                                     primed(complete_graph(2)), "0'", 2);
         KernelMatrix inner =
             path_metric(g).restrict_to(ball_labels(g, "1", 1));
         d = std::to_string(inner.size()) + " interior points, csnd holds";
         return classify(inner).csnd == Verdict::holds;
       }});

  rows.push_back({"Alternating product (s,t,2) spells st",
                  [](std::string& d) {
                    d = "st";
                    return join(alternating_product("s", "t", 2)) == "st";
                  }});

  rows.push_back({"Alternating product (s,t,3) spells sts",
                  [](std::string& d) {
                    d = "sts";
                    return join(alternating_product("s", "t", 3)) == "sts";
                  }});

  rows.push_back(
      {"Free Coxeter group on 3 generators: radius-2 ball has 10 vertices",
       [](std::string& d) {
         CayleyBall b = coxeter_cayley_ball(
             uniform_presentation(GroupPresentation::Kind::coxeter, 3,
                                  kNoRelation),
             2);
         d = std::to_string(b.graph.size()) + " vertices, tree";
         return b.graph.size() == 10 && !girth(b.graph).has_value() &&
                b.graph.degree(b.graph.index_of("1")) == 3;
       }});

  rows.push_back(
      {"Free Coxeter ball metric is strict (rank 3, radius 3)",
       [](std::string& d) {
         CayleyBall b = coxeter_cayley_ball(
             uniform_presentation(GroupPresentation::Kind::coxeter, 3,
                                  kNoRelation),
             3);
         d = std::to_string(b.graph.size()) + " vertices, csnd holds";
         return classify(path_metric(b.graph)).csnd == Verdict::holds;
       }});

  rows.push_back(
      {"Cyclic amalgam (9,9,3), radius 3: ball contains the hexagon a^3=b^3",
       [](std::string& d) {
         CayleyBall b = amalgam_cyclic_ball(9, 9, 3, 3);
         const char* hex[6] = {"1", "a1", "a2", "c1", "b2", "b1"};
         for (int i = 0; i < 6; ++i) {
           if (!b.graph.has_vertex(hex[i])) return false;
           if (!b.graph.has_edge(b.graph.index_of(hex[i]),
                                 b.graph.index_of(hex[(i + 1) % 6])))
             return false;
         }
         auto g = girth(b.graph);
         d = "hexagon closed, shortest cycle length 6";
         return g && g->length == 6;
       }});

  rows.push_back(
      {"Word-metric verdict: free Coxeter rank 3 is strict; ball agrees",
       [](std::string& d) {
         GroupPresentation p = uniform_presentation(
             GroupPresentation::Kind::coxeter, 3, kNoRelation);
         WordMetricVerdict v = word_metric_csnd_verdict(p);
         if (!v.csnd || v.tree_degree != 3) return false;
         CayleyBall b = coxeter_cayley_ball(p, 3);
         d = "3-regular tree; radius-3 ball classifies strict";
         return classify(path_metric(b.graph)).csnd == Verdict::holds;
       }});

  rows.push_back(
      {"Word-metric verdict: a coefficient 3 forces a 6-cycle; ball agrees",
       [](std::string& d) {
         GroupPresentation p =
             uniform_presentation(GroupPresentation::Kind::coxeter, 2, 3);
         WordMetricVerdict v = word_metric_csnd_verdict(p);
         if (v.csnd || v.cycle_length != 6) return false;
         CayleyBall b = coxeter_cayley_ball(p, 3);  // full dihedral group
         auto g = girth(b.graph);
         if (!g || g->length != 6) return false;
         d = "dihedral ball is C6, classify not strict";
         return classify(path_metric(b.graph)).csnd == Verdict::fails;
       }});

  rows.push_back(
      {"Word-metric verdict: free Artin group (all coefficients infinite)",
       [](std::string& d) {
         GroupPresentation p = uniform_presentation(
             GroupPresentation::Kind::artin, 2, kNoRelation);
         WordMetricVerdict v = word_metric_csnd_verdict(p);
         d = "free group, 4-regular tree";
         return v.csnd && v.tree_degree == 4;
       }});

  rows.push_back(
      {"Ten separated random points in 3-space: distance kernel is strict",
       [](std::string& d) {
         std::mt19937 rng(20260814);
         PointConfig p = separated_points(10, 3, 1e-3, rng);
         ClassReport r = classify(euclidean_kernel(p));
         std::ostringstream os;
         os << "margin " << -r.reduced_spectrum.back();
         d = os.str();
         return r.csnd == Verdict::holds;
       }});

  rows.push_back(
      {"Random binary tree, 40 leaves, edge lengths in (0,1]: strict",
       [](std::string& d) {
         std::mt19937 rng(20260814);
         Graph t = random_binary_tree(40, rng);
         ClassReport r = classify(weighted_tree_kernel(t));
         std::ostringstream os;
         os << t.size() << " vertices, margin " << -r.reduced_spectrum.back();
         d = os.str();
         return r.csnd == Verdict::holds;
       }});

  rows.push_back(
      {"Circle samples 0, th, pi, pi+th: (1,-1,1,-1) annihilates all th",
       [](std::string& d) {
         const double pi = std::numbers::pi;
         for (double th : {0.3, 0.7, 1.2, 2.0, 2.8}) {
           KernelMatrix k =
               circle_kernel({0.0, th, pi, pi + th}, 2 * pi);
           const double lam[4] = {1, -1, 1, -1};
           double q = 0;
           for (int i = 0; i < 4; ++i)
             for (int j = 0; j < 4; ++j) q += lam[i] * lam[j] * k(i, j);
           if (std::abs(q) > 1e-9) return false;
           if (!obstruction_quad(k, 1e-9).has_value()) return false;
         }
         d = "two antipodal pairs found, quad form 0 for five angles";
         return true;
       }});

  return rows;
}

}  // namespace

int run_demo() {
  std::vector<Row> rows = build_rows();
  int failures = 0;
  std::printf("example catalogue — %zu rows\n", rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = rows[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] %2zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                rows[i].label.c_str(), detail.empty() ? "" : " — ",
                detail.c_str());
  }
  if (failures == 0)
    std::printf("all %zu rows passed\n", rows.size());
  else
    std::printf("%d of %zu rows FAILED\n", failures, rows.size());
  return failures == 0 ? 0 : 1;
}
