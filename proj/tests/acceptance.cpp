// Acceptance suite: eleven end-to-end checks covering the decision routes,
// exact certificates, embeddings, decompositions, group balls, products,
// Euclidean/circle/Fourier facts and the circumsphere growth law. Each
// criterion prints one [PASS]/[FAIL] line; the exit code is the number of
// failures, so the binary doubles as a ctest entry.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "csnd/classify.hpp"
#include "csnd/continuous.hpp"
#include "csnd/embedding.hpp"
#include "csnd/errors.hpp"
#include "csnd/graph.hpp"
#include "csnd/graph_metric.hpp"
#include "csnd/graph_products.hpp"
#include "csnd/groups.hpp"
#include "csnd/kernel_matrix.hpp"
#include "csnd/point_config.hpp"
#include "oracles.hpp"

using namespace csnd;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Check = std::function<Outcome()>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool require(bool cond, const char* what, std::string& firstFailure) {
  if (!cond && firstFailure.empty()) firstFailure = what;
  return cond;
}

// ---------------------------------------------------------------------------
// 1. The three CSND decision routes (determinant, embedding rank, zero-sum
//    spectrum) agree on a mixed pool of >= 200 CND Schoenberg kernels.
Outcome three_routes_agree() {
  std::mt19937 rng(2024);
  std::vector<KernelMatrix> pool;

  // Random point configurations (squared-distance kernels are always CND):
  // integer and real coordinates, occasionally with a duplicated point so
  // both verdicts occur.
  std::uniform_int_distribution<int> nd(2, 12), dd(1, 4), coord(-6, 6);
  std::uniform_real_distribution<double> rcoord(-3.0, 3.0);
  for (int t = 0; t < 110; ++t) {
    int n = nd(rng), d = dd(rng);
    Eigen::MatrixXd c(n, d);
    bool integer = t % 2 == 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j)
        c(i, j) = integer ? double(coord(rng)) : rcoord(rng);
    if (t % 5 == 0 && n >= 3) c.row(n - 1) = c.row(0);  // force degeneracy
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    pool.push_back(kernel_of_config(PointConfig(labels, c)));
  }

  // Graph metrics: trees, cycles and random connected graphs filtered to
  // the CND ones.
  for (int t = 0; t < 60; ++t)
    pool.push_back(path_metric(corpus::random_tree(2 + t % 11, 400 + t)));
  for (int n = 3; n <= 12; ++n) pool.push_back(path_metric(cycle_graph(n)));
  std::uniform_int_distribution<int> pick(0, 11);
  int added = 0;
  for (unsigned seed = 900; added < 40 && seed < 2000; ++seed) {
    Graph g = corpus::random_tree(12, seed);
    for (int e = 0; e < 3; ++e) {
      int u = pick(rng), v = pick(rng);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    KernelMatrix m = path_metric(g);
    if (classify(m).cnd != Verdict::holds) continue;
    pool.push_back(m);
    ++added;
  }

  std::string fail;
  require(pool.size() >= 200, "pool too small", fail);
  int agreements = 0;
  for (const KernelMatrix& k : pool) {
    bool via_det = csnd_by_invertibility(k).csnd;
    bool via_rank = is_affinely_independent(quadratic_embed(k));
    bool via_spec = classify(k).csnd == Verdict::holds;
    if (via_det == via_rank && via_rank == via_spec) ++agreements;
  }
  bool all = agreements == static_cast<int>(pool.size());
  require(all, "route disagreement", fail);
  Outcome o;
  o.ok = fail.empty();
  o.detail = std::to_string(agreements) + "/" + std::to_string(pool.size()) +
             " kernels agree" + (fail.empty() ? "" : "; " + fail);
  return o;
}

// ---------------------------------------------------------------------------
// 2. Even cycles carry an exact integer zero of the quadratic form; odd
//    cycles are CSND through the exact determinant, for 2 <= m <= 25.
Outcome cycle_parity_certificates() {
  std::string fail;
  for (int m = 2; m <= 25; ++m) {
    KernelMatrix even = path_metric(cycle_graph(2 * m));
    auto cert = even_cycle_certificate(cycle_graph(2 * m));
    if (!require(cert.has_value(), "missing even-cycle certificate", fail)) break;
    long long q = 0;  // integer evaluation: no tolerance anywhere
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        q += cert->lambda[i] * cert->lambda[j] *
             llround(even(even.index_of(cert->quad[i]),
                          even.index_of(cert->quad[j])));
    require(q == 0, "certificate does not annihilate exactly", fail);
    require(!csnd_by_invertibility(even).csnd, "even cycle claimed CSND", fail);
    require(csnd_by_invertibility(even).determinant_exact == "0",
            "even cycle determinant not exactly zero", fail);

    InvertibilityReport odd =
        csnd_by_invertibility(path_metric(cycle_graph(2 * m + 1)));
    require(odd.csnd && odd.exact, "odd cycle not exactly CSND", fail);
  }
  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty() ? "cycles up to C50/C51, all integer-exact" : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 3. Complete-graph metrics are CSND with determinant (n-1)(-1)^(n-1).
Outcome complete_graph_determinants() {
  std::string fail;
  for (int n = 2; n <= 51; ++n) {
    InvertibilityReport inv = csnd_by_invertibility(path_metric(complete_graph(n)));
    require(inv.csnd && inv.exact, "complete graph not exactly CSND", fail);
    std::string expect =
        (n % 2 == 0 ? "-" : "") + std::to_string(n - 1);  // (n-1)(-1)^(n-1)
    require(inv.determinant_exact == expect, "determinant mismatch", fail);
  }
  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty() ? "det = +-(n-1) verified for n = 2..51" : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 4. The sign-vector embedding reproduces odd cycle metrics; the n = 2 case
//    is checked in integers against the symmetric-difference oracle.
Outcome odd_cycle_embeddings() {
  std::string fail;
  for (int n = 1; n <= 10; ++n) {
    PointConfig emb = odd_cycle_embedding(n);
    KernelMatrix metric = path_metric(cycle_graph(2 * n + 1));
    double err =
        (kernel_of_config(emb).entries() - metric.entries()).cwiseAbs().maxCoeff();
    require(err <= 1e-12, "embedding does not reproduce the metric", fail);
  }
  // Unscaled vectors: squared distance 4|A delta B| = 8 * metric distance.
  auto sets = oracle::odd_cycle_tau_sets(2);
  KernelMatrix m5 = path_metric(cycle_graph(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      long long unscaled = 4LL * oracle::sym_diff_size(sets[i], sets[j]);
      require(unscaled == 8LL * llround(m5(i, j)),
              "oracle distance mismatch at n = 2", fail);
    }
  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty() ? "metrics of C3..C21 reproduced; C5 integer-exact" : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 5. Constant-shift decomposition: K = -A + c with A strictly positive
//    definite, tight reconstruction, and c = 4/3 on the triangle fixture.
Outcome shift_decompositions() {
  std::string fail;
  for (const auto& nk : corpus::csnd_kernels()) {
    SpdShiftDecomposition dec = spd_shift_decompose(nk.kernel);
    const double scale = nk.kernel.scale();
    double err = (nk.kernel.entries() -
                  (Eigen::MatrixXd::Constant(nk.kernel.size(), nk.kernel.size(),
                                             dec.shift) -
                   dec.spd_part.entries()))
                     .cwiseAbs()
                     .maxCoeff();
    require(err <= 1e-8 * scale, "reconstruction error too large", fail);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dec.spd_part.entries());
    require(es.eigenvalues()(0) >= 1e-6 * scale, "A not strictly positive", fail);
  }
  SpdShiftDecomposition k3 = spd_shift_decompose(path_metric(complete_graph(3)));
  require(std::abs(k3.shift - 4.0 / 3.0) <= 1e-12, "triangle shift is not 4/3",
          fail);
  Outcome o;
  o.ok = fail.empty();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu kernels; triangle shift %.12g",
                corpus::csnd_kernels().size(), k3.shift);
  o.detail = fail.empty() ? buf : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 6. Group word metrics: free balls are CSND, dihedral groups realize
//    C_{2m} and fail, and the presentation-level verdict matches the
//    free/non-free ground truth over the full coefficient grid.
Outcome group_verdicts() {
  std::string fail;

  auto free_coxeter = [](int rank) {
    GroupPresentation p;
    for (int i = 0; i < rank; ++i)
      p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
    p.coefficients = Eigen::MatrixXi::Constant(rank, rank, kNoRelation);
    return p;
  };
  for (int rank = 1; rank <= 4; ++rank)
    for (int radius = 1; radius <= 4; ++radius) {
      CayleyBall ball = coxeter_cayley_ball(free_coxeter(rank), radius);
      require(classify(path_metric(ball.graph)).csnd == Verdict::holds,
              "free Coxeter ball not CSND", fail);
      require(!girth(ball.graph).has_value(), "free Coxeter ball has a cycle",
              fail);
    }

  for (int m = 2; m <= 8; ++m) {
    GroupPresentation d;
    d.generators = {"s", "t"};
    d.coefficients = Eigen::MatrixXi::Constant(2, 2, m);
    CayleyBall ball = coxeter_cayley_ball(d, m);
    bool is_cycle = ball.graph.size() == 2 * m;
    for (int i = 0; i < ball.graph.size(); ++i)
      is_cycle = is_cycle && ball.graph.degree(i) == 2;
    auto g = girth(ball.graph);
    is_cycle = is_cycle && g && g->length == 2 * m;
    require(is_cycle, "dihedral group does not realize the even cycle", fail);
    require(classify(path_metric(ball.graph)).csnd == Verdict::fails,
            "dihedral metric claimed CSND", fail);
    require(even_cycle_certificate(ball.graph).has_value(),
            "dihedral cycle certificate missing", fail);
  }

  // Verdict vs ground truth on every presentation with <= 4 generators and
  // coefficients in {2, 3, 4, 6, infinity}.
  const int choices[5] = {2, 3, 4, 6, kNoRelation};
  long long checked = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    const int pairs = rank * (rank - 1) / 2;
    long long combos = 1;
    for (int i = 0; i < pairs; ++i) combos *= 5;
    for (long long code = 0; code < combos; ++code) {
      GroupPresentation p;
      for (int i = 0; i < rank; ++i)
        p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
      p.coefficients = Eigen::MatrixXi::Constant(rank, rank, kNoRelation);
      long long rest = code;
      int true_min = kNoRelation;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          int v = choices[rest % 5];
          rest /= 5;
          p.coefficients(i, j) = p.coefficients(j, i) = v;
          true_min = std::min(true_min, v);
        }
      for (int kind = 0; kind < 2; ++kind) {
        p.kind = kind == 0 ? GroupPresentation::Kind::coxeter
                           : GroupPresentation::Kind::artin;
        WordMetricVerdict v = word_metric_csnd_verdict(p);
        bool truly_free = true_min == kNoRelation;
        require(v.csnd == truly_free, "verdict disagrees with coefficient scan",
                fail);
        if (!truly_free) {
          require(v.min_coefficient == true_min, "wrong minimal coefficient",
                  fail);
          require(v.cycle_length == 2 * true_min, "wrong cycle length", fail);
          require(static_cast<int>(v.relator_left.size()) == true_min &&
                      static_cast<int>(v.relator_right.size()) == true_min,
                  "relator length mismatch", fail);
        } else {
          require(v.tree_degree ==
                      (kind == 0 ? p.rank() : 2 * p.rank()),
                  "wrong tree degree", fail);
        }
        ++checked;
      }
    }
  }
  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty()
                 ? "balls realized; " + std::to_string(checked) +
                       " presentations cross-checked"
                 : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 7. The (9,9,3) cyclic amalgam: hexagon through the shared cube, and the
//    safe interior of the radius-5 ball fails CSND with an exact quad.
Outcome amalgam_counterexample() {
  std::string fail;
  CayleyBall ball = amalgam_cyclic_ball(9, 9, 3, 5);
  for (const char* v : {"1", "a1", "a2", "c1", "b2", "b1"})
    require(ball.graph.has_vertex(v), "hexagon vertex missing", fail);
  const char* hexagon[6] = {"1", "a1", "a2", "c1", "b2", "b1"};
  for (int i = 0; i < 6; ++i)
    require(ball.graph.has_edge(ball.graph.index_of(hexagon[i]),
                                ball.graph.index_of(hexagon[(i + 1) % 6])),
            "hexagon edge missing", fail);
  auto g = girth(ball.graph);
  require(g && g->length == 6, "shortest cycle is not the hexagon", fail);

  std::vector<std::string> interior = ball_labels(ball.graph, "1", 2);
  KernelMatrix inner = path_metric(ball.graph).restrict_to(interior);
  require(classify(inner).csnd == Verdict::fails, "interior claimed CSND", fail);
  auto quad = obstruction_quad(inner);  // exact integer match
  require(quad.has_value(), "no exact obstruction quad", fail);
  if (quad) {
    long long q = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        q += quad->lambda[i] * quad->lambda[j] *
             llround(inner(inner.index_of(quad->quad[i]),
                           inner.index_of(quad->quad[j])));
    require(q == 0, "quad does not annihilate exactly", fail);
  }
  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty() ? "hexagon found; interior of " +
                                std::to_string(interior.size()) +
                                " words fails CSND exactly"
                          : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 8. Strictness survives the gluing constructions: Markov sums of random
//    CSND pairs, the comb of two triangles, and the free-product interior.
Outcome product_closure() {
  std::string fail;
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> nd(2, 8), dd(2, 5), coord(-9, 9);
  auto random_csnd = [&](const std::string& prefix) {
    for (;;) {
      int n = nd(rng), d = dd(rng);
      Eigen::MatrixXd c(n, d);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) c(i, j) = coord(rng);
      std::vector<std::string> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
      KernelMatrix k = kernel_of_config(PointConfig(labels, c));
      if (classify(k).csnd == Verdict::holds) return k;
    }
  };
  int good = 0;
  for (int t = 0; t < 50; ++t) {
    KernelMatrix k1 = random_csnd("x");
    KernelMatrix k2 = random_csnd("y");
    KernelMatrix sum =
        markov_sum_kernel(k1, k1.labels().front(), k2, k2.labels().front());
    if (classify(sum).csnd == Verdict::holds) ++good;
  }
  require(good == 50, "a Markov sum lost strictness", fail);

  Graph comb = comb_product(complete_graph(3), complete_graph(3), "0");
  require(classify(path_metric(comb)).csnd == Verdict::holds,
          "comb of triangles not CSND", fail);

  Graph fp = free_product_ball(complete_graph(3), "0", complete_graph(2), "0", 4);
  KernelMatrix inner =
      path_metric(fp).restrict_to(ball_labels(fp, "1", 2));
  require(classify(inner).csnd == Verdict::holds,
          "free product interior not CSND", fail);

  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty() ? "50/50 Markov sums strict; comb and free product too"
                          : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 9. Euclidean distance kernels of separated points are CSND, and the
//    rescaled exponential comparison converges to the distance kernel.
Outcome euclidean_samples() {
  std::string fail;
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> nd(2, 20), dd(1, 5);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  auto sample = [&]() {
    for (;;) {
      int n = nd(rng), d = dd(rng);
      Eigen::MatrixXd c(n, d);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) c(i, j) = coord(rng);
      double min_sep = 1e300;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          min_sep = std::min(min_sep, (c.row(i) - c.row(j)).norm());
      if (min_sep < 1e-3) continue;  // enforce the separation floor
      std::vector<std::string> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
      return PointConfig(labels, c);
    }
  };
  int good = 0;
  std::vector<KernelMatrix> fixed;
  for (int t = 0; t < 100; ++t) {
    KernelMatrix k = euclidean_kernel(sample());
    if (classify(k).csnd == Verdict::holds) ++good;
    if (t < 10) fixed.push_back(k);
  }
  require(good == 100, "a Euclidean sample failed CSND", fail);

  // n*(exp(-d/n) - 1) -> -d: the sup-norm error must fall as n grows.
  for (const KernelMatrix& k : fixed) {
    double prev = 1e300;
    for (double n : {1e2, 1e3, 1e4}) {
      Eigen::MatrixXd approx =
          -n * (schur_exponential(k, 1.0 / n).entries() -
                Eigen::MatrixXd::Ones(k.size(), k.size()));
      double err = (approx - k.entries()).cwiseAbs().maxCoeff();
      require(err < prev, "limit error not decreasing", fail);
      prev = err;
    }
  }
  Outcome o;
  o.ok = fail.empty();
  o.detail = fail.empty() ? "100/100 CSND; limit error strictly decreasing"
                          : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 10. Quadrature vs closed form for the exponential/Cauchy transform pair.
Outcome fourier_grid() {
  std::string fail;
  double worst = 0.0;
  for (double t : {0.1, 0.5, 1.0, 2.0, 10.0})
    for (double xi : {0.0, 0.5, 1.0, 5.0, 10.0}) {
      FourierCheck c = fourier_identity_check(t, xi);
      worst = std::max(worst, c.abs_error);
    }
  require(worst <= 1e-6, "quadrature error above 1e-6", fail);
  Outcome o;
  o.ok = fail.empty();
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |lhs - rhs| = %.3g on the 5x5 grid", worst);
  o.detail = fail.empty() ? buf : fail;
  return o;
}

// ---------------------------------------------------------------------------
// 11. Circumsphere radius of {k e_k : k <= N} grows like N^(3/2): the
//     normalized radius stabilizes within 20% between N = 20 and N = 40.
Outcome circumsphere_growth() {
  std::string fail;
  auto radius_for = [](int n) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    std::vector<std::string> labels(n);
    for (int k = 1; k <= n; ++k) {
      c(k - 1, k - 1) = k;
      labels[k - 1] = "p" + std::to_string(k);
    }
    return circumsphere(PointConfig(labels, c)).radius;
  };
  double r20 = radius_for(20) / std::pow(20.0, 1.5);
  double r40 = radius_for(40) / std::pow(40.0, 1.5);
  double variation = std::abs(r40 / r20 - 1.0);
  require(variation < 0.20, "normalized radius drifts by 20% or more", fail);
  Outcome o;
  o.ok = fail.empty();
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "radius/N^1.5: %.6g (N=20) vs %.6g (N=40), drift %.1f%%", r20,
                r40, 100.0 * variation);
  o.detail = fail.empty() ? buf : fail;
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Check check;
    bool timed;      // print the runtime
    double budget;   // seconds; 0 = no limit
  };
  const std::vector<Entry> entries = {
      {"three CSND decision routes agree on 200+ random CND kernels",
       three_routes_agree, true, 10.0},
      {"even cycles fail CSND with exact integer certificates, odd cycles pass",
       cycle_parity_certificates, false, 0.0},
      {"complete-graph metrics: exact determinant (n-1)(-1)^(n-1), n <= 51",
       complete_graph_determinants, false, 0.0},
      {"sign-vector embeddings reproduce odd cycle metrics",
       odd_cycle_embeddings, false, 0.0},
      {"constant-shift decompositions reconstruct tightly with SPD part",
       shift_decompositions, false, 0.0},
      {"group word metrics: free balls CSND, dihedral cycles fail, verdict grid",
       group_verdicts, false, 0.0},
      {"cyclic amalgam: hexagon identification and non-CSND safe interior",
       amalgam_counterexample, false, 0.0},
      {"Markov sums, comb and free products preserve strictness",
       product_closure, false, 0.0},
      {"Euclidean samples are CSND and the exponential limit converges",
       euclidean_samples, false, 0.0},
      {"Fourier quadrature matches the Cauchy closed form to 1e-6",
       fourier_grid, true, 5.0},
      {"circumsphere radius growth is stable under N^(3/2) scaling",
       circumsphere_growth, false, 0.0},
  };

  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.check();
    } catch (const std::exception& ex) {
      out.ok = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    double dt = seconds_since(t0);
    if (e.budget > 0 && dt >= e.budget) {
      out.ok = false;
      out.detail += " [over time budget]";
    }
    if (!out.ok) ++failures;
    if (e.timed)
      std::printf("[%s] %2zu. %s — %s (%.2f s)\n", out.ok ? "PASS" : "FAIL",
                  i + 1, e.label, out.detail.c_str(), dt);
    else
      std::printf("[%s] %2zu. %s — %s\n", out.ok ? "PASS" : "FAIL", i + 1,
                  e.label, out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(entries.size()) - failures, entries.size());
  return failures;
}
