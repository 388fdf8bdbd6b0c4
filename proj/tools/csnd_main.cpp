// Command-line front door: classify kernels, build graphs and Cayley balls,
// embed, decompose, sample continuous metrics, and run the example demo.
//
// Exit codes: 0 success, 1 usage/validation/IO error, 2 a mathematical
// hypothesis of the requested operation does not hold for the input (the
// reason is reported as machine-readable JSON on stdout).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "csnd/classify.hpp"
#include "csnd/continuous.hpp"
#include "csnd/embedding.hpp"
#include "csnd/errors.hpp"
#include "csnd/graph.hpp"
#include "csnd/graph_expr.hpp"
#include "csnd/graph_metric.hpp"
#include "csnd/groups.hpp"
#include "csnd/io.hpp"
#include "csnd/point_config.hpp"

int run_demo();

namespace {

using nlohmann::json;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json verdict_to_json(const csnd::WordMetricVerdict& v) {
  json j;
  j["csnd"] = v.csnd;
  j["statement"] = v.statement;
  if (v.csnd) {
    j["tree_degree"] = v.tree_degree;
  } else {
    j["witness"] = {{"s", v.s},
                    {"t", v.t},
                    {"coefficient", v.min_coefficient},
                    {"relator_left", v.relator_left},
                    {"relator_right", v.relator_right},
                    {"cycle_length", v.cycle_length}};
  }
  return j;
}

json fourier_to_json(const csnd::FourierCheck& c) {
  json j;
  j["lhs"] = csnd::round_sig12(c.lhs);
  j["rhs"] = csnd::round_sig12(c.rhs);
  j["abs_error"] = csnd::round_sig12(c.abs_error);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "csnd — decide positive/negative definiteness of finite kernels with "
      "machine-checkable certificates, build quadratic embeddings, and "
      "generate graph, group and continuous example kernels"};
  app.require_subcommand(1);

  double rel_eps = 1e-9;
  bool exact = false;
  app.add_option("--tol", rel_eps,
                 "Relative eigenvalue tolerance; verdicts treat |mu| below "
                 "tol*max|K| as zero")
      ->check(CLI::PositiveNumber);
  app.add_flag("--exact", exact,
               "classify: attach the exact invertibility report (integer "
               "kernels use fraction-free arithmetic, no tolerance)");

  int exit_code = 0;

  // ---- classify ----------------------------------------------------------
  auto* cmd_classify = app.add_subcommand(
      "classify", "Classify a kernel file into PD/SPD/CND/CSND");
  std::string classify_in;
  cmd_classify->add_option("--in", classify_in, "Kernel file (.json or .csv)")
      ->required();
  cmd_classify->callback([&] {
    csnd::KernelMatrix k = csnd::load_kernel_file(classify_in);
    csnd::TolerancePolicy tol{rel_eps};
    json j = csnd::report_to_json(csnd::classify(k, tol));
    if (exact) {
      try {
        j["invertibility"] =
            csnd::invertibility_to_json(csnd::csnd_by_invertibility(k, tol));
      } catch (const csnd::HypothesisError& e) {
        j["invertibility"] = {{"status", "not-applicable"},
                              {"reason", e.what()}};
      }
    }
    print_json(j);
  });

  // ---- embed -------------------------------------------------------------
  auto* cmd_embed = app.add_subcommand(
      "embed",
      "Quadratic embedding of a CND Schoenberg kernel: points whose squared "
      "distances reproduce the kernel");
  std::string embed_in, embed_pivot;
  cmd_embed->add_option("--in", embed_in, "Kernel file (.json or .csv)")
      ->required();
  cmd_embed->add_option("--pivot", embed_pivot,
                        "Label placed at the origin (default: last label)");
  cmd_embed->callback([&] {
    csnd::KernelMatrix k = csnd::load_kernel_file(embed_in);
    csnd::TolerancePolicy tol{rel_eps};
    csnd::PointConfig p = embed_pivot.empty()
                              ? csnd::quadratic_embed(k, tol)
                              : csnd::quadratic_embed(k, embed_pivot, tol);
    print_json(csnd::points_to_json(p));
  });

  // ---- kernel-of ---------------------------------------------------------
  auto* cmd_kernel_of = app.add_subcommand(
      "kernel-of", "Squared-distance kernel of a point configuration");
  std::string kernel_of_in;
  cmd_kernel_of->add_option("--in", kernel_of_in, "Point file (.json)")
      ->required();
  cmd_kernel_of->callback([&] {
    csnd::PointConfig p =
        csnd::points_from_json(csnd::load_json_file(kernel_of_in));
    print_json(csnd::kernel_to_json(csnd::kernel_of_config(p)));
  });

  // ---- decompose ---------------------------------------------------------
  auto* cmd_decompose = app.add_subcommand(
      "decompose",
      "Split a CSND Schoenberg kernel as K = -A + c with A strictly positive "
      "definite and c a positive constant");
  std::string decompose_in;
  cmd_decompose->add_option("--in", decompose_in, "Kernel file (.json or .csv)")
      ->required();
  cmd_decompose->callback([&] {
    csnd::KernelMatrix k = csnd::load_kernel_file(decompose_in);
    print_json(csnd::decomposition_to_json(
        csnd::spd_shift_decompose(k, csnd::TolerancePolicy{rel_eps})));
  });

  // ---- graph -------------------------------------------------------------
  auto* cmd_graph = app.add_subcommand(
      "graph",
      "Evaluate a graph expression, e.g. \"wedge(K3@0, C5@2)\", "
      "\"comb(K3, P4@0)\", \"free(K2@0, K2@0, 3)\", \"tree(0,0,1)\"");
  std::string graph_expr;
  bool graph_metric = false;
  cmd_graph->add_option("expr", graph_expr, "Graph expression")->required();
  cmd_graph->add_flag("--metric", graph_metric,
                      "Print the shortest-path kernel as JSON instead of the "
                      "edge list");
  cmd_graph->callback([&] {
    csnd::Graph g = csnd::parse_graph_expr(graph_expr);
    if (graph_metric)
      print_json(csnd::kernel_to_json(csnd::path_metric(g)));
    else
      std::cout << csnd::graph_to_edge_list(g);
  });

  // ---- cayley ------------------------------------------------------------
  auto* cmd_cayley = app.add_subcommand(
      "cayley",
      "Ball of a Cayley graph around the identity (edge list with basepoint "
      "\"1\"), or the word-metric verdict for a presentation");
  std::string cayley_in;
  std::vector<int> cayley_amalgam;
  int cayley_free = 0, cayley_radius = -1;
  bool cayley_metric = false, cayley_verdict = false;
  auto* opt_in = cmd_cayley->add_option(
      "--in", cayley_in,
      "Presentation file (.json): Coxeter group, or free group when kind is "
      "artin and every coefficient is infinite");
  auto* opt_amalgam =
      cmd_cayley
          ->add_option("--amalgam", cayley_amalgam,
                       "m n d: cyclic amalgam Z_m * Z_n glued along the "
                       "common subgroup of index d (d divides m and n)")
          ->expected(3);
  auto* opt_free = cmd_cayley->add_option(
      "--free", cayley_free, "Free group on this many generators");
  opt_in->excludes(opt_amalgam)->excludes(opt_free);
  opt_amalgam->excludes(opt_free);
  cmd_cayley->add_option("--radius", cayley_radius, "Ball radius (>= 0)");
  cmd_cayley->add_flag("--metric", cayley_metric,
                       "Print the word-metric kernel of the ball as JSON "
                       "instead of the edge list");
  cmd_cayley->add_flag("--verdict", cayley_verdict,
                       "Print whether the full word metric is CSND (requires "
                       "--in; no ball is built)");
  cmd_cayley->callback([&] {
    if (cayley_verdict) {
      if (cayley_in.empty())
        throw csnd::ValidationError("--verdict requires --in PRESENTATION");
      csnd::GroupPresentation p =
          csnd::presentation_from_json(csnd::load_json_file(cayley_in));
      print_json(verdict_to_json(csnd::word_metric_csnd_verdict(p)));
      return;
    }
    if (cayley_radius < 0)
      throw csnd::ValidationError("--radius is required to build a ball");
    csnd::CayleyBall ball;
    if (!cayley_in.empty()) {
      csnd::GroupPresentation p =
          csnd::presentation_from_json(csnd::load_json_file(cayley_in));
      if (p.kind == csnd::GroupPresentation::Kind::artin && p.is_free())
        ball = csnd::free_group_ball(p.rank(), cayley_radius);
      else
        ball = csnd::coxeter_cayley_ball(p, cayley_radius);
    } else if (!cayley_amalgam.empty()) {
      ball = csnd::amalgam_cyclic_ball(cayley_amalgam[0], cayley_amalgam[1],
                                       cayley_amalgam[2], cayley_radius);
    } else if (cayley_free > 0) {
      ball = csnd::free_group_ball(cayley_free, cayley_radius);
    } else {
      throw csnd::ValidationError(
          "one of --in, --amalgam, --free is required");
    }
    if (cayley_metric)
      print_json(csnd::kernel_to_json(csnd::path_metric(ball.graph)));
    else
      std::cout << "# radius " << ball.radius << ", " << ball.exactness
                << "\n"
                << csnd::graph_to_edge_list(ball.graph);
  });

  // ---- continuous --------------------------------------------------------
  auto* cmd_continuous = app.add_subcommand(
      "continuous", "Kernels sampled from continuous metric spaces");
  cmd_continuous->require_subcommand(1);

  auto* cmd_euclidean = cmd_continuous->add_subcommand(
      "euclidean", "Euclidean (unsquared) distance kernel of a point file");
  std::string euclidean_in;
  cmd_euclidean->add_option("--in", euclidean_in, "Point file (.json)")
      ->required();
  cmd_euclidean->callback([&] {
    csnd::PointConfig p =
        csnd::points_from_json(csnd::load_json_file(euclidean_in));
    print_json(csnd::kernel_to_json(csnd::euclidean_kernel(p)));
  });

  auto* cmd_circle = cmd_continuous->add_subcommand(
      "circle", "Arc-length kernel of circle samples");
  std::string circle_in;
  cmd_circle
      ->add_option("--in", circle_in,
                   "Sample file (.json): {\"angles\": [...], \"L\": number}")
      ->required();
  cmd_circle->callback([&] {
    csnd::CircleSample s =
        csnd::circle_from_json(csnd::load_json_file(circle_in));
    print_json(csnd::kernel_to_json(
        csnd::circle_kernel(s.angles, s.circumference)));
  });

  auto* cmd_tree = cmd_continuous->add_subcommand(
      "tree", "Shortest-path kernel of a positively weighted tree");
  std::string tree_in;
  cmd_tree->add_option("--in", tree_in, "Edge-list file (u v weight lines)")
      ->required();
  cmd_tree->callback([&] {
    print_json(csnd::kernel_to_json(
        csnd::weighted_tree_kernel(csnd::load_graph_file(tree_in))));
  });

  auto* cmd_fourier = cmd_continuous->add_subcommand(
      "fourier",
      "Quadrature check: the Fourier transform of exp(-2*pi*t|x|) at xi "
      "against the closed form t/(pi*(t^2+xi^2))");
  double fourier_t = 1.0, fourier_xi = 0.0;
  cmd_fourier->add_option("--t", fourier_t, "Decay parameter t > 0")
      ->required();
  cmd_fourier->add_option("--xi", fourier_xi, "Frequency (default 0)");
  cmd_fourier->callback([&] {
    print_json(fourier_to_json(csnd::fourier_identity_check(fourier_t,
                                                            fourier_xi)));
  });

  // ---- demo --------------------------------------------------------------
  auto* cmd_demo = app.add_subcommand(
      "demo",
      "Regenerate the example catalogue and print a pass/fail table");
  cmd_demo->callback([&] { exit_code = run_demo(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const csnd::HypothesisError& e) {
    print_json({{"error", "hypothesis-not-met"}, {"reason", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
