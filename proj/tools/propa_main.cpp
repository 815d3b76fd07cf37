#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "propa/covers.hpp"
#include "propa/dimension.hpp"
#include "propa/io.hpp"
#include "propa/spaces.hpp"
#include "propa/types.hpp"
#include "propa/witness.hpp"

namespace {

using namespace propa;

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      const int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      throw validation_error(flag + ": expected a comma-separated integer list, got '" + text +
                             "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw validation_error(flag + ": empty list");
  return out;
}

struct CommonPaths {
  std::string in = "-";
  std::string out = "-";
};

void add_paths(CLI::App* cmd, CommonPaths& paths, bool with_input) {
  if (with_input) {
    cmd->add_option("--in", paths.in, "Input file ('-' for stdin)")->capture_default_str();
  }
  cmd->add_option("--out", paths.out, "Output file ('-' for stdout)")->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Finite-metric-space toolkit: covers, stats, averaging witnesses, dimension bounds"};
  app.require_subcommand(1);

  // gen-space ---------------------------------------------------------
  auto* gen_space = app.add_subcommand("gen-space", "Generate a space document");
  std::string grid_arg;
  std::string tree_arg;
  std::string graph_file;
  CommonPaths gen_space_paths;
  auto* grid_opt = gen_space->add_option("--grid", grid_arg, "Grid axis lengths d1[,d2,...]");
  auto* tree_opt = gen_space->add_option("--tree", tree_arg, "Complete tree as arity,depth");
  auto* graph_opt =
      gen_space->add_option("--graph", graph_file, "Edge-list file (vertex count, then edges)");
  grid_opt->excludes(tree_opt)->excludes(graph_opt);
  tree_opt->excludes(graph_opt);
  add_paths(gen_space, gen_space_paths, false);

  // gen-cover ---------------------------------------------------------
  auto* gen_cover = app.add_subcommand("gen-cover", "Generate a cover for a space document");
  int interval_ell = 0;
  int annuli_ell = 0;
  int net_radius = 0;
  CommonPaths gen_cover_paths;
  auto* interval_opt =
      gen_cover->add_option("--interval", interval_ell, "Staggered grid blocks of width parameter L");
  auto* annuli_opt =
      gen_cover->add_option("--tree-annuli", annuli_ell, "Tree depth bands of width parameter L");
  auto* net_opt = gen_cover->add_option("--net", net_radius, "Greedy net cover with radius R");
  interval_opt->excludes(annuli_opt)->excludes(net_opt);
  annuli_opt->excludes(net_opt);
  add_paths(gen_cover, gen_cover_paths, true);

  // stats -------------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "Multiplicity, mesh and ball-Lebesgue statistics");
  CommonPaths stats_paths;
  add_paths(stats_cmd, stats_paths, true);

  // witness -----------------------------------------------------------
  auto* witness_cmd =
      app.add_subcommand("witness", "Build and audit the averaging witness on a cover document");
  int witness_n = 0;
  int witness_R = 0;
  bool no_bound = false;
  CommonPaths witness_paths;
  witness_cmd->add_option("--n", witness_n, "Scale n")->required();
  witness_cmd->add_option("--R", witness_R, "Displacement bound R")->required();
  witness_cmd->add_flag("--no-bound", no_bound, "Skip the inequality-chain audit");
  add_paths(witness_cmd, witness_paths, true);

  // sweep -------------------------------------------------------------
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Witness a generated cover family over a list of scales");
  std::string sweep_n_list;
  int sweep_R = 0;
  int ell_coeff = 0;
  CommonPaths sweep_paths;
  sweep_cmd->add_option("--n", sweep_n_list, "Comma-separated scales")->required();
  sweep_cmd->add_option("--R", sweep_R, "Displacement bound R")->required();
  sweep_cmd->add_option("--ell-rule", ell_coeff, "Cover width per scale: L = coeff * n")->required();
  add_paths(sweep_cmd, sweep_paths, true);

  // dim ---------------------------------------------------------------
  auto* dim_cmd = app.add_subcommand("dim", "Dimension-function estimate at a scale");
  int dim_lambda = 0;
  int dim_mesh_cap = 0;
  bool dim_exact = false;
  CommonPaths dim_paths;
  dim_cmd->add_option("--lambda", dim_lambda, "Required Lebesgue number")->required();
  dim_cmd->add_option("--mesh-cap", dim_mesh_cap, "Mesh cap")->required();
  dim_cmd->add_flag("--exact", dim_exact, "Also run the exhaustive tiny-space search");
  add_paths(dim_cmd, dim_paths, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help and friends
    std::cerr << err.what() << "\n";
    return 1;
  }

  if (gen_space->parsed()) {
    FiniteMetricSpace space = [&] {
      if (grid_opt->count() > 0) return grid_space(parse_int_list(grid_arg, "--grid"));
      if (tree_opt->count() > 0) {
        const auto parts = parse_int_list(tree_arg, "--tree");
        if (parts.size() != 2) throw validation_error("--tree: expected arity,depth");
        return tree_space(parts[0], parts[1]);
      }
      if (graph_opt->count() > 0) return parse_graph_edge_list(read_input(graph_file));
      throw validation_error("gen-space needs one of --grid, --tree, --graph");
    }();
    write_output(gen_space_paths.out, space_doc(space));
    return 0;
  }

  if (gen_cover->parsed()) {
    const FiniteMetricSpace space = parse_space_doc(read_input(gen_cover_paths.in));
    Cover cover = [&] {
      if (interval_opt->count() > 0) return interval_cover(space, interval_ell);
      if (annuli_opt->count() > 0) return tree_annuli_cover(space, annuli_ell);
      if (net_opt->count() > 0) return greedy_net_cover(space, net_radius);
      throw validation_error("gen-cover needs one of --interval, --tree-annuli, --net");
    }();
    write_output(gen_cover_paths.out, cover_doc(space, cover));
    return 0;
  }

  if (stats_cmd->parsed()) {
    const auto [space, cover] = parse_cover_doc(read_input(stats_paths.in));
    write_output(stats_paths.out, stats_doc(cover_stats(space, cover)));
    return 0;
  }

  if (witness_cmd->parsed()) {
    const auto [space, cover] = parse_cover_doc(read_input(witness_paths.in));
    const WitnessReport report =
        witness_report(space, cover, WitnessParams{witness_n, witness_R}, !no_bound);
    write_output(witness_paths.out, witness_doc(report));
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const FiniteMetricSpace space = parse_space_doc(read_input(sweep_paths.in));
    if (ell_coeff < 1) throw validation_error("--ell-rule: coefficient must be >= 1");
    std::vector<std::pair<int, Cover>> family;
    for (const int n : parse_int_list(sweep_n_list, "--n")) {
      if (n < 1) throw validation_error("--n: scales must be >= 1");
      if (space.kind() == SpaceKind::grid) {
        family.emplace_back(n, interval_cover(space, ell_coeff * n));
      } else if (space.kind() == SpaceKind::tree) {
        family.emplace_back(n, tree_annuli_cover(space, ell_coeff * n));
      } else {
        throw validation_error("sweep needs a grid or tree space (no width rule for plain graphs)");
      }
    }
    write_output(sweep_paths.out, bound_curve_csv(bound_curve(space, family, sweep_R)));
    return 0;
  }

  if (dim_cmd->parsed()) {
    const FiniteMetricSpace space = parse_space_doc(read_input(dim_paths.in));
    DimEstimate estimate = dim_upper(space, DimQuery{dim_lambda, dim_mesh_cap});
    if (dim_exact) estimate.exact = dim_exact_tiny(space, DimQuery{dim_lambda, dim_mesh_cap});
    write_output(dim_paths.out, dim_doc(estimate));
    return 0;
  }

  std::cerr << "no command given\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const precondition_error& err) {
    std::cerr << "precondition failed: " << err.what() << "\n";
    return 2;
  } catch (const validation_error& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
