#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ged/edit_costs.hpp"
#include "ged/errors.hpp"
#include "ged/exact.hpp"
#include "ged/experiment.hpp"
#include "ged/io.hpp"
#include "ged/synthetic.hpp"

namespace {

constexpr int kInputError = 2;

struct RunOptions {
  std::string dataset;
  std::string format = "text";
  std::string algorithm = "k-refine";
  std::size_t k = 2;
  std::size_t kappa = 40;
  double rho = 1.0;
  std::size_t loops = 0;
  double eta = 0.0;
  std::string grid;
  double lower_bound = 0.0;
  std::size_t beam = 5;
  std::size_t orderings = 20;
  double epsilon = 1e-3;
  std::size_t max_iters = 100;
  std::string costs = "constant:3,1,1";
  std::string init = "random";
  std::string cost_mode = "localized";
  bool no_dummy = false;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  bool deterministic = false;
  bool seed_witness = false;
  bool no_shuffled = false;
  std::string out;
};

struct ExactOptions {
  std::string dataset;
  std::string format = "text";
  std::string costs = "constant:3,1,1";
  std::string out;
};

struct GenOptions {
  std::size_t count = 10;
  std::size_t nodes = 10;
  double density = 0.3;
  std::size_t alphabet = 4;
  std::size_t edge_alphabet = 1;
  std::uint64_t seed = 0;
  std::string prefix = "g";
  std::string out;
};

/// Writes to the file at `path`, or stdout when empty.
template <typename Writer>
void emit(const std::string& path, Writer&& writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ged::ParameterError("cannot write " + path);
  writer(file);
}

/// "L:rho,L:rho,..." into grid points.
std::vector<std::pair<std::size_t, double>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::size_t, double>> points;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ged::ParameterError("grid point '" + item + "' is not L:rho");
    try {
      points.emplace_back(std::stoul(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw ged::ParameterError("grid point '" + item + "' is not L:rho");
    }
  }
  if (points.empty()) throw ged::ParameterError("empty grid");
  return points;
}

void run_command(const RunOptions& opt) {
  std::vector<std::string> warnings;
  const auto dataset = ged::load_dataset(opt.dataset, ged::parse_graph_format(opt.format), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  const auto costs = ged::make_cost_model(opt.costs);

  ged::ExperimentConfig base;
  base.algorithm.algorithm = ged::parse_algorithm(opt.algorithm);
  base.algorithm.max_swap_size = opt.k;
  base.algorithm.use_dummy_assignment = !opt.no_dummy;
  if (opt.cost_mode == "localized") {
    base.algorithm.cost_mode = ged::SwapCostMode::kLocalized;
  } else if (opt.cost_mode == "naive") {
    base.algorithm.cost_mode = ged::SwapCostMode::kNaive;
  } else {
    throw ged::ParameterError("unknown cost mode '" + opt.cost_mode + "'");
  }
  if (base.algorithm.algorithm == ged::Algorithm::kKRefine && opt.k < 2) {
    throw ged::ParameterError("--K must be at least 2");
  }
  base.algorithm.beam_width = opt.beam;
  base.algorithm.num_orderings = opt.orderings;
  base.algorithm.epsilon = opt.epsilon;
  base.algorithm.max_iterations = opt.max_iters;
  base.kappa = opt.kappa;
  base.rho = opt.rho;
  base.loops = opt.loops;
  base.eta = opt.eta;
  base.lower_bound = opt.lower_bound;
  base.strategy = ged::parse_init_strategy(opt.init);

  std::vector<ged::ExperimentConfig> grid;
  if (opt.grid.empty()) {
    grid.push_back(base);
  } else {
    for (const auto& [loops, rho] : parse_grid(opt.grid)) {
      grid.push_back(base);
      grid.back().loops = loops;
      grid.back().rho = rho;
    }
  }

  ged::ExperimentOptions options;
  options.seed = opt.seed;
  options.workers = opt.workers;
  options.deterministic = opt.deterministic;
  options.seed_witness = opt.seed_witness;
  options.include_shuffled = !opt.no_shuffled;
  const auto report = ged::run_experiment(dataset, grid, *costs, options);
  emit(opt.out, [&](std::ostream& out) { ged::write_csv(out, report, opt.deterministic); });
  ged::write_summary(std::cerr, report);
}

void exact_command(const ExactOptions& opt) {
  const auto dataset = ged::load_dataset(opt.dataset, ged::parse_graph_format(opt.format));
  const auto costs = ged::make_cost_model(opt.costs);
  emit(opt.out, [&](std::ostream& out) {
    out << "g_id,h_id,ged\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      for (std::size_t j = i + 1; j < dataset.size(); ++j) {
        const auto result = ged::exact_ged(dataset[i], dataset[j], *costs);
        out << dataset[i].id() << ',' << dataset[j].id() << ',' << ged::format_real(result.value) << '\n';
      }
    }
  });
}

void gen_command(const GenOptions& opt) {
  const auto graphs = ged::generate_synthetic_dataset(opt.count, opt.nodes, opt.density, opt.alphabet, opt.seed,
                                                      opt.edge_alphabet, opt.prefix);
  const std::filesystem::path out(opt.out);
  if (!opt.out.empty() && (std::filesystem::is_directory(out) || opt.out.back() == '/')) {
    std::filesystem::create_directories(out);
    for (const auto& g : graphs) {
      emit((out / (g.id() + ".txt")).string(), [&](std::ostream& s) { ged::write_text_graph(s, g); });
    }
    return;
  }
  emit(opt.out, [&](std::ostream& s) {
    for (const auto& g : graphs) ged::write_text_graph(s, g);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph edit distance upper bounds by multistart local search"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Upper bounds for all pairs of a dataset and shuffled copies");
  run_cmd->add_option("--dataset", run.dataset, "Graph file or directory")->required();
  run_cmd->add_option("--format", run.format, "text or gxl")->check(CLI::IsMember({"text", "gxl"}));
  run_cmd->add_option("--algorithm", run.algorithm, "refine, k-refine, ipfp, bp-beam, ibp-beam");
  run_cmd->add_option("--K", run.k, "Maximum swap size for k-refine");
  run_cmd->add_option("--kappa", run.kappa, "Initial solutions");
  run_cmd->add_option("--rho", run.rho, "Fraction of searches that must finish");
  run_cmd->add_option("--loops", run.loops, "RANDPOST loops L");
  run_cmd->add_option("--eta", run.eta, "RANDPOST score weight in [0,1]");
  run_cmd->add_option("--grid", run.grid, "Comma-separated L:rho points, overrides --loops/--rho");
  run_cmd->add_option("--lower-bound", run.lower_bound, "Lower bound used by the score update");
  run_cmd->add_option("--beam", run.beam, "Beam width");
  run_cmd->add_option("--orderings", run.orderings, "Random orderings for ibp-beam");
  run_cmd->add_option("--epsilon", run.epsilon, "IPFP convergence threshold");
  run_cmd->add_option("--max-iters", run.max_iters, "IPFP iteration limit");
  run_cmd->add_option("--costs", run.costs, "constant:<sub,del,ins> or table:<file>");
  run_cmd->add_option("--init", run.init, "random or node-cost-lsape");
  run_cmd->add_option("--cost-mode", run.cost_mode, "localized or naive swap costs");
  run_cmd->add_flag("--no-dummy", run.no_dummy, "Disable the (eps,eps) assignment in k-refine");
  run_cmd->add_option("--seed", run.seed, "Base seed");
  run_cmd->add_option("--workers", run.workers, "Pair-level worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--deterministic", run.deterministic, "Reproducible output; seconds written as zero");
  run_cmd->add_flag("--seed-witness", run.seed_witness, "Start shuffled-copy runs from the permutation witness too");
  run_cmd->add_flag("--no-shuffled", run.no_shuffled, "Skip graph vs shuffled copy rows");
  run_cmd->add_option("--out", run.out, "CSV output file (default stdout)");

  ExactOptions exact;
  auto* exact_cmd = app.add_subcommand("exact", "Brute-force GED for all pairs of small graphs");
  exact_cmd->add_option("--dataset", exact.dataset, "Graph file or directory")->required();
  exact_cmd->add_option("--format", exact.format, "text or gxl")->check(CLI::IsMember({"text", "gxl"}));
  exact_cmd->add_option("--costs", exact.costs, "constant:<sub,del,ins> or table:<file>");
  exact_cmd->add_option("--out", exact.out, "CSV output file (default stdout)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Synthetic random graphs in text format");
  gen_cmd->add_option("--count", gen.count, "Number of graphs");
  gen_cmd->add_option("--nodes", gen.nodes, "Nodes per graph");
  gen_cmd->add_option("--density", gen.density, "Edge probability in [0,1]");
  gen_cmd->add_option("--alphabet", gen.alphabet, "Node label alphabet size");
  gen_cmd->add_option("--edge-alphabet", gen.edge_alphabet, "Edge label alphabet size");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--prefix", gen.prefix, "Graph id prefix");
  gen_cmd->add_option("--out", gen.out, "Output file, or directory for one file per graph (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*run_cmd) run_command(run);
    if (*exact_cmd) exact_command(exact);
    if (*gen_cmd) gen_command(gen);
  } catch (const ged::GedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
