#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli.h"

namespace {

using lbdiv::cli::InputFormat;
using lbdiv::cli::JobConfig;

void AddInputOptions(CLI::App* sub, JobConfig& c) {
  sub->add_option("-i,--input", c.input_path, "Score matrix (rows = vectors)")
      ->check(CLI::ExistingFile);
  sub->add_flag("--header", c.header, "CSV input has a header row");
  const std::map<std::string, InputFormat> formats{
      {"auto", InputFormat::kAuto}, {"csv", InputFormat::kCsv},
      {"json", InputFormat::kJson}};
  sub->add_option("--format", c.format, "auto, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void AddFunctionOption(CLI::App* sub, JobConfig& c) {
  sub->add_option("-f,--function", c.function_spec,
                  "Submodular function as inline JSON or a JSON file. Default: "
                  "cardinality_concave with increments n, n-1, ..., 1");
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig c;
  try {
    c.seed = lbdiv::cli::DefaultSeed();
  } catch (const lbdiv::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Lovasz-Bregman divergences, rank aggregation and clustering"};
  app.require_subcommand(1);
  app.add_option("-o,--output", c.output_path, "Write JSON here instead of stdout");
  app.set_version_flag("--version", LBDIV_VERSION);

  auto* divergence = app.add_subcommand(
      "divergence", "LB divergence of every input vector to a permutation");
  AddInputOptions(divergence, c);
  AddFunctionOption(divergence, c);
  divergence->add_option("--sigma", c.sigma, "Permutation, 1-based items")
      ->delimiter(',')
      ->required();

  auto* aggregate =
      app.add_subcommand("aggregate", "Mean-ordering representative of the rows");
  AddInputOptions(aggregate, c);
  AddFunctionOption(aggregate, c);

  auto* cluster = app.add_subcommand("cluster", "k-means with permutation centers");
  AddInputOptions(cluster, c);
  AddFunctionOption(cluster, c);
  cluster->add_option("--k", c.k, "Number of clusters")->capture_default_str();
  cluster->add_option("--seed", c.seed, "Initialization seed (env LBDIV_SEED)");
  cluster->add_option("--max-iter", c.max_iter)->capture_default_str();

  auto* ndcg = app.add_subcommand("ndcg", "NDCG loss of a ranking and its LB form");
  AddInputOptions(ndcg, c);
  ndcg->add_option("--ranking", c.sigma, "Permutation, 1-based items")
      ->delimiter(',')
      ->required();
  ndcg->add_option("--k", c.cutoff, "Cutoff (default: all items)");

  auto* auc = app.add_subcommand("auc", "Pairwise AUC loss and its LB form");
  auc->add_option("--ranking", c.sigma, "Permutation, 1-based items")
      ->delimiter(',')
      ->required();
  auc->add_option("--good", c.good, "Good items")->delimiter(',')->required();
  auc->add_option("--bad", c.bad, "Bad items")->delimiter(',')->required();

  auto* mallows_z =
      app.add_subcommand("mallows-z", "Monte Carlo partition function estimate");
  AddFunctionOption(mallows_z, c);
  mallows_z->add_option("--theta", c.theta)->capture_default_str();
  mallows_z->add_option("--sigma", c.sigma, "Center permutation, 1-based items")
      ->delimiter(',')
      ->required();
  mallows_z->add_option("--samples", c.samples)->capture_default_str();
  mallows_z->add_option("--seed", c.seed, "Sampling seed (env LBDIV_SEED)");

  auto* mallows_pmf = app.add_subcommand(
      "mallows-pmf", "Extended Mallows distribution over permutations");
  AddInputOptions(mallows_pmf, c);
  AddFunctionOption(mallows_pmf, c);
  mallows_pmf->add_option("--theta-list", c.theta_list,
                          "One concentration per row (default: all 1)")
      ->delimiter(',');

  auto* check = app.add_subcommand("check-submodular",
                                   "Exhaustive submodularity and monotonicity check");
  AddFunctionOption(check, c);

  auto* metrics =
      app.add_subcommand("metrics", "Kendall tau, footrule and rank correlation");
  metrics->add_option("--sigma", c.sigma)->delimiter(',')->required();
  metrics->add_option("--pi", c.pi)->delimiter(',')->required();

  CLI11_PARSE(app, argc, argv);
  c.command = app.get_subcommands().front()->get_name();

  const lbdiv::cli::RunResult result = lbdiv::cli::Run(c);
  const std::string text = result.document.dump(2);
  if (c.output_path.empty() || result.exit_code != 0) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(c.output_path);
    if (!out) {
      std::cerr << "cannot write '" << c.output_path << "'\n";
      return 1;
    }
    out << text << '\n';
  }
  return result.exit_code;
}
