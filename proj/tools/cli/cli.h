#ifndef LBDIV_TOOLS_CLI_H_
#define LBDIV_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lbdiv/lbdiv.h"

namespace lbdiv::cli {

using Json = nlohmann::ordered_json;

enum class InputFormat { kAuto, kCsv, kJson };

// Everything a single invocation needs. Item lists are 1-based, as on the
// command line.
struct JobConfig {
  std::string command;
  std::string input_path;
  std::string output_path;
  InputFormat format = InputFormat::kAuto;
  bool header = false;
  // Inline JSON or a path to a JSON file; empty means the default function.
  std::string function_spec;
  std::uint64_t seed = 0;

  std::vector<long long> sigma;
  std::vector<long long> pi;
  std::vector<long long> good;
  std::vector<long long> bad;
  std::size_t k = 2;
  std::size_t cutoff = 0;  // 0: all items
  std::size_t max_iter = 100;
  std::size_t samples = 100000;
  double theta = 1.0;
  std::vector<double> theta_list;
};

struct RunResult {
  int exit_code = 0;
  Json document;
};

// Executes one command. Never throws for bad input: failures come back as
// {"error": {"code", "message"}} with a nonzero exit code.
RunResult Run(const JobConfig& config);

Json ConfigToJson(const JobConfig& config);

// Rows are vectors, columns items.
ScoreCollection ParseScoresText(const std::string& text, InputFormat format,
                                bool header);
ScoreCollection ParseScores(const std::string& path, InputFormat format,
                            bool header);
Json ScoresToJson(const ScoreCollection& scores);

// Tagged function description, e.g.
//   {"family": "cardinality_concave", "increments": [3, 2, 1]}
// `n` fills in or checks the ground-set size.
SetFunction ParseFunction(const Json& spec, std::optional<std::size_t> n);
SetFunction ResolveFunction(const std::string& spec_or_path,
                            std::optional<std::size_t> n);

// Cardinality function with increments n, n-1, ..., 1.
SetFunction DefaultFunction(std::size_t n);

// Seed from LBDIV_SEED, or 0.
std::uint64_t DefaultSeed();

}  // namespace lbdiv::cli

#endif  // LBDIV_TOOLS_CLI_H_
