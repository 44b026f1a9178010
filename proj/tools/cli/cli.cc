#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#ifndef LBDIV_VERSION
#define LBDIV_VERSION "unknown"
#endif

namespace lbdiv::cli {

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseCell(std::string_view cell, std::size_t row, std::size_t column) {
  cell = Trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || end != cell.data() + cell.size()) {
    throw Error(ErrorCode::kParse, "row " + std::to_string(row) + ", column " +
                                       std::to_string(column) +
                                       ": not a number: '" + std::string(cell) +
                                       "'");
  }
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidScore, "row " + std::to_string(row) +
                                              ", column " +
                                              std::to_string(column) +
                                              ": non-finite value");
  }
  return v;
}

ScoreCollection ParseCsv(const std::string& text, bool header) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool skipped_header = !header;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }
    std::vector<double> row;
    std::string_view rest(line);
    for (std::size_t column = 1;; ++column) {
      const auto comma = rest.find(',');
      row.push_back(ParseCell(rest.substr(0, comma), line_no, column));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::kParse,
                  "row " + std::to_string(line_no) + " has " +
                      std::to_string(row.size()) + " values, expected " +
                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, "no score rows");
  return ScoreCollection(std::move(rows));
}

ScoreCollection ParseJsonScores(const std::string& text) {
  const Json doc = Json::parse(text);
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorCode::kParse, "expected a nonempty array of arrays");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const Json& row = doc[r];
    if (!row.is_array()) {
      throw Error(ErrorCode::kParse, "row " + std::to_string(r + 1) +
                                         " is not an array");
    }
    std::vector<double> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) {
        throw Error(ErrorCode::kParse, "row " + std::to_string(r + 1) +
                                           ", column " + std::to_string(c + 1) +
                                           ": not a number");
      }
      values.push_back(row[c].get<double>());
    }
    if (!rows.empty() && values.size() != rows.front().size()) {
      throw Error(ErrorCode::kParse,
                  "row " + std::to_string(r + 1) + " has " +
                      std::to_string(values.size()) + " values, expected " +
                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(values));
  }
  return ScoreCollection(std::move(rows));
}

std::vector<double> Numbers(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw Error(ErrorCode::kInvalidFunction,
                std::string("function spec needs an array '") + field + "'");
  }
  std::vector<double> out;
  for (const Json& v : j[field]) {
    if (!v.is_number()) {
      throw Error(ErrorCode::kInvalidFunction,
                  std::string("'") + field + "' must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

Json OneBased(const Permutation& p) { return p.ToOneBased(); }

std::size_t ZeroBasedItem(long long item, std::size_t n) {
  if (item < 1 || static_cast<std::size_t>(item) > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "item " + std::to_string(item) + " out of range 1.." +
                    std::to_string(n));
  }
  return static_cast<std::size_t>(item - 1);
}

Permutation RequirePermutation(const std::vector<long long>& items,
                               const char* flag) {
  if (items.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(flag) + " is required");
  }
  return Permutation::FromOneBased(items);
}

ScoreCollection Input(const JobConfig& c) {
  if (c.input_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--input is required");
  }
  return ParseScores(c.input_path, c.format, c.header);
}

SetFunction FunctionFor(const JobConfig& c, std::size_t n) {
  return c.function_spec.empty() ? DefaultFunction(n)
                                 : ResolveFunction(c.function_spec, n);
}

Json CmdDivergence(const JobConfig& c) {
  const ScoreCollection x = Input(c);
  const SetFunction f = FunctionFor(c, x.dimension());
  const Permutation sigma = RequirePermutation(c.sigma, "--sigma");
  Json values = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    values.push_back(LbDivergence(f, x[i], sigma));
  }
  return {{"function", f.family_name()},
          {"sigma", OneBased(sigma)},
          {"divergences", values}};
}

Json CmdAggregate(const JobConfig& c) {
  const ScoreCollection x = Input(c);
  const SetFunction f = FunctionFor(c, x.dimension());
  const Permutation rep = Representative(x);
  return {{"mean", x.Mean()},
          {"representative", OneBased(rep)},
          {"confidence", Confidence(x)},
          {"objective", AggregationObjective(x, f, rep)}};
}

Json CmdCluster(const JobConfig& c) {
  const ScoreCollection x = Input(c);
  const SetFunction f = FunctionFor(c, x.dimension());
  const ClusteringResult r =
      KMeansCluster(x, f, {.k = c.k, .seed = c.seed, .max_iter = c.max_iter});
  Json assignments = Json::array();
  for (std::size_t a : r.assignments) assignments.push_back(a + 1);
  Json reps = Json::array();
  for (const Permutation& p : r.representatives) reps.push_back(OneBased(p));
  return {{"assignments", assignments},
          {"representatives", reps},
          {"objective_trace", r.objective_trace},
          {"iterations", r.iterations},
          {"seed", r.seed}};
}

Json CmdNdcg(const JobConfig& c) {
  const ScoreCollection x = Input(c);
  if (x.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "ndcg expects a single relevance row, got " +
                    std::to_string(x.size()));
  }
  const std::size_t n = x.dimension();
  const std::size_t k = c.cutoff == 0 ? n : c.cutoff;
  const Permutation sigma = RequirePermutation(c.sigma, "--ranking");
  const std::vector<double> discount = LogDiscount(n);
  const double loss = NdcgLoss(x[0], sigma, k, discount);
  const NdcgBridge bridge = NdcgAsLb(x[0], k, discount);
  return {{"loss", loss},
          {"lb_value", LbDivergence(bridge.function, x[0], sigma)},
          {"scale", bridge.scale},
          {"k", k}};
}

Json CmdAuc(const JobConfig& c) {
  const Permutation sigma = RequirePermutation(c.sigma, "--ranking");
  const std::size_t n = sigma.size();
  GoodBadSplit split;
  for (long long g : c.good) split.good.push_back(ZeroBasedItem(g, n));
  for (long long b : c.bad) split.bad.push_back(ZeroBasedItem(b, n));
  const double loss = AucLoss(sigma, split);
  const AucBridge bridge = AucAsLb(n, split);
  return {{"loss", loss},
          {"lb_value", LbDivergence(bridge.function, bridge.scores, sigma)},
          {"scale", bridge.scale}};
}

Json CmdMallowsZ(const JobConfig& c) {
  const Permutation sigma = RequirePermutation(c.sigma, "--sigma");
  const MallowsModel model{c.theta, FunctionFor(c, sigma.size())};
  const PartitionEstimate z = EstimatePartition(model, sigma, c.samples, c.seed);
  return {{"estimate", z.estimate},
          {"std_error", z.std_error},
          {"samples", z.samples},
          {"theta", c.theta},
          {"seed", c.seed}};
}

Json CmdMallowsPmf(const JobConfig& c) {
  const ScoreCollection x = Input(c);
  const SetFunction f = FunctionFor(c, x.dimension());
  const std::vector<double> thetas =
      c.theta_list.empty() ? std::vector<double>(x.size(), 1.0) : c.theta_list;
  const PermutationPmf pmf = ExtendedMallowsPmf(thetas, x, f);
  Json entries = Json::array();
  for (const auto& e : pmf) {
    entries.push_back(
        {{"permutation", OneBased(e.permutation)}, {"probability", e.probability}});
  }
  const PermutationProbability& mode = Mode(pmf);
  return {{"thetas", thetas},
          {"pmf", entries},
          {"mode", {{"permutation", OneBased(mode.permutation)},
                    {"probability", mode.probability}}}};
}

Json CmdCheckSubmodular(const JobConfig& c) {
  if (c.function_spec.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--function is required");
  }
  const SetFunction f = ResolveFunction(c.function_spec, std::nullopt);
  return {{"family", f.family_name()},
          {"n", f.size()},
          {"submodular", IsSubmodular(f)},
          {"monotone", IsMonotone(f)}};
}

Json CmdMetrics(const JobConfig& c) {
  const Permutation sigma = RequirePermutation(c.sigma, "--sigma");
  const Permutation pi = RequirePermutation(c.pi, "--pi");
  return {{"kendall_tau", KendallTau(sigma, pi)},
          {"spearman_footrule", SpearmanFootrule(sigma, pi)},
          {"rank_correlation", RankCorrelation(sigma, pi)}};
}

Json Dispatch(const JobConfig& c) {
  if (c.command == "divergence") return CmdDivergence(c);
  if (c.command == "aggregate") return CmdAggregate(c);
  if (c.command == "cluster") return CmdCluster(c);
  if (c.command == "ndcg") return CmdNdcg(c);
  if (c.command == "auc") return CmdAuc(c);
  if (c.command == "mallows-z") return CmdMallowsZ(c);
  if (c.command == "mallows-pmf") return CmdMallowsPmf(c);
  if (c.command == "check-submodular") return CmdCheckSubmodular(c);
  if (c.command == "metrics") return CmdMetrics(c);
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + c.command + "'");
}

const char* FormatName(InputFormat f) {
  switch (f) {
    case InputFormat::kCsv:
      return "csv";
    case InputFormat::kJson:
      return "json";
    case InputFormat::kAuto:
      break;
  }
  return "auto";
}

Json ErrorDocument(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

SetFunction DefaultFunction(std::size_t n) {
  std::vector<double> inc(n);
  for (std::size_t i = 0; i < n; ++i) inc[i] = static_cast<double>(n - i);
  return SetFunction::MakeCardinality(std::move(inc));
}

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("LBDIV_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view s(env);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "LBDIV_SEED is not an unsigned integer");
  }
  return seed;
}

ScoreCollection ParseScoresText(const std::string& text, InputFormat format,
                                bool header) {
  if (format == InputFormat::kAuto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string::npos && text[first] == '[' ? InputFormat::kJson
                                                                : InputFormat::kCsv;
  }
  if (format == InputFormat::kJson) return ParseJsonScores(text);
  return ParseCsv(text, header);
}

ScoreCollection ParseScores(const std::string& path, InputFormat format,
                            bool header) {
  if (format == InputFormat::kAuto &&
      std::filesystem::path(path).extension() == ".json") {
    format = InputFormat::kJson;
  }
  return ParseScoresText(ReadFile(path), format, header);
}

Json ScoresToJson(const ScoreCollection& scores) { return scores.vectors(); }

SetFunction ParseFunction(const Json& spec, std::optional<std::size_t> n) {
  if (!spec.is_object() || !spec.contains("family") ||
      !spec["family"].is_string()) {
    throw Error(ErrorCode::kInvalidFunction,
                "function spec must be an object with a string 'family'");
  }
  if (spec.contains("n")) {
    const std::size_t declared = spec["n"].get<std::size_t>();
    if (n && *n != declared) {
      throw Error(ErrorCode::kSizeMismatch,
                  "function declared for " + std::to_string(declared) +
                      " items, data has " + std::to_string(*n));
    }
    n = declared;
  }
  const std::string family = spec["family"].get<std::string>();
  std::optional<SetFunction> f;
  if (family == "graph_cut") {
    if (!spec.contains("weights") || !spec["weights"].is_array()) {
      throw Error(ErrorCode::kInvalidFunction, "graph_cut needs 'weights' rows");
    }
    f = SetFunction::MakeGraphCut(SquareMatrix::FromRows(
        spec["weights"].get<std::vector<std::vector<double>>>()));
  } else if (family == "complete_graph_cut") {
    if (!n) {
      throw Error(ErrorCode::kInvalidFunction, "complete_graph_cut needs 'n'");
    }
    f = SetFunction::MakeCompleteGraphCut(*n);
  } else if (family == "cardinality_concave") {
    f = SetFunction::MakeCardinality(Numbers(spec, "increments"));
  } else if (family == "truncated_cardinality") {
    if (!spec.contains("cutoff")) {
      throw Error(ErrorCode::kInvalidFunction,
                  "truncated_cardinality needs 'cutoff'");
    }
    f = SetFunction::MakeTruncatedCardinality(Numbers(spec, "increments"),
                                              spec["cutoff"].get<std::size_t>());
  } else if (family == "modular") {
    f = SetFunction::MakeModular(Numbers(spec, "weights"));
  } else if (family == "sum") {
    if (!spec.contains("terms") || !spec["terms"].is_array()) {
      throw Error(ErrorCode::kInvalidFunction, "sum needs a 'terms' array");
    }
    std::vector<SetFunction> terms;
    for (const Json& t : spec["terms"]) terms.push_back(ParseFunction(t, n));
    f = SetFunction::MakeSum(std::move(terms));
  } else {
    throw Error(ErrorCode::kInvalidFunction, "unknown family '" + family + "'");
  }
  if (n && f->size() != *n) {
    throw Error(ErrorCode::kSizeMismatch,
                family + " has " + std::to_string(f->size()) +
                    " items, data has " + std::to_string(*n));
  }
  return *f;
}

SetFunction ResolveFunction(const std::string& spec_or_path,
                            std::optional<std::size_t> n) {
  const auto first = spec_or_path.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && spec_or_path[first] == '{';
  const std::string text = inline_json ? spec_or_path : ReadFile(spec_or_path);
  return ParseFunction(Json::parse(text), n);
}

Json ConfigToJson(const JobConfig& c) {
  Json function = nullptr;
  if (!c.function_spec.empty()) {
    const auto first = c.function_spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && c.function_spec[first] == '{') {
      function = Json::parse(c.function_spec, nullptr, false);
      if (function.is_discarded()) function = c.function_spec;
    } else {
      function = c.function_spec;
    }
  }
  return {{"input", c.input_path},
          {"format", FormatName(c.format)},
          {"header", c.header},
          {"function", function},
          {"seed", c.seed},
          {"sigma", c.sigma},
          {"pi", c.pi},
          {"good", c.good},
          {"bad", c.bad},
          {"k", c.k},
          {"cutoff", c.cutoff},
          {"max_iter", c.max_iter},
          {"samples", c.samples},
          {"theta", c.theta},
          {"theta_list", c.theta_list}};
}

RunResult Run(const JobConfig& config) {
  RunResult out;
  try {
    Json result = Dispatch(config);
    out.document = {{"command", config.command},
                    {"config", ConfigToJson(config)},
                    {"result", std::move(result)},
                    {"version", LBDIV_VERSION}};
  } catch (const Error& e) {
    out.exit_code = 1;
    out.document = ErrorDocument(std::string(ErrorCodeName(e.code())), e.what());
  } catch (const Json::exception& e) {
    out.exit_code = 1;
    out.document = ErrorDocument("parse", e.what());
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.document = ErrorDocument("internal", e.what());
  }
  return out;
}

}  // namespace lbdiv::cli
