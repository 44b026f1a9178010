#include "lbdiv/set_function.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "lbdiv/error.h"

namespace lbdiv {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireFiniteValues(const std::vector<double>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kInvalidFunction,
                  std::string(what) + " entry " + std::to_string(i + 1) +
                      " is not finite");
    }
  }
}

void RequireNonincreasing(const std::vector<double>& increments) {
  for (std::size_t i = 1; i < increments.size(); ++i) {
    if (increments[i] > increments[i - 1]) {
      throw Error(ErrorCode::kInvalidFunction,
                  "increments must be nonincreasing (concave g), but entry " +
                      std::to_string(i + 1) + " exceeds entry " +
                      std::to_string(i));
    }
  }
}

double PrefixSum(const std::vector<double>& increments, std::size_t count) {
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) total += increments[i];
  return total;
}

// Effective increments when f(X) depends only on |X|; nullopt otherwise.
std::optional<std::vector<double>> CardinalityIncrements(const SetFunction& f) {
  using Result = std::optional<std::vector<double>>;
  return std::visit(
      Overloaded{
          [](const GraphCut&) -> Result { return std::nullopt; },
          [](const CardinalityConcave& c) -> Result { return c.increments; },
          [](const TruncatedCardinality& t) -> Result {
            std::vector<double> inc = t.increments;
            for (std::size_t i = t.cutoff; i < inc.size(); ++i) inc[i] = 0.0;
            return inc;
          },
          [](const Modular& m) -> Result {
            for (double w : m.weights) {
              if (w != m.weights.front()) return std::nullopt;
            }
            const double w = m.weights.empty() ? 0.0 : m.weights.front();
            return std::vector<double>(m.weights.size(), w);
          },
          [&](const SumOf& s) -> Result {
            std::vector<double> total(f.size(), 0.0);
            for (const SetFunction& term : s.terms) {
              auto inc = CardinalityIncrements(term);
              if (!inc) return std::nullopt;
              for (std::size_t i = 0; i < total.size(); ++i) total[i] += (*inc)[i];
            }
            return total;
          },
          [](const GenericOracle&) -> Result { return std::nullopt; },
      },
      f.family());
}

}  // namespace

ItemSet::ItemSet(std::size_t n, std::initializer_list<std::size_t> items)
    : member_(n, 0) {
  for (std::size_t item : items) insert(item);
}

ItemSet ItemSet::FromMask(std::size_t n, std::uint64_t mask) {
  ItemSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

ItemSet ItemSet::All(std::size_t n) {
  ItemSet s(n);
  for (std::size_t i = 0; i < n; ++i) s.insert(i);
  return s;
}

void ItemSet::insert(std::size_t item) {
  if (item >= member_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "item " + std::to_string(item + 1) + " out of range 1.." +
                    std::to_string(member_.size()));
  }
  if (!member_[item]) {
    member_[item] = 1;
    ++count_;
  }
}

void ItemSet::erase(std::size_t item) {
  if (item < member_.size() && member_[item]) {
    member_[item] = 0;
    --count_;
  }
}

SetFunction::SetFunction(std::size_t n, Family family)
    : n_(n), family_(std::make_shared<const Family>(std::move(family))) {}

SetFunction SetFunction::MakeGraphCut(SquareMatrix weights) {
  const std::size_t n = weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::kInvalidFunction,
                    "graph cut weight (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) +
                        ") must be finite and nonnegative");
      }
      if (i == j && w != 0.0) {
        throw Error(ErrorCode::kInvalidFunction,
                    "graph cut weights must have a zero diagonal");
      }
    }
  }
  return SetFunction(n, GraphCut{std::move(weights)});
}

SetFunction SetFunction::MakeCompleteGraphCut(std::size_t n) {
  SquareMatrix d(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0.0;
  return MakeGraphCut(std::move(d));
}

SetFunction SetFunction::MakeCardinality(std::vector<double> increments) {
  RequireFiniteValues(increments, "increment");
  RequireNonincreasing(increments);
  const std::size_t n = increments.size();
  return SetFunction(n, CardinalityConcave{std::move(increments)});
}

SetFunction SetFunction::MakeTruncatedCardinality(
    std::vector<double> increments, std::size_t cutoff) {
  RequireFiniteValues(increments, "increment");
  RequireNonincreasing(increments);
  const std::size_t n = increments.size();
  if (cutoff < 1 || cutoff > n) {
    throw Error(ErrorCode::kInvalidFunction,
                "cutoff " + std::to_string(cutoff) + " out of range 1.." +
                    std::to_string(n));
  }
  return SetFunction(n, TruncatedCardinality{std::move(increments), cutoff});
}

SetFunction SetFunction::MakeModular(std::vector<double> weights) {
  RequireFiniteValues(weights, "modular weight");
  const std::size_t n = weights.size();
  return SetFunction(n, Modular{std::move(weights)});
}

SetFunction SetFunction::MakeSum(std::vector<SetFunction> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::kInvalidFunction, "sum needs at least one term");
  }
  const std::size_t n = terms.front().size();
  for (const SetFunction& term : terms) {
    if (term.size() != n) {
      throw Error(ErrorCode::kInvalidFunction,
                  "sum terms must share one ground set");
    }
  }
  return SetFunction(n, SumOf{std::move(terms)});
}

SetFunction SetFunction::MakeOracle(
    std::size_t n, std::function<double(const ItemSet&)> callback) {
  if (!callback) {
    throw Error(ErrorCode::kInvalidFunction, "oracle callback is empty");
  }
  const double empty_value = callback(ItemSet(n));
  if (!std::isfinite(empty_value)) {
    throw Error(ErrorCode::kInvalidFunction, "oracle value at empty set");
  }
  return SetFunction(n, GenericOracle{n, std::move(callback), empty_value});
}

std::string_view SetFunction::family_name() const {
  return std::visit(
      Overloaded{
          [](const GraphCut&) { return std::string_view("graph_cut"); },
          [](const CardinalityConcave&) {
            return std::string_view("cardinality_concave");
          },
          [](const TruncatedCardinality&) {
            return std::string_view("truncated_cardinality");
          },
          [](const Modular&) { return std::string_view("modular"); },
          [](const SumOf&) { return std::string_view("sum"); },
          [](const GenericOracle&) { return std::string_view("oracle"); },
      },
      *family_);
}

double SetFunction::Evaluate(const ItemSet& s) const {
  RequireSize(s.ground_size(), n_, "item set");
  return std::visit(
      Overloaded{
          [&](const GraphCut& g) {
            double total = 0.0;
            for (std::size_t i = 0; i < n_; ++i) {
              if (!s.contains(i)) continue;
              for (std::size_t j = 0; j < n_; ++j) {
                if (!s.contains(j)) total += g.weights(i, j);
              }
            }
            return total;
          },
          [&](const CardinalityConcave& c) {
            return PrefixSum(c.increments, s.count());
          },
          [&](const TruncatedCardinality& t) {
            return PrefixSum(t.increments, std::min(s.count(), t.cutoff));
          },
          [&](const Modular& m) {
            double total = 0.0;
            for (std::size_t i = 0; i < n_; ++i) {
              if (s.contains(i)) total += m.weights[i];
            }
            return total;
          },
          [&](const SumOf& sum) {
            double total = 0.0;
            for (const SetFunction& term : sum.terms) total += term.Evaluate(s);
            return total;
          },
          [&](const GenericOracle& o) { return o.callback(s) - o.empty_value; },
      },
      *family_);
}

double SetFunction::Marginal(std::size_t j, const ItemSet& s) const {
  RequireSize(s.ground_size(), n_, "item set");
  if (j >= n_) {
    throw Error(ErrorCode::kInvalidArgument,
                "item " + std::to_string(j + 1) + " out of range");
  }
  if (s.contains(j)) {
    throw Error(ErrorCode::kInvalidArgument,
                "marginal gain of item " + std::to_string(j + 1) +
                    " requested for a set that already contains it");
  }
  ItemSet with = s;
  with.insert(j);
  return Evaluate(with) - Evaluate(s);
}

bool SetFunction::IsCardinalityBased() const {
  return CardinalityIncrements(*this).has_value();
}

bool SetFunction::HasDistinctExtremePoints() const {
  const auto inc = CardinalityIncrements(*this);
  if (!inc) return false;
  for (std::size_t i = 1; i < inc->size(); ++i) {
    if (!((*inc)[i] < (*inc)[i - 1])) return false;
  }
  return true;
}

double Dot(Scores a, Scores b) {
  RequireSize(b.size(), a.size(), "dot product");
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

Subgradient ExtremeSubgradientByPrefixes(const SetFunction& f,
                                         const Permutation& sigma) {
  RequireSize(sigma.size(), f.size(), "permutation");
  const std::size_t n = f.size();
  Subgradient h{std::vector<double>(n, 0.0)};
  ItemSet prefix(n);
  double previous = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    prefix.insert(sigma.item_at(k));
    const double current = f.Evaluate(prefix);
    h.values[sigma.item_at(k)] = current - previous;
    previous = current;
  }
  return h;
}

Subgradient ExtremeSubgradient(const SetFunction& f, const Permutation& sigma) {
  RequireSize(sigma.size(), f.size(), "permutation");
  const std::size_t n = f.size();
  Subgradient h{std::vector<double>(n, 0.0)};
  std::visit(
      Overloaded{
          [&](const GraphCut& g) {
            // Adding v = sigma(k) cuts its edges to later items and uncuts
            // the edges arriving from earlier items.
            for (std::size_t k = 0; k < n; ++k) {
              const std::size_t v = sigma.item_at(k);
              double gain = 0.0;
              for (std::size_t r = 0; r < n; ++r) {
                const std::size_t u = sigma.item_at(r);
                if (r > k) {
                  gain += g.weights(v, u);
                } else if (r < k) {
                  gain -= g.weights(u, v);
                }
              }
              h.values[v] = gain;
            }
          },
          [&](const CardinalityConcave& c) {
            for (std::size_t k = 0; k < n; ++k) {
              h.values[sigma.item_at(k)] = c.increments[k];
            }
          },
          [&](const TruncatedCardinality& t) {
            for (std::size_t k = 0; k < n; ++k) {
              h.values[sigma.item_at(k)] = k < t.cutoff ? t.increments[k] : 0.0;
            }
          },
          [&](const Modular& m) { h.values = m.weights; },
          [&](const SumOf& s) {
            for (const SetFunction& term : s.terms) {
              const Subgradient part = ExtremeSubgradient(term, sigma);
              for (std::size_t i = 0; i < n; ++i) h.values[i] += part.values[i];
            }
          },
          [&](const GenericOracle&) { h = ExtremeSubgradientByPrefixes(f, sigma); },
      },
      f.family());
  return h;
}

double LovaszExtension(const SetFunction& f, Scores x) {
  RequireSize(x.size(), f.size(), "score vector");
  const Subgradient h = ExtremeSubgradient(f, OrderingOf(x));
  return Dot(h.values, x);
}

namespace {

std::vector<double> ValueTable(const SetFunction& f) {
  const std::size_t n = f.size();
  if (n > kMaxExhaustiveGroundSet) {
    throw Error(ErrorCode::kCapacity,
                "exhaustive check supports ground sets up to " +
                    std::to_string(kMaxExhaustiveGroundSet) + " items, got " +
                    std::to_string(n));
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<double> table(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    table[mask] = f.Evaluate(ItemSet::FromMask(n, mask));
  }
  return table;
}

}  // namespace

bool IsSubmodular(const SetFunction& f, double tolerance) {
  const std::vector<double> table = ValueTable(f);
  const std::size_t n = f.size();
  // Local form of diminishing returns: f(j|S) >= f(j|S+k) for j, k outside S.
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t bj = std::uint64_t{1} << j;
      if (s & bj) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::uint64_t bk = std::uint64_t{1} << k;
        if (s & bk) continue;
        const double lhs = table[s | bj] + table[s | bk];
        const double rhs = table[s | bj | bk] + table[s];
        if (lhs < rhs - tolerance) return false;
      }
    }
  }
  return true;
}

bool IsMonotone(const SetFunction& f, double tolerance) {
  const std::vector<double> table = ValueTable(f);
  const std::size_t n = f.size();
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t bj = std::uint64_t{1} << j;
      if (!(s & bj) && table[s | bj] < table[s] - tolerance) return false;
    }
  }
  return true;
}

}  // namespace lbdiv
