#include "lbdiv/divergence.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "lbdiv/error.h"

namespace lbdiv {

namespace {

void RequireNonnegativeWeights(const SquareMatrix& weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const double w = weights(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cut weight (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) +
                        ") must be finite and nonnegative");
      }
    }
  }
}

void RequireIncrements(std::span<const double> increments, std::size_t n) {
  RequireSize(increments.size(), n, "increments");
  for (std::size_t i = 0; i < increments.size(); ++i) {
    if (!std::isfinite(increments[i])) {
      throw Error(ErrorCode::kInvalidArgument, "increment is not finite");
    }
    if (i > 0 && increments[i] > increments[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "increments must be nonincreasing, entry " +
                      std::to_string(i + 1) + " exceeds entry " +
                      std::to_string(i));
    }
  }
}

// sum_{r < count} x(order(r)) inc(r), accumulated rank by rank.
double RankWeightedSum(std::span<const double> increments, std::size_t count,
                       Scores x, const Permutation& order) {
  double total = 0.0;
  for (std::size_t r = 0; r < count; ++r) {
    total += x[order.item_at(r)] * increments[r];
  }
  return total;
}

}  // namespace

double LbDivergence(const SetFunction& f, Scores x, const Permutation& sigma) {
  RequireSize(x.size(), f.size(), "score vector");
  RequireSize(sigma.size(), f.size(), "permutation");
  const double extension = LovaszExtension(f, x);
  const double linear = Dot(ExtremeSubgradient(f, sigma).values, x);
  const double d = extension - linear;
  if (d >= 0.0) return d;
  const double scale =
      std::max(1.0, std::abs(extension) + std::abs(linear));
  if (d >= -kDivergenceTolerance * scale) return 0.0;
  throw Error(ErrorCode::kInternalConsistency,
              "negative divergence " + std::to_string(d) +
                  "; the set function is not submodular");
}

double CutDivergence(const SquareMatrix& weights, Scores x,
                     const Permutation& sigma) {
  RequireNonnegativeWeights(weights);
  RequireSize(x.size(), weights.size(), "score vector");
  RequireSize(sigma.size(), weights.size(), "permutation");
  RequireFinite(x);
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t a = sigma.item_at(r);
    for (std::size_t s = r + 1; s < n; ++s) {
      const std::size_t b = sigma.item_at(s);
      const double excess = x[b] - x[a];
      if (excess > 0.0) total += (weights(a, b) + weights(b, a)) * excess;
    }
  }
  return total;
}

double CutDivergenceWeightedKendall(const SquareMatrix& weights, Scores x,
                                    const Permutation& sigma) {
  RequireNonnegativeWeights(weights);
  RequireSize(x.size(), weights.size(), "score vector");
  RequireSize(sigma.size(), weights.size(), "permutation");
  const Permutation sigma_x = OrderingOf(x);
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = sigma.item_at(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t b = sigma.item_at(j);
      if (sigma_x.rank_of(a) > sigma_x.rank_of(b)) {
        total += weights(a, b) * std::abs(x[a] - x[b]);
      }
    }
  }
  return total;
}

double CardinalityDivergence(std::span<const double> increments, Scores x,
                             const Permutation& sigma) {
  return TopMDivergence(increments, x.size(), x, sigma);
}

double TopMDivergence(std::span<const double> increments, std::size_t m,
                      Scores x, const Permutation& sigma) {
  RequireIncrements(increments, x.size());
  RequireSize(sigma.size(), x.size(), "permutation");
  if (m < 1 || m > x.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "top-m cutoff " + std::to_string(m) + " out of range 1.." +
                    std::to_string(x.size()));
  }
  const Permutation sigma_x = OrderingOf(x);
  const double d = RankWeightedSum(increments, m, x, sigma_x) -
                   RankWeightedSum(increments, m, x, sigma);
  return std::max(d, 0.0);
}

double TopSetDivergence(std::size_t m, Scores x, const Permutation& sigma) {
  RequireSize(sigma.size(), x.size(), "permutation");
  RequireFinite(x);
  if (m < 1 || m > x.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "top-m cutoff " + std::to_string(m) + " out of range 1.." +
                    std::to_string(x.size()));
  }
  std::vector<double> largest(x.begin(), x.end());
  std::partial_sort(largest.begin(), largest.begin() + m, largest.end(),
                    std::greater<>());
  double best = 0.0;
  double chosen = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    best += largest[r];
    chosen += x[sigma.item_at(r)];
  }
  return std::max(best - chosen, 0.0);
}

void PartialOrder::Validate() const {
  for (const Constraint& c : constraints) {
    if (c.above >= n || c.below >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partial order references an item outside 1.." +
                      std::to_string(n));
    }
    if (c.above == c.below) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partial order pair (" + std::to_string(c.above + 1) + "," +
                      std::to_string(c.below + 1) + ") relates an item to itself");
    }
    if (!std::isfinite(c.weight) || c.weight <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partial order weights must be finite and positive");
    }
  }
}

double PartialOrderDivergence(const PartialOrder& order, Scores x) {
  order.Validate();
  RequireSize(x.size(), order.n, "score vector");
  // The directed cut extension is sum_{i,j} d(i,j) (x_i - x_j)_+, so the
  // constraint "a above b" becomes an edge b -> a.
  SquareMatrix d(order.n);
  for (const PartialOrder::Constraint& c : order.constraints) {
    d(c.below, c.above) += c.weight;
  }
  return LovaszExtension(SetFunction::MakeGraphCut(std::move(d)), x);
}

double DivergenceUpperBound(const SetFunction& f, Scores x,
                            MonotoneCheck check) {
  RequireSize(x.size(), f.size(), "score vector");
  RequireFinite(x);
  if (check == MonotoneCheck::kVerify && !IsMonotone(f)) {
    throw Error(ErrorCode::kInvalidFunction,
                "divergence bound requires a monotone set function");
  }
  const std::size_t n = f.size();
  if (n == 0) return 0.0;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double spread = *hi - *lo;

  const ItemSet all = ItemSet::All(n);
  const double full = f.Evaluate(all);
  double max_singleton = -std::numeric_limits<double>::infinity();
  double min_last_gain = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    max_singleton = std::max(max_singleton, f.Evaluate(ItemSet(n, {j})));
    ItemSet rest = all;
    rest.erase(j);
    min_last_gain = std::min(min_last_gain, full - f.Evaluate(rest));
  }
  return spread * static_cast<double>(n) * (max_singleton - min_last_gain);
}

bool IsRelabelingCovariant(const SetFunction& f, const Permutation& sigma,
                           const Permutation& tau, double tolerance) {
  RequireSize(sigma.size(), f.size(), "permutation");
  RequireSize(tau.size(), f.size(), "permutation");
  const std::vector<double> moved =
      RelabelScores(tau, ExtremeSubgradient(f, sigma).values);
  const std::vector<double> direct =
      ExtremeSubgradient(f, Compose(tau, sigma)).values;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    if (std::abs(moved[i] - direct[i]) > tolerance) return false;
  }
  return true;
}

}  // namespace lbdiv
