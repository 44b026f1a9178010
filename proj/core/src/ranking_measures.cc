#include "lbdiv/ranking_measures.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lbdiv/error.h"

namespace lbdiv {

namespace {

void ValidateNdcgInputs(Scores relevance, std::size_t k,
                        std::span<const double> discount) {
  RequireFinite(relevance);
  const std::size_t n = relevance.size();
  for (double r : relevance) {
    if (r < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "relevance grades must be nonnegative");
    }
  }
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "cutoff k=" + std::to_string(k) + " out of range 1.." +
                    std::to_string(n));
  }
  if (discount.size() < k) {
    throw Error(ErrorCode::kInvalidArgument,
                "discount has " + std::to_string(discount.size()) +
                    " entries, cutoff needs " + std::to_string(k));
  }
  for (std::size_t i = 0; i < discount.size(); ++i) {
    if (!std::isfinite(discount[i]) || discount[i] <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "discount entries must be finite and positive");
    }
    if (i > 0 && discount[i] > discount[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "discount must be nonincreasing");
    }
  }
}

double DiscountedGain(Scores relevance, const Permutation& order,
                      std::size_t k, std::span<const double> discount) {
  double total = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    total += relevance[order.item_at(r)] * discount[r];
  }
  return total;
}

double IdealGain(Scores relevance, std::size_t k,
                 std::span<const double> discount) {
  const double ideal = DiscountedGain(relevance, OrderingOf(relevance), k, discount);
  if (!(ideal > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no positive relevance in the top " + std::to_string(k) +
                    "; NDCG is undefined");
  }
  return ideal;
}

}  // namespace

std::vector<double> LogDiscount(std::size_t n) {
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = 1.0 / std::log2(static_cast<double>(i) + 2.0);
  }
  return d;
}

double NdcgLoss(Scores relevance, const Permutation& sigma, std::size_t k,
                std::span<const double> discount) {
  ValidateNdcgInputs(relevance, k, discount);
  RequireSize(sigma.size(), relevance.size(), "permutation");
  const double ideal = IdealGain(relevance, k, discount);
  const double achieved = DiscountedGain(relevance, sigma, k, discount);
  return std::clamp((ideal - achieved) / ideal, 0.0, 1.0);
}

NdcgBridge NdcgAsLb(Scores relevance, std::size_t k,
                    std::span<const double> discount) {
  ValidateNdcgInputs(relevance, k, discount);
  const std::size_t n = relevance.size();
  // Increments past k are dropped by the truncation, so any nonincreasing
  // padding works; repeat the last supplied entry.
  std::vector<double> increments(n);
  for (std::size_t i = 0; i < n; ++i) {
    increments[i] = discount[std::min(i, discount.size() - 1)];
  }
  return NdcgBridge{
      SetFunction::MakeTruncatedCardinality(std::move(increments), k),
      IdealGain(relevance, k, discount)};
}

void GoodBadSplit::Validate(std::size_t n) const {
  if (good.empty() || bad.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "good and bad sets must both be nonempty");
  }
  std::vector<int> side(n, 0);
  auto mark = [&](const std::vector<std::size_t>& items, int tag) {
    for (std::size_t item : items) {
      if (item >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "item " + std::to_string(item + 1) + " out of range 1.." +
                        std::to_string(n));
      }
      if (side[item] != 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "item " + std::to_string(item + 1) +
                        " listed more than once in the split");
      }
      side[item] = tag;
    }
  };
  mark(good, 1);
  mark(bad, 2);
}

double AucLoss(const Permutation& sigma, const GoodBadSplit& split) {
  split.Validate(sigma.size());
  std::size_t violated = 0;
  for (std::size_t g : split.good) {
    for (std::size_t b : split.bad) {
      if (sigma.rank_of(g) > sigma.rank_of(b)) ++violated;
    }
  }
  return static_cast<double>(violated) /
         static_cast<double>(split.good.size() * split.bad.size());
}

AucBridge AucAsLb(std::size_t n, const GoodBadSplit& split) {
  split.Validate(n);
  const double w =
      1.0 / static_cast<double>(split.good.size() * split.bad.size());
  SquareMatrix d(n);
  std::vector<double> scores(n, 0.0);
  for (std::size_t g : split.good) {
    scores[g] = 1.0;
    for (std::size_t b : split.bad) {
      d(g, b) = w;
      d(b, g) = w;
    }
  }
  return AucBridge{SetFunction::MakeGraphCut(std::move(d)), std::move(scores),
                   kAucBridgeScale};
}

}  // namespace lbdiv
