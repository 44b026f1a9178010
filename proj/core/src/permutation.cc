#include "lbdiv/permutation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lbdiv/error.h"

namespace lbdiv {

void RequireFinite(Scores x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw Error(ErrorCode::kInvalidScore,
                  "score at item " + std::to_string(i + 1) + " is not finite");
    }
  }
}

void RequireSize(std::size_t actual, std::size_t expected, const char* what) {
  if (actual != expected) {
    throw Error(ErrorCode::kSizeMismatch,
                std::string(what) + ": size " + std::to_string(actual) +
                    " does not match ground set of size " +
                    std::to_string(expected));
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<std::size_t> items(n);
  std::iota(items.begin(), items.end(), std::size_t{0});
  return FromItems(std::move(items));
}

Permutation Permutation::FromItems(std::vector<std::size_t> items) {
  const std::size_t n = items.size();
  std::vector<std::size_t> ranks(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t item = items[r];
    if (item >= n) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "item " + std::to_string(item + 1) + " out of range 1.." +
                      std::to_string(n));
    }
    if (ranks[item] != n) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "item " + std::to_string(item + 1) + " appears twice");
    }
    ranks[item] = r;
  }
  Permutation p;
  p.items_ = std::move(items);
  p.ranks_ = std::move(ranks);
  return p;
}

Permutation Permutation::FromOneBased(std::span<const long long> items) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(items.size());
  for (long long item : items) {
    if (item < 1 || static_cast<std::size_t>(item) > items.size()) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "item " + std::to_string(item) + " out of range 1.." +
                      std::to_string(items.size()));
    }
    zero_based.push_back(static_cast<std::size_t>(item - 1));
  }
  return FromItems(std::move(zero_based));
}

std::vector<long long> Permutation::ToOneBased() const {
  std::vector<long long> out;
  out.reserve(items_.size());
  for (std::size_t item : items_) out.push_back(static_cast<long long>(item) + 1);
  return out;
}

Permutation OrderingOf(Scores x) {
  RequireFinite(x);
  std::vector<std::size_t> items(x.size());
  std::iota(items.begin(), items.end(), std::size_t{0});
  std::stable_sort(items.begin(), items.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  return Permutation::FromItems(std::move(items));
}

Permutation Inverse(const Permutation& sigma) {
  return Permutation::FromItems(
      std::vector<std::size_t>(sigma.ranks().begin(), sigma.ranks().end()));
}

Permutation Compose(const Permutation& sigma, const Permutation& pi) {
  RequireSize(pi.size(), sigma.size(), "compose");
  std::vector<std::size_t> items(sigma.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    items[i] = sigma.item_at(pi.item_at(i));
  }
  return Permutation::FromItems(std::move(items));
}

std::vector<double> RelabelScores(const Permutation& tau, Scores x) {
  RequireSize(x.size(), tau.size(), "relabel_scores");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[tau.rank_of(i)];
  return out;
}

double WeightedKendallTau(const Permutation& sigma, const Permutation& pi,
                          const SquareMatrix& weights) {
  RequireSize(pi.size(), sigma.size(), "kendall_tau");
  RequireSize(weights.size(), sigma.size(), "kendall_tau weights");
  const std::size_t n = sigma.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = weights(i, j);
      if (w < 0.0 || !std::isfinite(w)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "pair weight (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) +
                        ") must be finite and nonnegative");
      }
      if (sigma.rank_of(pi.item_at(i)) > sigma.rank_of(pi.item_at(j))) {
        total += w;
      }
    }
  }
  return total;
}

long long KendallTau(const Permutation& sigma, const Permutation& pi) {
  RequireSize(pi.size(), sigma.size(), "kendall_tau");
  const std::size_t n = sigma.size();
  long long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ri = sigma.rank_of(pi.item_at(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ri > sigma.rank_of(pi.item_at(j))) ++count;
    }
  }
  return count;
}

long long SpearmanFootrule(const Permutation& sigma, const Permutation& pi) {
  RequireSize(pi.size(), sigma.size(), "spearman_footrule");
  long long total = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto a = static_cast<long long>(sigma.rank_of(i));
    const auto b = static_cast<long long>(pi.rank_of(i));
    total += a > b ? a - b : b - a;
  }
  return total;
}

long long RankCorrelation(const Permutation& sigma, const Permutation& pi) {
  RequireSize(pi.size(), sigma.size(), "rank_correlation");
  long long total = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto diff = static_cast<long long>(sigma.rank_of(i)) -
                      static_cast<long long>(pi.rank_of(i));
    total += diff * diff;
  }
  return total;
}

void ForEachPermutation(std::size_t n,
                        const std::function<void(const Permutation&)>& visit) {
  std::vector<std::size_t> items(n);
  std::iota(items.begin(), items.end(), std::size_t{0});
  do {
    visit(Permutation::FromItems(items));
  } while (std::next_permutation(items.begin(), items.end()));
}

}  // namespace lbdiv
