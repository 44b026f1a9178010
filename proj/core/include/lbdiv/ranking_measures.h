#ifndef LBDIV_RANKING_MEASURES_H_
#define LBDIV_RANKING_MEASURES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "lbdiv/permutation.h"
#include "lbdiv/set_function.h"

namespace lbdiv {

// D(i) = 1 / log2(1 + i) for ranks i = 1..n.
std::vector<double> LogDiscount(std::size_t n);

// 1 - DCG@k(sigma) / DCG@k(sigma_r) for nonnegative relevances r and a
// positive nonincreasing discount (one entry per rank, at least k entries).
double NdcgLoss(Scores relevance, const Permutation& sigma, std::size_t k,
                std::span<const double> discount);

struct NdcgBridge {
  SetFunction function;  // truncated cardinality, increments D, cutoff k
  double scale;          // DCG@k of the ideal ordering
};

// NdcgLoss(r, sigma, k, D) == LbDivergence(function, r, sigma) / scale.
NdcgBridge NdcgAsLb(Scores relevance, std::size_t k,
                    std::span<const double> discount);

// Disjoint nonempty sets of "good" and "bad" items.
struct GoodBadSplit {
  std::vector<std::size_t> good;
  std::vector<std::size_t> bad;

  // Throws kInvalidArgument unless both sides are nonempty, disjoint, in
  // range, and free of duplicates.
  void Validate(std::size_t n) const;
};

// Fraction of (good, bad) pairs where sigma ranks the good item below the
// bad one.
double AucLoss(const Permutation& sigma, const GoodBadSplit& split);

struct AucBridge {
  SetFunction function;       // cut with weight 1/(|G||B|) on G x B pairs
  std::vector<double> scores; // 1 on good items, 0 elsewhere
  double scale;               // LbDivergence / AucLoss
};

// For symmetric G x B weights each misordered pair costs both of its
// directed edges, so scale == 2.
inline constexpr double kAucBridgeScale = 2.0;

AucBridge AucAsLb(std::size_t n, const GoodBadSplit& split);

}  // namespace lbdiv

#endif  // LBDIV_RANKING_MEASURES_H_
