#ifndef LBDIV_PERMUTATION_H_
#define LBDIV_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lbdiv/matrix.h"

namespace lbdiv {

// Read-only view of a score vector x over the ground set. Entries must be
// finite wherever an operation says so.
using Scores = std::span<const double>;

// A bijection between ranks and items.
//
// Rank convention: item_at(r) is the item holding rank r and rank_of(i) is
// the rank held by item i, so item_at(rank_of(i)) == i. Rank 0 is the top.
// Storage is 0-based; external formats (JSON, CLI) are 1-based and go
// through FromOneBased / ToOneBased.
class Permutation {
 public:
  Permutation() = default;

  static Permutation Identity(std::size_t n);

  // `items[r]` is the item at rank r. Throws kInvalidPermutation unless the
  // sequence is a bijection on {0..n-1}.
  static Permutation FromItems(std::vector<std::size_t> items);

  // 1-based variant of FromItems.
  static Permutation FromOneBased(std::span<const long long> items);

  std::size_t size() const { return items_.size(); }

  std::size_t item_at(std::size_t rank) const { return items_[rank]; }
  std::size_t rank_of(std::size_t item) const { return ranks_[item]; }

  std::span<const std::size_t> items() const { return items_; }
  std::span<const std::size_t> ranks() const { return ranks_; }

  std::vector<long long> ToOneBased() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.items_ == b.items_;
  }
  // Lexicographic on the rank -> item sequence.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<std::size_t> items_;
  std::vector<std::size_t> ranks_;
};

// The ordering of x by decreasing score; ties go to the smaller item index.
// Throws kInvalidScore on a non-finite entry.
Permutation OrderingOf(Scores x);

Permutation Inverse(const Permutation& sigma);

// (sigma pi)(i) = sigma(pi(i)).
Permutation Compose(const Permutation& sigma, const Permutation& pi);

// The relabelled vector tau x with (tau x)(tau(i)) = x(i).
std::vector<double> RelabelScores(const Permutation& tau, Scores x);

// Number of pairs of ranks i < j in pi whose items are inverted in sigma.
long long KendallTau(const Permutation& sigma, const Permutation& pi);

// Kendall tau with a nonnegative weight w(i, j) on each inverted pair, where
// i < j are rank positions in pi.
double WeightedKendallTau(const Permutation& sigma, const Permutation& pi,
                          const SquareMatrix& weights);

long long SpearmanFootrule(const Permutation& sigma, const Permutation& pi);
long long RankCorrelation(const Permutation& sigma, const Permutation& pi);

// Visits all n! permutations in lexicographic order, starting at identity.
void ForEachPermutation(std::size_t n,
                        const std::function<void(const Permutation&)>& visit);

// Throws kInvalidScore if any entry is non-finite.
void RequireFinite(Scores x);

// Throws kSizeMismatch when `actual != expected`.
void RequireSize(std::size_t actual, std::size_t expected, const char* what);

}  // namespace lbdiv

#endif  // LBDIV_PERMUTATION_H_
