#ifndef LBDIV_SET_FUNCTION_H_
#define LBDIV_SET_FUNCTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "lbdiv/matrix.h"
#include "lbdiv/permutation.h"

namespace lbdiv {

// Absolute tolerance for set-function identities (submodularity,
// monotonicity, telescoping).
inline constexpr double kSetFunctionTolerance = 1e-9;

// Largest ground set accepted by the exhaustive 2^n checks.
inline constexpr std::size_t kMaxExhaustiveGroundSet = 14;

// A subset of the ground set {0..n-1}, stored as a membership mask.
class ItemSet {
 public:
  explicit ItemSet(std::size_t n) : member_(n, 0) {}
  ItemSet(std::size_t n, std::initializer_list<std::size_t> items);

  // Bit i of `mask` selects item i. Requires n <= 64.
  static ItemSet FromMask(std::size_t n, std::uint64_t mask);
  static ItemSet All(std::size_t n);

  std::size_t ground_size() const { return member_.size(); }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::size_t item) const { return member_[item] != 0; }
  void insert(std::size_t item);
  void erase(std::size_t item);

  friend bool operator==(const ItemSet&, const ItemSet&) = default;

 private:
  std::vector<std::uint8_t> member_;
  std::size_t count_ = 0;
};

class SetFunction;

// f(X) = sum_{i in X} sum_{j not in X} d(i, j) over ordered pairs; d need not
// be symmetric.
struct GraphCut {
  SquareMatrix weights;
};

// f(X) = g(|X|), stored as the increments g(i) - g(i-1), i = 1..n.
struct CardinalityConcave {
  std::vector<double> increments;
};

// f(X) = min{g(|X|), g(cutoff)}: increments past the cutoff are dropped.
struct TruncatedCardinality {
  std::vector<double> increments;
  std::size_t cutoff = 0;
};

// f(X) = sum_{i in X} m(i).
struct Modular {
  std::vector<double> weights;
};

struct SumOf {
  std::vector<SetFunction> terms;
};

// Arbitrary callback, shifted so that f(empty) = 0. The callback must be
// free of side effects; this is not checked.
struct GenericOracle {
  std::size_t n = 0;
  std::function<double(const ItemSet&)> callback;
  double empty_value = 0.0;
};

// A normalized set function f : 2^V -> R with f(empty) = 0.
//
// Instances are immutable values built through the named constructors, which
// validate each family's invariants and throw kInvalidFunction on failure.
class SetFunction {
 public:
  using Family = std::variant<GraphCut, CardinalityConcave,
                              TruncatedCardinality, Modular, SumOf,
                              GenericOracle>;

  static SetFunction MakeGraphCut(SquareMatrix weights);
  // Unit weights on every ordered pair i != j: f(X) = |X| |V \ X|.
  static SetFunction MakeCompleteGraphCut(std::size_t n);
  static SetFunction MakeCardinality(std::vector<double> increments);
  static SetFunction MakeTruncatedCardinality(std::vector<double> increments,
                                              std::size_t cutoff);
  static SetFunction MakeModular(std::vector<double> weights);
  static SetFunction MakeSum(std::vector<SetFunction> terms);
  static SetFunction MakeOracle(std::size_t n,
                                std::function<double(const ItemSet&)> callback);

  std::size_t size() const { return n_; }
  const Family& family() const { return *family_; }
  std::string_view family_name() const;

  double Evaluate(const ItemSet& s) const;

  // f(s + j) - f(s). Throws kInvalidArgument if j is already in s.
  double Marginal(std::size_t j, const ItemSet& s) const;

  // True for cardinality families (and sums of them), whose extreme
  // subgradients are reorderings of one another.
  bool IsCardinalityBased() const;

  // Sufficient condition for every ordering to be a distinct extreme point:
  // a cardinality function with strictly decreasing increments.
  bool HasDistinctExtremePoints() const;

 private:
  SetFunction(std::size_t n, Family family);

  std::size_t n_ = 0;
  std::shared_ptr<const Family> family_;
};

// The greedy extreme point h of the Lovasz subdifferential for sigma:
// h(sigma(j)) = f(S_j) - f(S_{j-1}), S_j the top-j items of sigma. Indexed
// by item.
struct Subgradient {
  std::vector<double> values;
};

Subgradient ExtremeSubgradient(const SetFunction& f, const Permutation& sigma);

// Greedy construction through Evaluate on each prefix set, bypassing the
// per-family closed forms. O(n) evaluations.
Subgradient ExtremeSubgradientByPrefixes(const SetFunction& f,
                                         const Permutation& sigma);

// The Lovasz extension <h_{sigma_x}, x>.
double LovaszExtension(const SetFunction& f, Scores x);

// Exhaustive check of diminishing returns over all S subset T, j not in T.
// Throws kCapacity when n > kMaxExhaustiveGroundSet.
bool IsSubmodular(const SetFunction& f,
                  double tolerance = kSetFunctionTolerance);

// Exhaustive check that every marginal is nonnegative.
bool IsMonotone(const SetFunction& f, double tolerance = kSetFunctionTolerance);

// Dot product in item-index order; shared so that identical inputs give
// bit-identical results across modules.
double Dot(Scores a, Scores b);

}  // namespace lbdiv

#endif  // LBDIV_SET_FUNCTION_H_
