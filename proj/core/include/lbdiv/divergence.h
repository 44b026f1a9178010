#ifndef LBDIV_DIVERGENCE_H_
#define LBDIV_DIVERGENCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "lbdiv/matrix.h"
#include "lbdiv/permutation.h"
#include "lbdiv/set_function.h"

namespace lbdiv {

// Negative divergences down to -kDivergenceTolerance (scaled by the size of
// the two terms being subtracted) are rounding noise and clamp to zero.
inline constexpr double kDivergenceTolerance = 1e-9;

// The Lovasz-Bregman divergence d(x || sigma) = f^(x) - <x, h_sigma>.
//
// This is the reference definition; every closed form below is a separate
// computation checked against it. The value does not depend on how ties in
// x are broken, and is zero when sigma orders x. Throws
// kInternalConsistency if the result is materially negative, which only
// happens for a non-submodular GenericOracle.
double LbDivergence(const SetFunction& f, Scores x, const Permutation& sigma);

// Closed form for the cut function f(X) = sum_{i in X, j not in X} d(i, j):
//   sum over pairs a ranked above b by sigma of (d(a,b) + d(b,a)) (x_b - x_a)_+.
// Equal to LbDivergence(MakeGraphCut(d), x, sigma).
double CutDivergence(const SquareMatrix& weights, Scores x,
                     const Permutation& sigma);

// The weighted Kendall form
//   sum_{i<j} d(s_i, s_j) |x(s_i) - x(s_j)| [s_i ranked below s_j in sigma_x],
// s = sigma. For symmetric d this is exactly 1/kCutWeightedKendallFactor of
// the divergence under the ordered-pair cut convention.
double CutDivergenceWeightedKendall(const SquareMatrix& weights, Scores x,
                                    const Permutation& sigma);
inline constexpr double kCutWeightedKendallFactor = 2.0;

// Closed form for f(X) = g(|X|) given increments g(i) - g(i-1):
//   sum_i x(sigma_x(i)) inc(i) - sum_i x(sigma(i)) inc(i).
double CardinalityDivergence(std::span<const double> increments, Scores x,
                             const Permutation& sigma);

// As CardinalityDivergence with both sums stopped after the top m ranks;
// the divergence of min{g(|X|), g(m)}.
double TopMDivergence(std::span<const double> increments, std::size_t m,
                      Scores x, const Permutation& sigma);

// Unit increments, f(X) = min{|X|, m}: the sum of the m largest entries of
// x minus the sum of x over the first m items of sigma.
double TopSetDivergence(std::size_t m, Scores x, const Permutation& sigma);

// A set of weighted "a ranks above b" constraints on items 0..n-1.
struct PartialOrder {
  struct Constraint {
    std::size_t above = 0;
    std::size_t below = 0;
    double weight = 1.0;
  };

  std::size_t n = 0;
  std::vector<Constraint> constraints;

  // Throws kInvalidArgument on out-of-range items, self pairs, or weights
  // that are not finite and positive.
  void Validate() const;
};

// sum over constraints (a above b) of w (x_b - x_a)_+, evaluated as the
// Lovasz extension of the directed cut with an edge b -> a per constraint.
// Zero exactly when x respects every constraint.
double PartialOrderDivergence(const PartialOrder& order, Scores x);

enum class MonotoneCheck {
  kVerify,   // exhaustive marginal check; kCapacity above 14 items
  kTrusted,  // caller asserts monotonicity
};

// eps * n * (max_j f(j) - min_j f(j | V - j)), eps = max_i x_i - min_i x_i.
// An upper bound on LbDivergence(f, x, sigma) over every sigma for monotone
// submodular f.
double DivergenceUpperBound(const SetFunction& f, Scores x,
                            MonotoneCheck check = MonotoneCheck::kVerify);

// Whether h_{tau sigma} = tau h_sigma, the premise under which
// d(x || sigma) = d(tau x || tau sigma).
bool IsRelabelingCovariant(const SetFunction& f, const Permutation& sigma,
                           const Permutation& tau,
                           double tolerance = kSetFunctionTolerance);

}  // namespace lbdiv

#endif  // LBDIV_DIVERGENCE_H_
