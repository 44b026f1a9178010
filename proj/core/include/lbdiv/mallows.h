#ifndef LBDIV_MALLOWS_H_
#define LBDIV_MALLOWS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lbdiv/aggregation.h"
#include "lbdiv/permutation.h"
#include "lbdiv/set_function.h"

namespace lbdiv {

// Density over scores x in the unit hypercube [0,1]^n, centered on an
// ordering:  p(x | theta, sigma) = exp(-theta d(x || sigma)) / Z(theta, sigma).
struct MallowsModel {
  double theta = 0.0;
  SetFunction f;

  // Throws kInvalidArgument for negative or non-finite theta.
  void Validate() const;
};

// -theta d(x || sigma). Throws kInvalidScore when x leaves [0,1]^n.
double MallowsLogUnnormalized(const MallowsModel& model, Scores x,
                              const Permutation& sigma);

inline constexpr std::size_t kMinPartitionSamples = 1000;

struct PartitionEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Plain Monte Carlo estimate of Z(theta, sigma) = integral over [0,1]^n of
// exp(-theta d(x || sigma)), with the standard error of the mean.
//
// Samples are split into a fixed number of shards, each with its own seeded
// stream, and merged in shard order; the result is bit-identical for a given
// seed regardless of how many threads run the shards.
PartitionEstimate EstimatePartition(const MallowsModel& model,
                                    const Permutation& sigma,
                                    std::size_t num_samples, std::uint64_t seed);

struct PermutationProbability {
  Permutation permutation;
  double probability = 0.0;
};

// One entry per permutation of the ground set, in lexicographic order.
using PermutationPmf = std::vector<PermutationProbability>;

// p(sigma) proportional to exp(-sum_i theta_i d(x_i || sigma)), normalized
// over all n! permutations. Throws kCapacity above kMaxEnumerationSize.
PermutationPmf ExtendedMallowsPmf(std::span<const double> thetas,
                                  const ScoreCollection& collection,
                                  const SetFunction& f);

// p(sigma) proportional to exp(LtrFeature(features, w, f, sigma)). With
// w = -theta and the feature columns as the score collection this is the
// extended model above.
PermutationPmf ConditionalLtrPmf(const FeatureMatrix& features,
                                 std::span<const double> weights,
                                 const SetFunction& f);

// Highest-probability entry; ties keep the earliest (lexicographically
// smallest) permutation.
const PermutationProbability& Mode(const PermutationPmf& pmf);

}  // namespace lbdiv

#endif  // LBDIV_MALLOWS_H_
