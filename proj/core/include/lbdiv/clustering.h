#ifndef LBDIV_CLUSTERING_H_
#define LBDIV_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lbdiv/aggregation.h"
#include "lbdiv/permutation.h"
#include "lbdiv/set_function.h"

namespace lbdiv {

struct ClusteringOptions {
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t max_iter = 100;
};

struct ClusteringResult {
  std::vector<std::size_t> assignments;      // cluster of each input vector
  std::vector<Permutation> representatives;  // one per cluster
  std::vector<double> objective_trace;       // objective after each iteration
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
};

// k-means with permutation centers under the LB divergence.
//
// Centers start as the orderings of k distinct, uniformly sampled input
// vectors. Each iteration assigns every vector to its nearest center (ties
// to the lower cluster index), refills any empty cluster with the vector
// farthest from its center, and recenters each cluster on the ordering of
// its mean. Stops once assignments repeat or after max_iter iterations.
ClusteringResult KMeansCluster(const ScoreCollection& collection,
                               const SetFunction& f,
                               const ClusteringOptions& options);

// sum over vectors of d(x_i || representatives[assignments[i]]).
double ClusteringObjective(const ScoreCollection& collection,
                           const std::vector<std::size_t>& assignments,
                           const std::vector<Permutation>& representatives,
                           const SetFunction& f);

}  // namespace lbdiv

#endif  // LBDIV_CLUSTERING_H_
