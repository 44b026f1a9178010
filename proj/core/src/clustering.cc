#include "lbdiv/clustering.h"

#include <numeric>
#include <random>
#include <string>

#include "lbdiv/divergence.h"
#include "lbdiv/error.h"

namespace lbdiv {

namespace {

std::vector<std::size_t> SampleDistinct(std::size_t population, std::size_t k,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, population - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

Permutation ClusterMeanOrdering(const ScoreCollection& collection,
                                const std::vector<std::size_t>& assignments,
                                std::size_t cluster) {
  std::vector<double> sum(collection.dimension(), 0.0);
  for (std::size_t i = 0; i < collection.size(); ++i) {
    if (assignments[i] != cluster) continue;
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += collection[i][j];
  }
  // Dividing by the member count does not change the ordering.
  return OrderingOf(sum);
}

}  // namespace

double ClusteringObjective(const ScoreCollection& collection,
                           const std::vector<std::size_t>& assignments,
                           const std::vector<Permutation>& representatives,
                           const SetFunction& f) {
  RequireSize(assignments.size(), collection.size(), "assignments");
  double total = 0.0;
  for (std::size_t i = 0; i < collection.size(); ++i) {
    if (assignments[i] >= representatives.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vector " + std::to_string(i + 1) +
                      " assigned to a cluster without a representative");
    }
    total += LbDivergence(f, collection[i], representatives[assignments[i]]);
  }
  return total;
}

ClusteringResult KMeansCluster(const ScoreCollection& collection,
                               const SetFunction& f,
                               const ClusteringOptions& options) {
  const std::size_t m = collection.size();
  const std::size_t k = options.k;
  RequireSize(collection.dimension(), f.size(), "score vectors");
  if (k < 1 || k > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "k=" + std::to_string(k) + " out of range 1.." +
                    std::to_string(m));
  }
  if (options.max_iter < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iter must be at least 1");
  }

  ClusteringResult result;
  result.seed = options.seed;
  for (std::size_t idx : SampleDistinct(m, k, options.seed)) {
    result.representatives.push_back(OrderingOf(collection[idx]));
  }

  std::vector<std::size_t> assignments(m, 0);
  std::vector<double> distance(m, 0.0);
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t best = 0;
      double best_d = LbDivergence(f, collection[i], result.representatives[0]);
      for (std::size_t j = 1; j < k; ++j) {
        const double d = LbDivergence(f, collection[i], result.representatives[j]);
        if (d < best_d) {
          best = j;
          best_d = d;
        }
      }
      assignments[i] = best;
      distance[i] = best_d;
    }
    if (iter > 1 && assignments == result.assignments) break;

    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t c : assignments) ++sizes[c];
    for (std::size_t j = 0; j < k; ++j) {
      if (sizes[j] != 0) continue;
      // Move the worst-served vector from a cluster that can spare it.
      std::size_t donor = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (sizes[assignments[i]] < 2) continue;
        if (donor == m || distance[i] > distance[donor]) donor = i;
      }
      --sizes[assignments[donor]];
      assignments[donor] = j;
      distance[donor] = 0.0;
      sizes[j] = 1;
    }

    for (std::size_t j = 0; j < k; ++j) {
      result.representatives[j] = ClusterMeanOrdering(collection, assignments, j);
    }
    result.assignments = assignments;
    result.objective_trace.push_back(ClusteringObjective(
        collection, result.assignments, result.representatives, f));
    result.iterations = iter;
  }
  return result;
}

}  // namespace lbdiv
