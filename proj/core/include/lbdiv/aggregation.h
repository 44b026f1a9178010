#ifndef LBDIV_AGGREGATION_H_
#define LBDIV_AGGREGATION_H_

#include <cstddef>
#include <vector>

#include "lbdiv/permutation.h"
#include "lbdiv/set_function.h"

namespace lbdiv {

// Largest ground set for the n!-enumeration routines.
inline constexpr std::size_t kMaxEnumerationSize = 8;

// A nonempty list of equal-length finite score vectors (voters, engines,
// classifiers).
class ScoreCollection {
 public:
  // Throws kInvalidArgument when empty, kSizeMismatch on ragged rows,
  // kInvalidScore on non-finite entries.
  explicit ScoreCollection(std::vector<std::vector<double>> vectors);

  std::size_t size() const { return vectors_.size(); }
  std::size_t dimension() const { return vectors_.front().size(); }
  Scores operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<std::vector<double>>& vectors() const { return vectors_; }

  std::vector<double> Mean() const;

 private:
  std::vector<std::vector<double>> vectors_;
};

// Documents x features: row i is the feature vector of document i, column j
// the score vector of feature j over all documents.
class FeatureMatrix {
 public:
  explicit FeatureMatrix(std::vector<std::vector<double>> rows);

  std::size_t documents() const { return rows_.size(); }
  std::size_t features() const { return rows_.empty() ? 0 : rows_[0].size(); }
  std::vector<double> FeatureScores(std::size_t feature) const;
  // Per-document scores sum_j w_j x_i^j.
  std::vector<double> Combine(std::span<const double> weights) const;

 private:
  std::vector<std::vector<double>> rows_;
};

// The ordering of the arithmetic mean, which minimizes the total divergence
// sum_i d(x^i || sigma) for every submodular f.
Permutation Representative(const ScoreCollection& collection);

struct RepresentativeResult {
  Permutation permutation;
  double objective = 0.0;
};

// Sum of divergences from each vector to sigma.
double AggregationObjective(const ScoreCollection& collection,
                            const SetFunction& f, const Permutation& sigma);

// Exhaustive argmin of AggregationObjective over all n! permutations. Exact
// objective ties keep the lexicographically smallest permutation. Throws
// kCapacity above kMaxEnumerationSize items.
RepresentativeResult BruteForceRepresentative(const ScoreCollection& collection,
                                              const SetFunction& f);

// sum_j w_j d(x^j || sigma) over the feature score vectors.
double LtrFeature(const FeatureMatrix& features, std::span<const double> weights,
                  const SetFunction& f, const Permutation& sigma);

// The ordering of the documents by w'x_i.
Permutation LtrInference(const FeatureMatrix& features,
                         std::span<const double> weights);

// Total variation sum_{i<j} |mu_i - mu_j| of the mean; small when the
// population disagrees or is indifferent.
double Confidence(const ScoreCollection& collection);

}  // namespace lbdiv

#endif  // LBDIV_AGGREGATION_H_
