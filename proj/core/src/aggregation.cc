#include "lbdiv/aggregation.h"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "lbdiv/divergence.h"
#include "lbdiv/error.h"

namespace lbdiv {

namespace {

void RequireRectangular(const std::vector<std::vector<double>>& rows,
                        const char* what) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) {
      throw Error(ErrorCode::kSizeMismatch,
                  std::string(what) + " row " + std::to_string(i + 1) +
                      " has " + std::to_string(rows[i].size()) +
                      " entries, expected " +
                      std::to_string(rows.front().size()));
    }
    RequireFinite(rows[i]);
  }
}

}  // namespace

ScoreCollection::ScoreCollection(std::vector<std::vector<double>> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "score collection is empty");
  }
  RequireRectangular(vectors_, "score");
}

std::vector<double> ScoreCollection::Mean() const {
  std::vector<double> mean(dimension(), 0.0);
  for (const auto& v : vectors_) {
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
  }
  const double count = static_cast<double>(vectors_.size());
  for (double& m : mean) m /= count;
  return mean;
}

FeatureMatrix::FeatureMatrix(std::vector<std::vector<double>> rows)
    : rows_(std::move(rows)) {
  RequireRectangular(rows_, "feature");
}

std::vector<double> FeatureMatrix::FeatureScores(std::size_t feature) const {
  if (feature >= features()) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature " + std::to_string(feature + 1) + " out of range");
  }
  std::vector<double> column(documents());
  for (std::size_t i = 0; i < column.size(); ++i) column[i] = rows_[i][feature];
  return column;
}

std::vector<double> FeatureMatrix::Combine(
    std::span<const double> weights) const {
  RequireSize(weights.size(), features(), "weight vector");
  RequireFinite(weights);
  std::vector<double> scores(documents());
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i] = Dot(rows_[i], weights);
  return scores;
}

Permutation Representative(const ScoreCollection& collection) {
  return OrderingOf(collection.Mean());
}

double AggregationObjective(const ScoreCollection& collection,
                            const SetFunction& f, const Permutation& sigma) {
  double total = 0.0;
  for (std::size_t i = 0; i < collection.size(); ++i) {
    total += LbDivergence(f, collection[i], sigma);
  }
  return total;
}

RepresentativeResult BruteForceRepresentative(const ScoreCollection& collection,
                                              const SetFunction& f) {
  const std::size_t n = collection.dimension();
  RequireSize(n, f.size(), "score vectors");
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::kCapacity,
                "exhaustive search supports up to " +
                    std::to_string(kMaxEnumerationSize) + " items, got " +
                    std::to_string(n));
  }
  std::optional<RepresentativeResult> best;
  // Lexicographic visiting order plus strict improvement keeps the smallest
  // permutation among exact ties.
  ForEachPermutation(n, [&](const Permutation& sigma) {
    const double objective = AggregationObjective(collection, f, sigma);
    if (!best || objective < best->objective) {
      best = RepresentativeResult{sigma, objective};
    }
  });
  return *best;
}

double LtrFeature(const FeatureMatrix& features, std::span<const double> weights,
                  const SetFunction& f, const Permutation& sigma) {
  RequireSize(weights.size(), features.features(), "weight vector");
  RequireSize(features.documents(), f.size(), "documents");
  RequireFinite(weights);
  double total = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0.0) continue;
    total += weights[j] * LbDivergence(f, features.FeatureScores(j), sigma);
  }
  return total;
}

Permutation LtrInference(const FeatureMatrix& features,
                         std::span<const double> weights) {
  return OrderingOf(features.Combine(weights));
}

double Confidence(const ScoreCollection& collection) {
  const std::vector<double> mean = collection.Mean();
  double total = 0.0;
  for (std::size_t i = 0; i < mean.size(); ++i) {
    for (std::size_t j = i + 1; j < mean.size(); ++j) {
      total += std::abs(mean[i] - mean[j]);
    }
  }
  return total;
}

}  // namespace lbdiv
