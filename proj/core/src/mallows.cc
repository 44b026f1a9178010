#include "lbdiv/mallows.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "lbdiv/divergence.h"
#include "lbdiv/error.h"

namespace lbdiv {

namespace {

constexpr std::size_t kShards = 16;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct ShardTotals {
  CompensatedSum sum;
  CompensatedSum sum_sq;
};

void RequireUnitCube(Scores x) {
  RequireFinite(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0.0 || x[i] > 1.0) {
      throw Error(ErrorCode::kInvalidScore,
                  "score at item " + std::to_string(i + 1) +
                      " lies outside the unit interval");
    }
  }
}

void RequireEnumerable(std::size_t n) {
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::kCapacity,
                "exact enumeration supports up to " +
                    std::to_string(kMaxEnumerationSize) + " items, got " +
                    std::to_string(n));
  }
}

template <class Exponent>
PermutationPmf PmfFromExponents(std::size_t n, const Exponent& exponent) {
  RequireEnumerable(n);
  PermutationPmf pmf;
  double largest = -INFINITY;
  ForEachPermutation(n, [&](const Permutation& sigma) {
    const double e = exponent(sigma);
    largest = std::max(largest, e);
    pmf.push_back({sigma, e});
  });
  CompensatedSum total;
  for (auto& entry : pmf) {
    entry.probability = std::exp(entry.probability - largest);
    total.Add(entry.probability);
  }
  const double z = total.value();
  for (auto& entry : pmf) entry.probability /= z;
  return pmf;
}

}  // namespace

void MallowsModel::Validate() const {
  if (!std::isfinite(theta) || theta < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "theta must be finite and nonnegative");
  }
}

double MallowsLogUnnormalized(const MallowsModel& model, Scores x,
                              const Permutation& sigma) {
  model.Validate();
  RequireUnitCube(x);
  if (model.theta == 0.0) return 0.0;
  return -model.theta * LbDivergence(model.f, x, sigma);
}

PartitionEstimate EstimatePartition(const MallowsModel& model,
                                    const Permutation& sigma,
                                    std::size_t num_samples,
                                    std::uint64_t seed) {
  model.Validate();
  RequireSize(sigma.size(), model.f.size(), "permutation");
  if (num_samples < kMinPartitionSamples) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition estimate needs at least " +
                    std::to_string(kMinPartitionSamples) + " samples, got " +
                    std::to_string(num_samples));
  }
  const std::size_t n = model.f.size();

  std::vector<ShardTotals> shards(kShards);
  auto run_shard = [&](std::size_t s) {
    const std::size_t begin = num_samples * s / kShards;
    const std::size_t end = num_samples * (s + 1) / kShards;
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(n);
    for (std::size_t i = begin; i < end; ++i) {
      for (double& v : x) v = unit(rng);
      const double y =
          model.theta == 0.0
              ? 1.0
              : std::exp(-model.theta * LbDivergence(model.f, x, sigma));
      shards[s].sum.Add(y);
      shards[s].sum_sq.Add(y * y);
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, kShards);
  if (workers == 1) {
    for (std::size_t s = 0; s < kShards; ++s) run_shard(s);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < kShards; s += workers) run_shard(s);
      });
    }
  }

  CompensatedSum sum;
  CompensatedSum sum_sq;
  for (const ShardTotals& shard : shards) {
    sum.Add(shard.sum.value());
    sum_sq.Add(shard.sum_sq.value());
  }
  const double count = static_cast<double>(num_samples);
  const double mean = sum.value() / count;
  const double variance =
      std::max(0.0, (sum_sq.value() - count * mean * mean) / (count - 1.0));
  return PartitionEstimate{mean, std::sqrt(variance / count), num_samples};
}

PermutationPmf ExtendedMallowsPmf(std::span<const double> thetas,
                                  const ScoreCollection& collection,
                                  const SetFunction& f) {
  RequireSize(thetas.size(), collection.size(), "theta list");
  RequireSize(collection.dimension(), f.size(), "score vectors");
  for (double theta : thetas) {
    if (!std::isfinite(theta) || theta < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "theta entries must be finite and nonnegative");
    }
  }
  return PmfFromExponents(f.size(), [&](const Permutation& sigma) {
    double e = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      if (thetas[i] != 0.0) e -= thetas[i] * LbDivergence(f, collection[i], sigma);
    }
    return e;
  });
}

PermutationPmf ConditionalLtrPmf(const FeatureMatrix& features,
                                 std::span<const double> weights,
                                 const SetFunction& f) {
  RequireSize(features.documents(), f.size(), "documents");
  RequireSize(weights.size(), features.features(), "weight vector");
  RequireEnumerable(f.size());
  return PmfFromExponents(f.size(), [&](const Permutation& sigma) {
    return LtrFeature(features, weights, f, sigma);
  });
}

const PermutationProbability& Mode(const PermutationPmf& pmf) {
  if (pmf.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty distribution");
  }
  return *std::max_element(
      pmf.begin(), pmf.end(),
      [](const PermutationProbability& a, const PermutationProbability& b) {
        return a.probability < b.probability;
      });
}

}  // namespace lbdiv
