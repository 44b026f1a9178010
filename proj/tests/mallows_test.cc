#include "lbdiv/mallows.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lbdiv/error.h"
#include "test_util.h"

namespace lbdiv {
namespace {

using testing::P;
using testing::RandomScores;
using testing::RandomStrictIncrements;
using testing::RandomStrictScores;
using testing::Rng;

ScoreCollection RandomCollection(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::vector<double>> v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(RandomScores(rng, n));
  return ScoreCollection(std::move(v));
}

// Features matrix whose j-th column is the j-th vector of the collection.
FeatureMatrix AsFeatures(const ScoreCollection& x) {
  std::vector<std::vector<double>> rows(x.dimension(),
                                        std::vector<double>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t i = 0; i < x.dimension(); ++i) rows[i][j] = x[j][i];
  }
  return FeatureMatrix(std::move(rows));
}

double Total(const PermutationPmf& pmf) {
  double s = 0.0;
  for (const auto& e : pmf) s += e.probability;
  return s;
}

const std::vector<double> kX{0.9, 0.5, 0.2};

TEST(MallowsDensityTest, Examples) {
  const SetFunction f = SetFunction::MakeCardinality({2, 1, 0});
  EXPECT_EQ(MallowsLogUnnormalized({0.0, f}, kX, P({3, 2, 1})), 0.0);
  EXPECT_EQ(MallowsLogUnnormalized({3.0, f}, kX, OrderingOf(kX)), 0.0);
  EXPECT_NEAR(MallowsLogUnnormalized({2.0, f}, kX, P({3, 2, 1})), -2.8, 1e-12);
}

TEST(MallowsDensityTest, Errors) {
  const SetFunction f = SetFunction::MakeCardinality({2, 1, 0});
  EXPECT_THROW(MallowsLogUnnormalized({-1.0, f}, kX, P({1, 2, 3})), Error);
  EXPECT_THROW(MallowsLogUnnormalized({1.0, f}, std::vector<double>{1.2, 0, 0},
                                      P({1, 2, 3})),
               Error);
  EXPECT_THROW(MallowsLogUnnormalized({NAN, f}, kX, P({1, 2, 3})), Error);
}

TEST(PartitionTest, ZeroThetaIsExactlyOne) {
  const SetFunction f = SetFunction::MakeCardinality({2, 1, 0});
  const PartitionEstimate z = EstimatePartition({0.0, f}, P({2, 3, 1}), 5000, 9);
  EXPECT_EQ(z.estimate, 1.0);
  EXPECT_EQ(z.std_error, 0.0);
  EXPECT_EQ(z.samples, 5000u);
}

TEST(PartitionTest, Errors) {
  const SetFunction f = SetFunction::MakeCardinality({2, 1, 0});
  EXPECT_THROW(EstimatePartition({1.0, f}, P({1, 2, 3}), 999, 0), Error);
  EXPECT_THROW(EstimatePartition({1.0, f}, P({1, 2}), 1000, 0), Error);
  EXPECT_THROW(EstimatePartition({-0.5, f}, P({1, 2, 3}), 1000, 0), Error);
}

TEST(PartitionTest, SameForEveryCenterUnderCardinalityFunctions) {
  const SetFunction f = SetFunction::MakeCardinality({3, 2, 1});
  for (double theta : {0.5, 1.0, 2.0}) {
    const PartitionEstimate a = EstimatePartition({theta, f}, P({1, 2, 3}), 100000, 1);
    const PartitionEstimate b = EstimatePartition({theta, f}, P({3, 2, 1}), 100000, 2);
    EXPECT_LT(std::abs(a.estimate - b.estimate),
              3.0 * std::hypot(a.std_error, b.std_error));
    EXPECT_GT(a.estimate, 0.0);
    EXPECT_LE(a.estimate, 1.0);
  }
}

TEST(PartitionTest, NonincreasingInThetaWithCommonSamples) {
  const SetFunction f = SetFunction::MakeCompleteGraphCut(4);
  double previous = 1.0;
  for (double theta : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double z = EstimatePartition({theta, f}, P({2, 4, 1, 3}), 4000, 77).estimate;
    EXPECT_LE(z, previous);
    previous = z;
  }
}

TEST(PartitionTest, ReproducibleForSeed) {
  const SetFunction f = SetFunction::MakeCardinality({3, 2, 1, 0.5});
  const PartitionEstimate a = EstimatePartition({1.5, f}, P({4, 1, 3, 2}), 3000, 11);
  const PartitionEstimate b = EstimatePartition({1.5, f}, P({4, 1, 3, 2}), 3000, 11);
  const PartitionEstimate c = EstimatePartition({1.5, f}, P({4, 1, 3, 2}), 3000, 12);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_NE(a.estimate, c.estimate);
}

TEST(ExtendedMallowsTest, ZeroThetaIsUniform) {
  Rng rng(90);
  const ScoreCollection x = RandomCollection(rng, 4, 3);
  const std::vector<double> thetas(3, 0.0);
  const PermutationPmf pmf =
      ExtendedMallowsPmf(thetas, x, SetFunction::MakeCompleteGraphCut(4));
  ASSERT_EQ(pmf.size(), 24u);
  for (const auto& e : pmf) EXPECT_NEAR(e.probability, 1.0 / 24.0, 1e-15);
}

TEST(ExtendedMallowsTest, ProperAndShiftInvariant) {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t m = 1 + rng() % 4;
    const ScoreCollection x = RandomCollection(rng, n, m);
    const std::vector<double> thetas = RandomScores(rng, m, 0.0, 5.0);
    const SetFunction f = SetFunction::MakeCardinality(RandomStrictIncrements(rng, n));
    const PermutationPmf pmf = ExtendedMallowsPmf(thetas, x, f);
    EXPECT_NEAR(Total(pmf), 1.0, 1e-12);
    auto shifted = x.vectors();
    for (auto& v : shifted) {
      for (double& e : v) e -= 0.75;
    }
    const PermutationPmf moved = ExtendedMallowsPmf(thetas, ScoreCollection(shifted), f);
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      EXPECT_GE(pmf[i].probability, 0.0);
      EXPECT_EQ(pmf[i].permutation, moved[i].permutation);
      EXPECT_NEAR(pmf[i].probability, moved[i].probability, 1e-12);
    }
  }
}

TEST(ExtendedMallowsTest, LargeThetaConcentratesOnTheVectorOrdering) {
  Rng rng(92);
  const std::vector<double> x = RandomStrictScores(rng, 5);
  const SetFunction f = SetFunction::MakeCardinality(RandomStrictIncrements(rng, 5));
  const std::vector<double> thetas{1e4};
  const PermutationPmf pmf = ExtendedMallowsPmf(thetas, ScoreCollection({x}), f);
  EXPECT_EQ(Mode(pmf).permutation, OrderingOf(x));
}

TEST(ExtendedMallowsTest, UniformThetaModeIsBruteForceRepresentative) {
  Rng rng(93);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t m = 1 + rng() % 5;
    const ScoreCollection x = RandomCollection(rng, n, m);
    const SetFunction f = SetFunction::MakeCardinality(RandomStrictIncrements(rng, n));
    const std::vector<double> thetas(m, 1.3);
    EXPECT_EQ(Mode(ExtendedMallowsPmf(thetas, x, f)).permutation,
              BruteForceRepresentative(x, f).permutation);
  }
}

TEST(ExtendedMallowsTest, ProductOfPerVectorDensities) {
  Rng rng(94);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t m = 1 + rng() % 4;
    std::vector<std::vector<double>> v;
    for (std::size_t i = 0; i < m; ++i) v.push_back(RandomScores(rng, n));
    const ScoreCollection x(v);
    const std::vector<double> thetas = RandomScores(rng, m, 0.0, 3.0);
    const SetFunction f = SetFunction::MakeCardinality(RandomStrictIncrements(rng, n));
    const PermutationPmf pmf = ExtendedMallowsPmf(thetas, x, f);
    std::vector<double> product;
    double total = 0.0;
    ForEachPermutation(n, [&](const Permutation& sigma) {
      double log_p = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        log_p += MallowsLogUnnormalized({thetas[i], f}, x[i], sigma);
      }
      product.push_back(std::exp(log_p));
      total += product.back();
    });
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      EXPECT_NEAR(pmf[i].probability, product[i] / total, 1e-12);
    }
  }
}

TEST(ExtendedMallowsTest, Errors) {
  const ScoreCollection x({{0.1, 0.2}});
  const SetFunction f = SetFunction::MakeCompleteGraphCut(2);
  EXPECT_THROW(ExtendedMallowsPmf(std::vector<double>{-1.0}, x, f), Error);
  EXPECT_THROW(ExtendedMallowsPmf(std::vector<double>{1.0, 1.0}, x, f), Error);
  try {
    ExtendedMallowsPmf(std::vector<double>{1.0},
                       ScoreCollection({std::vector<double>(9, 0.0)}),
                       SetFunction::MakeCompleteGraphCut(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacity);
  }
  EXPECT_THROW(Mode(PermutationPmf{}), Error);
}

TEST(ConditionalLtrTest, ZeroWeightsAreUniform) {
  Rng rng(95);
  const FeatureMatrix features = AsFeatures(RandomCollection(rng, 3, 2));
  const PermutationPmf pmf = ConditionalLtrPmf(features, std::vector<double>(2, 0.0),
                                               SetFunction::MakeCompleteGraphCut(3));
  for (const auto& e : pmf) EXPECT_NEAR(e.probability, 1.0 / 6.0, 1e-15);
}

TEST(ConditionalLtrTest, NegatedWeightsReproduceExtendedModel) {
  Rng rng(96);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t m = 1 + rng() % 4;
    const ScoreCollection x = RandomCollection(rng, n, m);
    const std::vector<double> thetas = RandomScores(rng, m, 0.0, 4.0);
    std::vector<double> w(m);
    for (std::size_t j = 0; j < m; ++j) w[j] = -thetas[j];
    const SetFunction f = SetFunction::MakeCardinality(RandomStrictIncrements(rng, n));
    const PermutationPmf a = ExtendedMallowsPmf(thetas, x, f);
    const PermutationPmf b = ConditionalLtrPmf(AsFeatures(x), w, f);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].permutation, b[i].permutation);
      EXPECT_NEAR(a[i].probability, b[i].probability, 1e-12);
    }
    EXPECT_NEAR(Total(b), 1.0, 1e-12);
  }
}

TEST(ConditionalLtrTest, ModeIsLtrInference) {
  Rng rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t m = 1 + rng() % 4;
    const FeatureMatrix features = AsFeatures(RandomCollection(rng, n, m));
    const std::vector<double> theta = RandomScores(rng, m, 0.1, 3.0);
    std::vector<double> w(m);
    for (std::size_t j = 0; j < m; ++j) w[j] = -theta[j];
    const SetFunction f = SetFunction::MakeCardinality(RandomStrictIncrements(rng, n));
    EXPECT_EQ(Mode(ConditionalLtrPmf(features, w, f)).permutation,
              LtrInference(features, theta));
  }
}

}  // namespace
}  // namespace lbdiv
