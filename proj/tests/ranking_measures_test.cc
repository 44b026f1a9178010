#include "lbdiv/ranking_measures.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lbdiv/divergence.h"
#include "lbdiv/error.h"
#include "test_util.h"

namespace lbdiv {
namespace {

using testing::OracleDivergence;
using testing::P;
using testing::RandomPermutation;
using testing::RandomScores;
using testing::Rng;

// Direct DCG-based loss for cross-checking, written from the definition.
double DirectNdcg(const std::vector<double>& r, const Permutation& sigma,
                  std::size_t k) {
  std::vector<double> sorted = r;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double dcg = 0.0;
  double ideal = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double d = 1.0 / std::log2(static_cast<double>(i) + 2.0);
    dcg += r[sigma.item_at(i)] * d;
    ideal += sorted[i] * d;
  }
  return 1.0 - dcg / ideal;
}

TEST(LogDiscountTest, Values) {
  const std::vector<double> d = LogDiscount(3);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_DOUBLE_EQ(d[0], 1.0);
  EXPECT_DOUBLE_EQ(d[1], 1.0 / std::log2(3.0));
  EXPECT_DOUBLE_EQ(d[2], 0.5);
}

TEST(NdcgLossTest, Examples) {
  const std::vector<double> r{1.0, 0.0};
  EXPECT_EQ(NdcgLoss(r, P({1, 2}), 2, LogDiscount(2)), 0.0);
  EXPECT_NEAR(NdcgLoss(r, P({2, 1}), 2, LogDiscount(2)), 1.0 - 1.0 / std::log2(3.0),
              1e-12);
  EXPECT_NEAR(NdcgLoss(r, P({2, 1}), 2, LogDiscount(2)), 0.3691, 1e-4);
}

TEST(NdcgLossTest, Errors) {
  const std::vector<double> r{1.0, 0.0, 2.0};
  const auto d = LogDiscount(3);
  EXPECT_THROW(NdcgLoss(r, P({1, 2, 3}), 0, d), Error);
  EXPECT_THROW(NdcgLoss(r, P({1, 2, 3}), 4, d), Error);
  EXPECT_THROW(NdcgLoss(std::vector<double>(3, 0.0), P({1, 2, 3}), 2, d), Error);
  EXPECT_THROW(NdcgLoss(r, P({1, 2, 3}), 3, std::vector<double>{0.5, 1.0, 0.2}),
               Error);
  EXPECT_THROW(NdcgLoss(std::vector<double>{1.0, -1.0, 0.0}, P({1, 2, 3}), 2, d),
               Error);
  EXPECT_THROW(NdcgLoss(r, P({1, 2}), 2, d), Error);
}

TEST(NdcgLossTest, RangeAndMinimumByEnumeration) {
  Rng rng(60);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t k = 1 + rng() % n;
    const std::vector<double> r = RandomScores(rng, n, 0.0, 3.0);
    const auto d = LogDiscount(n);
    const Permutation best = OrderingOf(r);
    EXPECT_NEAR(NdcgLoss(r, best, k, d), 0.0, 1e-12);
    ForEachPermutation(n, [&](const Permutation& sigma) {
      const double loss = NdcgLoss(r, sigma, k, d);
      EXPECT_GE(loss, 0.0);
      EXPECT_LE(loss, 1.0);
      EXPECT_NEAR(loss, DirectNdcg(r, sigma, k), 1e-12);
    });
  }
}

TEST(NdcgBridgeTest, ReproducesLossForEveryPermutation) {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t k = 1 + rng() % n;
    const std::vector<double> r = RandomScores(rng, n, 0.0, 3.0);
    const auto d = LogDiscount(n);
    const NdcgBridge bridge = NdcgAsLb(r, k, d);
    EXPECT_EQ(bridge.function.family_name(), "truncated_cardinality");
    EXPECT_NEAR(LbDivergence(bridge.function, r, OrderingOf(r)), 0.0, 1e-12);
    ForEachPermutation(n, [&](const Permutation& sigma) {
      EXPECT_NEAR(OracleDivergence(bridge.function, r, sigma) / bridge.scale,
                  NdcgLoss(r, sigma, k, d), 1e-9);
    });
  }
}

TEST(NdcgBridgeTest, ScaleIsIdealDcg) {
  const std::vector<double> r{0.0, 2.0, 1.0};
  const NdcgBridge bridge = NdcgAsLb(r, 2, LogDiscount(3));
  EXPECT_DOUBLE_EQ(bridge.scale, 2.0 + 1.0 / std::log2(3.0));
}

TEST(AucLossTest, Examples) {
  EXPECT_EQ(AucLoss(P({1, 2, 3, 4}), GoodBadSplit{{0, 1}, {2, 3}}), 0.0);
  EXPECT_EQ(AucLoss(P({2, 1}), GoodBadSplit{{0}, {1}}), 1.0);
  EXPECT_DOUBLE_EQ(AucLoss(P({3, 1, 4, 2}), GoodBadSplit{{0, 1}, {2, 3}}), 0.75);
}

TEST(AucLossTest, InvalidSplits) {
  const Permutation id = Permutation::Identity(3);
  EXPECT_THROW(AucLoss(id, GoodBadSplit{{}, {1}}), Error);
  EXPECT_THROW(AucLoss(id, GoodBadSplit{{0}, {}}), Error);
  EXPECT_THROW(AucLoss(id, GoodBadSplit{{0}, {0}}), Error);
  EXPECT_THROW(AucLoss(id, GoodBadSplit{{0, 0}, {1}}), Error);
  EXPECT_THROW(AucLoss(id, GoodBadSplit{{0}, {3}}), Error);
}

GoodBadSplit RandomSplit(Rng& rng, std::size_t n) {
  const Permutation shuffled = RandomPermutation(rng, n);
  const std::size_t good = 1 + rng() % (n - 1);
  const std::size_t bad = 1 + rng() % (n - good);
  GoodBadSplit split;
  for (std::size_t i = 0; i < good; ++i) split.good.push_back(shuffled.item_at(i));
  for (std::size_t i = 0; i < bad; ++i) {
    split.bad.push_back(shuffled.item_at(good + i));
  }
  return split;
}

TEST(AucLossTest, ReversalComplements) {
  Rng rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const GoodBadSplit split = RandomSplit(rng, n);
    const Permutation sigma = RandomPermutation(rng, n);
    std::vector<std::size_t> reversed(sigma.items().rbegin(), sigma.items().rend());
    EXPECT_NEAR(AucLoss(sigma, split) +
                    AucLoss(Permutation::FromItems(reversed), split),
                1.0, 1e-12);
  }
}

TEST(AucLossTest, AdjacentSwapMovesByOnePair) {
  const GoodBadSplit split{{0, 1}, {2, 3, 4}};
  const double unit = 1.0 / 6.0;
  // Good item 2 sits just above bad item 3; swapping them adds one violation.
  EXPECT_NEAR(AucLoss(P({1, 3, 2, 4, 5}), split) - AucLoss(P({1, 2, 3, 4, 5}), split),
              unit, 1e-12);
}

TEST(AucBridgeTest, ProportionalWithOracleConstant) {
  Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const GoodBadSplit split = RandomSplit(rng, n);
    const AucBridge bridge = AucAsLb(n, split);
    EXPECT_EQ(bridge.scale, kAucBridgeScale);
    ForEachPermutation(n, [&](const Permutation& sigma) {
      const double loss = AucLoss(sigma, split);
      const double lb = OracleDivergence(bridge.function, bridge.scores, sigma);
      EXPECT_NEAR(lb, kAucBridgeScale * loss, 1e-9);
      EXPECT_NEAR(LbDivergence(bridge.function, bridge.scores, sigma), lb, 1e-9);
    });
  }
}

}  // namespace
}  // namespace lbdiv
