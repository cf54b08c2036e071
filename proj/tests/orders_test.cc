// Copyright 2026 The coordplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coordplan/orders.h"

#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "coordplan/error.h"
#include "support/test_support.h"

namespace coordplan {
namespace {

TEST(OrdersTest, IncrementalCounts) {
  const std::size_t want[] = {1, 3, 12, 60, 360};
  for (int n = 2; n <= 6; ++n) {
    const auto orders = EnumerateIncrementalOrders(n);
    EXPECT_EQ(orders.size(), want[n - 2]);
    EXPECT_EQ(orders.size(), testing::CountIncrementalClasses(n));
    EXPECT_TRUE(std::is_sorted(orders.begin(), orders.end()));
  }
}

TEST(OrdersTest, AutSize) {
  EXPECT_EQ(AutSize(1), 1u);
  EXPECT_EQ(AutSize(2), 2u);
  EXPECT_EQ(AutSize(3), 2u);
  EXPECT_EQ(AutSize(4), 8u);
  EXPECT_EQ(AutSize(5), 8u);
  EXPECT_EQ(AutSize(6), 16u);
}

TEST(OrdersTest, PairwiseCountsMatchClassEnumeration) {
  const std::size_t want[] = {1, 3, 3, 15, 45};
  for (int n = 2; n <= 6; ++n) {
    const auto trees = EnumeratePairwiseTrees(n);
    EXPECT_EQ(trees.size(), want[n - 2]);
    EXPECT_EQ(trees.size(), testing::CountPairwiseTreeClasses(n));
    EXPECT_EQ(trees.size(), Factorial(n) / AutSize(n));
  }
  for (int n = 7; n <= 8; ++n) {
    EXPECT_EQ(EnumeratePairwiseTrees(n).size(),
              testing::CountPairwiseTreeClasses(n));
  }
}

TEST(OrdersTest, EnumerationGuard) {
  try {
    EnumerateIncrementalOrders(11);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(OrdersTest, CanonicalFormsAreIdempotentAndClassInvariant) {
  for (int n = 2; n <= 6; ++n) {
    Order order(n);
    std::iota(order.begin(), order.end(), 0);
    std::set<Order> incremental, pairwise;
    do {
      const Order c = CanonicalPairwiseOrder(order);
      EXPECT_EQ(CanonicalPairwiseOrder(c), c);
      pairwise.insert(c);
      incremental.insert(CanonicalIncrementalOrder(order));
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(pairwise.size(), EnumeratePairwiseTrees(n).size());
    EXPECT_EQ(incremental.size(), EnumerateIncrementalOrders(n).size());
  }
}

TEST(CoordinationTreeTest, FiveLeaves) {
  const CoordinationTree tree(5);
  const auto& nodes = tree.nodes();
  ASSERT_EQ(nodes.size(), 9u);
  // Pass 1: two pairs, leaf 4 carried.
  EXPECT_EQ(nodes[5].left, 0);
  EXPECT_EQ(nodes[5].right, 1);
  EXPECT_EQ(nodes[6].left, 2);
  EXPECT_EQ(nodes[6].right, 3);
  // Pass 2: one pair, leaf 4 still carried.
  EXPECT_EQ(nodes[7].left, 5);
  EXPECT_EQ(nodes[7].right, 6);
  // Pass 3: final pair.
  EXPECT_EQ(nodes[8].left, 7);
  EXPECT_EQ(nodes[8].right, 4);
  EXPECT_EQ(tree.root(), 8);
  EXPECT_EQ(tree.Shape(tree.root()), "(((LL)(LL))L)");
}

TEST(RandomOrderTest, DeterministicPermutation) {
  std::mt19937_64 a(42), b(42);
  for (int k = 0; k < 20; ++k) {
    const Order x = RandomOrder(7, a);
    EXPECT_EQ(x, RandomOrder(7, b));
    Order sorted = x;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < 7; ++v) EXPECT_EQ(sorted[v], v);
  }
}

}  // namespace
}  // namespace coordplan
