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

// Vehicle orders for the two decomposition planners and the binary
// coordination tree that the pairwise planner builds from an order.

#ifndef COORDPLAN_ORDERS_H_
#define COORDPLAN_ORDERS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace coordplan {

using Order = std::vector<int>;

// The merge tree of the pairwise planner over order positions 0..n-1. Each
// pass pairs consecutive elements and carries the last one if the count is
// odd. Nodes are stored in creation order: leaves first (node p is position
// p), then internal nodes pass by pass; root() is the last node.
class CoordinationTree {
 public:
  struct Node {
    int left = -1;   // -1 for leaves
    int right = -1;
    int first = 0;   // covered order positions [first, first + size)
    int size = 1;
  };

  explicit CoordinationTree(int num_leaves);

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return static_cast<int>(nodes_.size()) - 1; }
  int num_leaves() const { return num_leaves_; }
  // Structure-only signature of a subtree, e.g. "((LL)L)".
  std::string Shape(int node) const;

 private:
  int num_leaves_;
  std::vector<Node> nodes_;
};

// 2^(sum over set bits 2^k of (2^k - 1)): the number of leaf orders that yield
// the same coordination tree for n vehicles.
std::uint64_t AutSize(int n);

std::uint64_t Factorial(int n);

// All n!/2 orders whose first two entries are ascending, in lexicographic
// order.
std::vector<Order> EnumerateIncrementalOrders(int n);

// One canonical leaf order per coordination-tree class (n!/AutSize(n) in
// total), in lexicographic order.
std::vector<Order> EnumeratePairwiseTrees(int n);

Order CanonicalIncrementalOrder(Order order);

// Swaps isomorphic sibling subtrees so that the left one holds the smaller
// vehicle index. Orders with equal canonical form produce the same tree.
Order CanonicalPairwiseOrder(const Order& order);

// Uniform random permutation of 0..n-1. Uses only raw engine output so the
// sequence is identical across standard library implementations.
Order RandomOrder(int n, std::mt19937_64& rng);

}  // namespace coordplan

#endif  // COORDPLAN_ORDERS_H_
