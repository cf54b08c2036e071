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

#include "coordplan/error.h"

namespace coordplan {
namespace {

// Largest n for which exhaustive enumeration is attempted.
constexpr int kMaxEnumerable = 10;

void CheckEnumerable(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need at least 1 vehicle");
  if (n > kMaxEnumerable) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive order enumeration limited to " +
                    std::to_string(kMaxEnumerable) + " vehicles");
  }
}

int MinLeaf(const Order& order, const CoordinationTree::Node& node) {
  return *std::min_element(order.begin() + node.first,
                           order.begin() + node.first + node.size);
}

}  // namespace

CoordinationTree::CoordinationTree(int num_leaves) : num_leaves_(num_leaves) {
  if (num_leaves < 1) {
    throw Error(ErrorCode::kInvalidArgument, "tree needs at least one leaf");
  }
  std::vector<int> level;
  for (int p = 0; p < num_leaves; ++p) {
    nodes_.push_back({-1, -1, p, 1});
    level.push_back(p);
  }
  while (level.size() > 1) {
    std::vector<int> next;
    for (std::size_t k = 0; k + 1 < level.size(); k += 2) {
      const Node& l = nodes_[level[k]];
      const Node& r = nodes_[level[k + 1]];
      nodes_.push_back({level[k], level[k + 1], l.first, l.size + r.size});
      next.push_back(static_cast<int>(nodes_.size()) - 1);
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
}

std::string CoordinationTree::Shape(int node) const {
  const Node& n = nodes_[node];
  if (n.left < 0) return "L";
  return "(" + Shape(n.left) + Shape(n.right) + ")";
}

std::uint64_t AutSize(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need at least 1 vehicle");
  std::uint64_t exponent = 0;
  for (int k = 0; (1 << k) <= n; ++k) {
    if (n & (1 << k)) exponent += (std::uint64_t{1} << k) - 1;
  }
  if (exponent >= 64) {
    throw Error(ErrorCode::kTooLarge, "automorphism count overflows");
  }
  return std::uint64_t{1} << exponent;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Order CanonicalIncrementalOrder(Order order) {
  if (order.size() >= 2 && order[0] > order[1]) std::swap(order[0], order[1]);
  return order;
}

Order CanonicalPairwiseOrder(const Order& order) {
  const CoordinationTree tree(static_cast<int>(order.size()));
  Order out = order;
  // Nodes are in creation order, so children are canonicalized before their
  // parent.
  for (const CoordinationTree::Node& node : tree.nodes()) {
    if (node.left < 0) continue;
    const auto& l = tree.nodes()[node.left];
    const auto& r = tree.nodes()[node.right];
    if (l.size != r.size || tree.Shape(node.left) != tree.Shape(node.right)) {
      continue;
    }
    if (MinLeaf(out, l) > MinLeaf(out, r)) {
      std::swap_ranges(out.begin() + l.first, out.begin() + l.first + l.size,
                       out.begin() + r.first);
    }
  }
  return out;
}

std::vector<Order> EnumerateIncrementalOrders(int n) {
  CheckEnumerable(n);
  Order order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Order> out;
  do {
    if (n < 2 || order[0] < order[1]) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<Order> EnumeratePairwiseTrees(int n) {
  CheckEnumerable(n);
  Order order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Order> out;
  do {
    if (CanonicalPairwiseOrder(order) == order) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Order RandomOrder(int n, std::mt19937_64& rng) {
  Order order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    // Rejection sampling for an unbiased index in [0, k].
    const std::uint64_t bound = static_cast<std::uint64_t>(k) + 1;
    const std::uint64_t limit = rng.max() - rng.max() % bound;
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(order[k], order[static_cast<int>(draw % bound)]);
  }
  return order;
}

}  // namespace coordplan
