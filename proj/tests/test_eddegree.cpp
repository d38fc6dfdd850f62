#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "ed_table.hpp"
#include "lcn/eddegree.hpp"
#include "lcn/error.hpp"

using namespace lcn;

namespace {

Integer C(std::vector<int> k) { return generic_ed_degree(k); }

}  // namespace

TEST_CASE("examples") {
  CHECK(C({2, 2}) == 6);
  CHECK(C({9, 9}) == 10218105);
  CHECK(C({2, 3, 4, 5}) == 2976084);
  CHECK(C({5}) > 0);
}

TEST_CASE("two-layer table") {
  for (int a = 2; a <= 9; ++a)
    for (int b = 2; b <= 9; ++b)
      CHECK(C({a, b}) == golden::ed_table[static_cast<std::size_t>(a - 2)][static_cast<std::size_t>(b - 2)]);
}

TEST_CASE("table grows along rows and columns") {
  for (int a = 2; a <= 9; ++a)
    for (int b = 2; b < 9; ++b) {
      CHECK(C({a, b}) < C({a, b + 1}));
      CHECK(C({b, a}) < C({b + 1, a}));
    }
}

TEST_CASE("merge tree values") {
  for (const auto& node : golden::merge_tree_values) CHECK(C(node.k) == node.value);
  const auto root = merge_tree(std::vector<int>{2, 3, 4, 5});
  CHECK(root.report.value == 2976084);
  CHECK(root.report.k_bar == 10);
  auto has_child = [](const MergeNode& n, std::vector<int> k, long v) {
    std::sort(k.begin(), k.end());
    for (const auto& c : n.children) {
      auto ck = c.report.filter_sizes;
      std::sort(ck.begin(), ck.end());
      if (ck == k) return c.report.value == v;
    }
    return false;
  };
  CHECK(has_child(root, {2, 3, 8}, 12698));
  CHECK(has_child(root, {4, 4, 5}, 806396));
  CHECK(has_child(root, {2, 6, 5}, 139726));
  const MergeNode* n238 = nullptr;
  for (const auto& c : root.children) {
    auto ck = c.report.filter_sizes;
    std::sort(ck.begin(), ck.end());
    if (ck == std::vector<int>{2, 3, 8}) n238 = &c;
  }
  REQUIRE(n238);
  CHECK(has_child(*n238, {2, 10}, 38));
  CHECK(has_child(*n238, {9, 3}, 543));
  CHECK(has_child(*n238, {4, 8}, 3644));
  // merging keeps k_bar, and the recursion stops at two layers
  std::function<void(const MergeNode&)> walk = [&](const MergeNode& n) {
    CHECK(n.report.k_bar == 10);
    if (n.report.filter_sizes.size() == 2) CHECK(n.children.empty());
    for (const auto& c : n.children) walk(c);
  };
  walk(root);
  CHECK(merge_tree(std::vector<int>{2, 2}).children.empty());
}

TEST_CASE("permutation invariance") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> L(2, 4), K(2, 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> k(static_cast<std::size_t>(L(rng)));
    for (auto& x : k) x = K(rng);
    const auto base = C(k);
    std::shuffle(k.begin(), k.end(), rng);
    CHECK(C(k) == base);
  }
}

TEST_CASE("architecture count is stride independent") {
  CHECK(architecture_ed_degree({{2, 2}, {2, 1}}) == 6);
  CHECK(architecture_ed_degree({{2, 2}, {5, 1}}) == 6);
  CHECK(architecture_ed_degree({{3, 2, 2}, {2, 2, 1}}) == architecture_ed_degree({{3, 2, 2}, {3, 4, 1}}));
  CHECK(architecture_ed_degree({{3, 2, 2}, {2, 2, 1}}) == C({3, 2, 2}));
  CHECK(architecture_ed_degree({{4}, {1}}) == 1);
  CHECK(architecture_ed_degree({{2, 2}, {1, 1}}) == 1);
}

TEST_CASE("invalid sizes") {
  CHECK_THROWS_AS(C({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(C({}), InvalidArgument);
}

TEST_CASE("fully connected counts") {
  CHECK(fully_connected_count(3, 3, 1) == 3);
  CHECK(fully_connected_count(5, 4, 2) == 6);
  CHECK(fully_connected_count(2, 2, 1) == 2);
  CHECK(fully_connected_count(2, 2, 1) < C({2, 2}));
  CHECK_THROWS_AS(fully_connected_count(2, 2, 3), InvalidArgument);
  CHECK_THROWS_AS(fully_connected_count(2, 2, 0), InvalidArgument);
}
