#include <doctest.h>

#include <chrono>

#include "orient/generate.hpp"
#include "orient/wto.hpp"
#include "support/oracles.hpp"

using namespace orient;

namespace {

WeightedTree star(Weight center, std::vector<Weight> leaves) {
  std::vector<Weight> w{center};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    w.push_back(leaves[i]);
    edges.push_back({0, static_cast<int>(i) + 1});
  }
  return WeightedTree(std::move(w), std::move(edges));
}

Weight sum_of(const std::vector<Weight>& w, const std::vector<int>& idx) {
  Weight s = 0;
  for (int i : idx) s += w[i];
  return s;
}

}  // namespace

TEST_CASE("parse_epsilon") {
  CHECK(parse_epsilon("0.05") == doctest::Approx(0.05));
  CHECK(parse_epsilon("1/20") == doctest::Approx(0.05));
  CHECK(parse_epsilon("1") == doctest::Approx(1.0));
  CHECK_THROWS_AS(parse_epsilon("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_epsilon("-0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_epsilon("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_epsilon("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_epsilon("abc"), std::invalid_argument);
}

TEST_CASE("balanced_partition_fptas examples") {
  const std::vector<Weight> a{5, 5};
  auto p = balanced_partition_fptas(a, {0.5});
  CHECK(p.sum == 5);
  CHECK(p.product == 25);

  const std::vector<Weight> big{1'000'000'000, 1'000'000'000};
  p = balanced_partition_fptas(big, {0.1});
  CHECK(p.product == static_cast<Wide>(1'000'000'000'000'000'000LL));

  CHECK_THROWS_AS(balanced_partition_fptas(a, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(balanced_partition_fptas(a, {-1.0}), std::invalid_argument);
}

TEST_CASE("balanced_partition_fptas is within 1 - eps of the exact DP") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Weight> w(50);
    for (auto& x : w) x = 1 + static_cast<Weight>(rng() % 1'000'000);
    Weight total = 0;
    for (auto x : w) total += x;
    const auto exact = balanced_partition_exact(w, total);
    const auto approx = balanced_partition_fptas(w, {0.01});
    CHECK(approx.sum == sum_of(w, approx.subset));
    CHECK(approx.product <= exact.product);
    CHECK(static_cast<long double>(approx.product) >= 0.99L * static_cast<long double>(exact.product));
    const Wide cap = static_cast<Wide>(total / 2) * static_cast<Wide>(total - total / 2);
    CHECK(approx.product <= cap);
  }
}

TEST_CASE("balanced_partition_fptas never overshoots on small sets") {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Weight> w(1 + rng() % 10);
    for (auto& x : w) x = 1 + static_cast<Weight>(rng() % 1000);
    for (double eps : {1.0, 0.5, 0.1}) {
      const auto p = balanced_partition_fptas(w, {eps});
      const auto best = testing::best_partition_product(w);
      CHECK(p.product <= best);
      CHECK(static_cast<long double>(p.product) >= (1.0L - eps) * static_cast<long double>(best));
    }
  }
}

TEST_CASE("wto_solve within budget matches optimal_tree_orientation") {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedTree t = random_weighted_tree(30, 50, rng);
    const auto w = wto_solve(t, {});
    const auto opt = optimal_tree_orientation(t);
    CHECK(w.exact);
    CHECK(w.solution.report.mu == opt.report.mu);
    CHECK(w.solution.orientation.forward == opt.orientation.forward);
  }
}

TEST_CASE("wto_solve on a large symmetric star") {
  const Weight half = 1'000'000'000;
  const WeightedTree t = star(2 * half, {half, half});
  const auto res = wto_solve(t, {0.1});
  CHECK_FALSE(res.exact);
  const Wide s = 2 * static_cast<Wide>(half);
  CHECK(res.solution.report.mu == 5 * (s / 2) * (s / 2));
  CHECK(res.solution.report.mu == mu(res.solution.orientation));
}

TEST_CASE("wto_solve equals brute force for b <= 14 and stays within eps in FPTAS mode") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int b = 1 + static_cast<int>(rng() % 14);
    const WeightedTree t = random_weighted_tree(b, 20, rng);
    const auto brute = brute_force_tree_orientation(t);
    CHECK(brute.mu == mu(brute.orientation));
    CHECK(wto_solve(t, {}).solution.report.mu == brute.mu);
    for (double eps : {0.5, 0.1}) {
      const auto approx = wto_solve(t, {eps, 0});
      CHECK(approx.solution.report.mu <= brute.mu);
      CHECK(static_cast<long double>(approx.solution.report.mu) >=
            (1.0L - eps) * static_cast<long double>(brute.mu));
      CHECK(approx.solution.report.mu == mu(approx.solution.orientation));
    }
  }
}

TEST_CASE("wto_solve on a 200-vertex tree with eps = 0.05") {
  Rng rng(35);
  const WeightedTree t = random_weighted_tree(200, 10'000, rng);
  const auto exact = optimal_tree_orientation(t, t.total_weight());
  const auto approx = wto_solve(t, {0.05, 0});
  CHECK(approx.solution.report.mu <= exact.report.mu);
  CHECK(static_cast<long double>(approx.solution.report.mu) >=
        0.95L * static_cast<long double>(exact.report.mu));
}

TEST_CASE("FPTAS time does not square when 1/eps doubles") {
  Rng rng(36);
  std::vector<Weight> w(100);
  for (auto& x : w) x = 1 + static_cast<Weight>(rng() % 1'000'000'000);
  auto time_of = [&](double eps) {
    const auto start = std::chrono::steady_clock::now();
    (void)balanced_partition_fptas(w, {eps});
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  const double coarse = time_of(0.02);
  const double fine = time_of(0.01);
  // Squaring a sub-second time would shrink it; compare growth ratios instead.
  CHECK(fine <= std::max(0.05, 8.0 * coarse));
}

TEST_CASE("brute_force_tree_orientation examples and size limit") {
  std::vector<Edge> p3{{0, 1}, {1, 2}};
  CHECK(brute_force_tree_orientation(WeightedTree({1, 1, 1}, p3)).mu == 3);
  CHECK(brute_force_tree_orientation(WeightedTree({2, 3}, {{0, 1}})).mu == 6);
  CHECK(brute_force_tree_orientation(star(2, {1, 1})).mu == 5);
  CHECK(brute_force_tree_orientation(WeightedTree({4}, {})).mu == 0);

  std::vector<Edge> path;
  for (int i = 0; i + 1 < 23; ++i) path.push_back({i, i + 1});
  CHECK_THROWS_AS(brute_force_tree_orientation(WeightedTree(std::vector<Weight>(23, 1), path)), SizeLimitError);
}
