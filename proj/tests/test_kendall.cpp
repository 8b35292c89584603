// tests/test_kendall.cpp

// Copyright 2026  The adjviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "core/error.hpp"
#include "core/kendall.hpp"

using adjviz::Error;
using adjviz::ErrorCode;
using adjviz::kendall_tau_fast;
using adjviz::kendall_tau_naive;
using adjviz::TauResult;
using adjviz::TauStats;

namespace {

std::vector<double> random_column(std::mt19937_64& rng, std::size_t n,
                                  bool with_ties) {
  std::vector<double> column(n);
  if (with_ties) {
    // A small value pool forces plenty of tied scores.
    std::uniform_int_distribution<int> pool(0, static_cast<int>(n) / 4 + 2);
    for (auto& v : column) v = 0.25 * pool(rng);
  } else {
    std::uniform_real_distribution<double> real(-1.0, 1.0);
    for (auto& v : column) v = real(rng);
  }
  return column;
}

}  // namespace

TEST_CASE("identical ordering gives tau 1") {
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{10, 20, 30};
  for (auto* fn : {kendall_tau_naive, kendall_tau_fast}) {
    TauResult r = fn(x, y);
    CHECK(r.tau == 1.0);
    CHECK(r.stats.n_con == 3);
    CHECK(r.stats.n_dis == 0);
    CHECK(r.stats.n_pairs == 3);
  }
}

TEST_CASE("reversed ordering gives tau -1") {
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{3, 2, 1};
  for (auto* fn : {kendall_tau_naive, kendall_tau_fast}) {
    TauResult r = fn(x, y);
    CHECK(r.tau == -1.0);
    CHECK(r.stats.n_con == 0);
    CHECK(r.stats.n_dis == 3);
  }
}

TEST_CASE("single swapped pair") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{1, 2, 4, 3};
  for (auto* fn : {kendall_tau_naive, kendall_tau_fast}) {
    TauResult r = fn(x, y);
    CHECK(r.stats.n_con == 5);
    CHECK(r.stats.n_dis == 1);
    // (5 - 1) / 6, independently cross-checked against a reference
    // statistics package.
    CHECK(r.tau == doctest::Approx(0.6666666666666666).epsilon(1e-14));
  }
}

TEST_CASE("tie in one column enters one denominator factor only") {
  const std::vector<double> x{1, 1, 2};
  const std::vector<double> y{1, 2, 3};
  for (auto* fn : {kendall_tau_naive, kendall_tau_fast}) {
    TauResult r = fn(x, y);
    CHECK(r.stats.n_con == 2);
    CHECK(r.stats.n_dis == 0);
    CHECK(r.stats.ties_x == 1);
    CHECK(r.stats.ties_y == 0);
    CHECK(r.stats.ties_both == 0);
    // 2 / sqrt((2 + 1) * 2) = 2 / sqrt(6), cross-checked externally.
    CHECK(r.tau == doctest::Approx(0.8164965809277259).epsilon(1e-14));
  }
}

TEST_CASE("pairs tied in both columns vanish from every factor") {
  const std::vector<double> x{1, 1, 2, 3};
  const std::vector<double> y{5, 5, 7, 9};
  for (auto* fn : {kendall_tau_naive, kendall_tau_fast}) {
    TauResult r = fn(x, y);
    CHECK(r.stats.ties_both == 1);
    CHECK(r.stats.ties_x == 0);
    CHECK(r.stats.ties_y == 0);
    CHECK(r.stats.n_con == 5);
    CHECK(r.tau == 1.0);
  }
}

TEST_CASE("self correlation is exactly 1 even with ties") {
  const std::vector<double> x{1, 1, 2, 3, 3, 3};
  for (auto* fn : {kendall_tau_naive, kendall_tau_fast}) {
    TauResult r = fn(x, x);
    CHECK(r.tau == 1.0);
    CHECK(r.stats.n_dis == 0);
    CHECK(r.stats.ties_x == 0);
    CHECK(r.stats.ties_y == 0);
    CHECK(r.stats.ties_both == 4);
  }
}

TEST_CASE("constant column is degenerate") {
  const std::vector<double> x{5, 5, 5};
  const std::vector<double> y{1, 2, 3};
  CHECK_THROWS_AS(kendall_tau_naive(x, y), Error);
  CHECK_THROWS_AS(kendall_tau_fast(x, y), Error);
  try {
    kendall_tau_fast(x, y);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateColumn);
  }
  CHECK_THROWS_AS(kendall_tau_fast(y, x), Error);
}

TEST_CASE("short and mismatched inputs are rejected") {
  const std::vector<double> one{1.0};
  const std::vector<double> two{1.0, 2.0};
  const std::vector<double> three{1.0, 2.0, 3.0};
  try {
    kendall_tau_fast(one, one);
    FAIL("expected DegenerateColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateColumn);
  }
  try {
    kendall_tau_fast(two, three);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }
}

TEST_CASE("fast equals naive on randomized inputs with and without ties") {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<std::size_t> size(2, 300);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = size(rng);
    const bool ties = round % 2 == 0;
    std::vector<double> x = random_column(rng, n, ties);
    std::vector<double> y = random_column(rng, n, ties);
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; }) ||
        std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) {
      continue;
    }
    TauResult naive = kendall_tau_naive(x, y);
    TauResult fast = kendall_tau_fast(x, y);
    REQUIRE(naive.stats == fast.stats);
    REQUIRE(naive.tau == fast.tau);
    CHECK(naive.stats.n_con + naive.stats.n_dis + naive.stats.ties_x +
              naive.stats.ties_y + naive.stats.ties_both ==
          naive.stats.n_pairs);
    CHECK(naive.stats.n_pairs == n * (n - 1) / 2);
    CHECK(naive.tau >= -1.0);
    CHECK(naive.tau <= 1.0);
  }
}

TEST_CASE("symmetry swaps the per-column tie counts") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 25; ++round) {
    std::vector<double> x = random_column(rng, 80, true);
    std::vector<double> y = random_column(rng, 80, true);
    TauResult xy = kendall_tau_fast(x, y);
    TauResult yx = kendall_tau_fast(y, x);
    CHECK(xy.tau == yx.tau);
    CHECK(xy.stats.n_con == yx.stats.n_con);
    CHECK(xy.stats.n_dis == yx.stats.n_dis);
    CHECK(xy.stats.ties_x == yx.stats.ties_y);
    CHECK(xy.stats.ties_y == yx.stats.ties_x);
    CHECK(xy.stats.ties_both == yx.stats.ties_both);
  }
}

TEST_CASE("strictly increasing transforms leave all counts unchanged") {
  std::mt19937_64 rng(11);
  std::vector<double> x = random_column(rng, 150, true);
  std::vector<double> y = random_column(rng, 150, true);
  TauResult base = kendall_tau_fast(x, y);

  // 2v + 1 is exact in floating point and order preserving.
  std::vector<double> x_affine(x);
  for (auto& v : x_affine) v = 2.0 * v + 1.0;
  TauResult affine = kendall_tau_fast(x_affine, y);
  CHECK(affine.stats == base.stats);
  CHECK(affine.tau == base.tau);

  // Rank substitution: replace each distinct value by its rank index.
  std::vector<double> sorted(x);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> x_rank(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x_rank[i] = static_cast<double>(
        std::lower_bound(sorted.begin(), sorted.end(), x[i]) - sorted.begin());
  }
  TauResult ranked = kendall_tau_fast(x_rank, y);
  CHECK(ranked.stats == base.stats);
  CHECK(ranked.tau == base.tau);
}

TEST_CASE("row permutation invariance") {
  std::mt19937_64 rng(13);
  std::vector<double> x = random_column(rng, 120, true);
  std::vector<double> y = random_column(rng, 120, false);
  TauResult base = kendall_tau_fast(x, y);

  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> xp(x.size()), yp(y.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    xp[i] = x[perm[i]];
    yp[i] = y[perm[i]];
  }
  TauResult permuted = kendall_tau_fast(xp, yp);
  CHECK(permuted.stats == base.stats);
  CHECK(permuted.tau == base.tau);
}

TEST_CASE("negating a tie-free column negates tau") {
  std::mt19937_64 rng(17);
  std::vector<double> x = random_column(rng, 90, true);
  std::vector<double> y = random_column(rng, 90, false);  // tie-free
  std::vector<double> neg_y(y);
  for (auto& v : neg_y) v = -v;
  TauResult base = kendall_tau_fast(x, y);
  TauResult negated = kendall_tau_fast(x, neg_y);
  CHECK(negated.tau == doctest::Approx(-base.tau).epsilon(1e-15));
  CHECK(negated.stats.n_con == base.stats.n_dis);
  CHECK(negated.stats.n_dis == base.stats.n_con);
}

TEST_CASE("returned tau reproduces the count formula") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 50; ++round) {
    std::vector<double> x = random_column(rng, 64, true);
    std::vector<double> y = random_column(rng, 64, true);
    TauResult r = kendall_tau_fast(x, y);
    const auto& s = r.stats;
    const double fx = static_cast<double>(s.n_con + s.n_dis + s.ties_x);
    const double fy = static_cast<double>(s.n_con + s.n_dis + s.ties_y);
    const double expected =
        (static_cast<double>(s.n_con) - static_cast<double>(s.n_dis)) /
        (std::sqrt(fx) * std::sqrt(fy));
    CHECK(r.tau == doctest::Approx(expected).epsilon(1e-15));
  }
}
