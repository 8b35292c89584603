// tests/test_isotonic.cpp

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

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "core/error.hpp"
#include "core/isotonic.hpp"

using adjviz::Error;
using adjviz::ErrorCode;
using adjviz::isotonic_regression;

namespace {

// Reference fit: enumerate all 2^(n-1) block partitions, keep those whose
// weighted block means are non-decreasing, and take the least-squares best.
// The optimum over the monotone cone is unique and block-constant, so this
// recovers exactly what PAV must produce.
std::vector<double> brute_force_fit(const std::vector<double>& values,
                                    const std::vector<double>& weights) {
  const std::size_t n = values.size();
  double best_cost = 1e300;
  std::vector<double> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    // Bit k set means a block boundary between positions k and k+1.
    std::vector<double> fit(n);
    double prev_mean = -1e300;
    bool feasible = true;
    std::size_t start = 0;
    for (std::size_t end = 0; end < n && feasible; ++end) {
      if (end + 1 < n && !(mask & (std::size_t{1} << end))) continue;
      double sum = 0.0, weight = 0.0;
      for (std::size_t k = start; k <= end; ++k) {
        sum += weights[k] * values[k];
        weight += weights[k];
      }
      double mean = sum / weight;
      if (mean < prev_mean) {
        feasible = false;
        break;
      }
      for (std::size_t k = start; k <= end; ++k) fit[k] = mean;
      prev_mean = mean;
      start = end + 1;
    }
    if (!feasible) continue;
    double cost = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      cost += weights[k] * (values[k] - fit[k]) * (values[k] - fit[k]);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = fit;
    }
  }
  return best;
}

void check_close(const std::vector<double>& got,
                 const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    CAPTURE(k);
    CHECK(std::abs(got[k] - want[k]) <= tol);
  }
}

}  // namespace

TEST_CASE("already monotone input is unchanged") {
  std::vector<double> v{1.0, 2.0, 3.0};
  CHECK(isotonic_regression(v) == v);
  std::vector<double> flat{2.5, 2.5, 2.5};
  CHECK(isotonic_regression(flat) == flat);
}

TEST_CASE("violators pool to their mean") {
  std::vector<double> v{3.0, 1.0, 2.0};
  CHECK(isotonic_regression(v) == std::vector<double>{2.0, 2.0, 2.0});
  std::vector<double> w{2.0, 1.0};
  CHECK(isotonic_regression(w) == std::vector<double>{1.5, 1.5});
}

TEST_CASE("weights shift the pooled mean") {
  std::vector<double> v{2.0, 1.0};
  std::vector<double> w{3.0, 1.0};
  // Pooled mean (3*2 + 1*1) / 4 = 1.75.
  CHECK(isotonic_regression(v, w) == std::vector<double>{1.75, 1.75});
}

TEST_CASE("exhaustive agreement with brute force, unweighted") {
  // Every sequence of length 1..6 over {0, 1, 2, 3}.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t count = 1;
    for (std::size_t k = 0; k < n; ++k) count *= 4;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<double> values(n);
      std::size_t rest = code;
      for (std::size_t k = 0; k < n; ++k) {
        values[k] = static_cast<double>(rest % 4);
        rest /= 4;
      }
      std::vector<double> ones(n, 1.0);
      check_close(isotonic_regression(values), brute_force_fit(values, ones),
                  1e-9);
    }
  }
}

TEST_CASE("random weighted cases match brute force") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(1, 7);
  std::uniform_int_distribution<int> value(0, 3);
  std::uniform_int_distribution<int> weight_pick(0, 3);
  const double weight_pool[] = {0.5, 1.0, 2.0, 3.0};
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = static_cast<std::size_t>(len(rng));
    std::vector<double> values(n), weights(n);
    for (std::size_t k = 0; k < n; ++k) {
      values[k] = static_cast<double>(value(rng));
      weights[k] = weight_pool[weight_pick(rng)];
    }
    check_close(isotonic_regression(values, weights),
                brute_force_fit(values, weights), 1e-9);
  }
}

TEST_CASE("structural properties on random input") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> real(-4.0, 4.0);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> values(25);
    for (auto& v : values) v = real(rng);
    std::vector<double> fit = isotonic_regression(values);

    double lo = values[0], hi = values[0], sum_v = 0.0, sum_f = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      lo = std::min(lo, values[k]);
      hi = std::max(hi, values[k]);
      sum_v += values[k];
      sum_f += fit[k];
    }
    for (std::size_t k = 0; k + 1 < fit.size(); ++k) {
      CHECK(fit[k] <= fit[k + 1]);
    }
    for (double f : fit) {
      CHECK(f >= lo);
      CHECK(f <= hi);
    }
    // Pooling preserves the total (weighted) mass.
    CHECK(sum_f == doctest::Approx(sum_v).epsilon(1e-12));
    // A monotone sequence is its own fit, so the fit is a fixed point.
    CHECK(isotonic_regression(fit) == fit);
  }
}

TEST_CASE("input validation") {
  std::vector<double> empty;
  try {
    isotonic_regression(empty);
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyInput);
  }

  std::vector<double> v{1.0, 2.0};
  std::vector<double> short_w{1.0};
  try {
    isotonic_regression(v, short_w);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }

  for (double bad : {0.0, -1.0}) {
    std::vector<double> w{1.0, bad};
    try {
      isotonic_regression(v, w);
      FAIL("expected NonPositiveWeight");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNonPositiveWeight);
    }
  }
}
