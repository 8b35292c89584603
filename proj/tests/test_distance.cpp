// tests/test_distance.cpp

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
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "core/distance.hpp"
#include "core/error.hpp"
#include "core/kendall.hpp"

using adjviz::DistanceMatrix;
using adjviz::Error;
using adjviz::ErrorCode;
using adjviz::ScoreMatrix;

namespace {

ScoreMatrix random_scores(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> real(-3.0, 3.0);
  std::uniform_int_distribution<int> tie(0, 3);
  ScoreMatrix scores;
  for (std::size_t j = 0; j < m; ++j) {
    scores.classifier_ids.push_back("c" + std::to_string(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    scores.trial_ids.push_back("t" + std::to_string(i));
  }
  scores.columns.assign(m, {});
  for (auto& col : scores.columns) {
    col.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Quantized draws give ~25% tied values.
      col.push_back(tie(rng) == 0 ? static_cast<double>(tie(rng)) : real(rng));
    }
  }
  return scores;
}

}  // namespace

TEST_CASE("tau_to_distance anchors and range check") {
  CHECK(adjviz::tau_to_distance(1.0) == 0.0);
  CHECK(adjviz::tau_to_distance(-1.0) == 1.0);
  CHECK(adjviz::tau_to_distance(0.0) == 0.5);
  CHECK(adjviz::tau_to_distance(0.5) == 0.25);
  // Strictly decreasing in tau.
  double prev = 2.0;
  for (double tau = -1.0; tau <= 1.0; tau += 0.125) {
    double d = adjviz::tau_to_distance(tau);
    CHECK(d < prev);
    prev = d;
  }
  for (double bad : {1.0 + 1e-9, -1.0000001, 2.0,
                     std::numeric_limits<double>::quiet_NaN()}) {
    try {
      adjviz::tau_to_distance(bad);
      FAIL("expected OutOfRange for tau = ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kOutOfRange);
    }
  }
}

TEST_CASE("identical and reversed rankings hit the distance extremes") {
  ScoreMatrix scores;
  scores.classifier_ids = {"a", "b", "c"};
  scores.trial_ids = {"t1", "t2", "t3", "t4"};
  scores.columns = {{0.1, 0.4, 0.7, 0.9},
                    {1.0, 2.0, 3.0, 4.0},     // same ordering as a
                    {4.0, 3.0, 2.0, 1.0}};    // reversed
  DistanceMatrix d = adjviz::distance_matrix(scores);
  REQUIRE(d.size() == 3);
  CHECK(d.at(0, 1) == 0.0);
  CHECK(d.at(0, 2) == 1.0);
  CHECK(d.at(1, 2) == 1.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d.at(i, i) == 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(d.at(i, j) == d.at(j, i));
  }
}

TEST_CASE("matrix entries match the pairwise tau oracle bit for bit") {
  ScoreMatrix scores = random_scores(5, 120, 77);
  DistanceMatrix d = adjviz::distance_matrix(scores);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      auto r = adjviz::kendall_tau_naive(scores.columns[i], scores.columns[j]);
      CHECK(d.at(i, j) == adjviz::tau_to_distance(r.tau));
    }
  }
}

TEST_CASE("thread count does not change the result") {
  ScoreMatrix scores = random_scores(7, 200, 11);
  DistanceMatrix base = adjviz::distance_matrix(scores, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    DistanceMatrix d = adjviz::distance_matrix(scores, threads);
    CHECK(d.values == base.values);
  }
  // threads = 0 picks a worker count automatically; still identical.
  CHECK(adjviz::distance_matrix(scores, 0).values == base.values);
}

TEST_CASE("constant column is rejected and named") {
  ScoreMatrix scores;
  scores.classifier_ids = {"good", "flat"};
  scores.trial_ids = {"t1", "t2", "t3"};
  scores.columns = {{1.0, 2.0, 3.0}, {0.5, 0.5, 0.5}};
  try {
    adjviz::distance_matrix(scores);
    FAIL("expected DegenerateColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateColumn);
    CHECK(std::string(e.what()).find("'flat'") != std::string::npos);
  }
}

TEST_CASE("too few classifiers or trials") {
  ScoreMatrix one;
  one.classifier_ids = {"only"};
  one.trial_ids = {"t1", "t2"};
  one.columns = {{1.0, 2.0}};
  try {
    adjviz::distance_matrix(one);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }

  ScoreMatrix short_rows;
  short_rows.classifier_ids = {"a", "b"};
  short_rows.trial_ids = {"t1"};
  short_rows.columns = {{1.0}, {2.0}};
  try {
    adjviz::distance_matrix(short_rows);
    FAIL("expected DegenerateColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateColumn);
  }
}

TEST_CASE("save and reload preserves ids and values to 12 digits") {
  ScoreMatrix scores = random_scores(4, 90, 40);
  DistanceMatrix d = adjviz::distance_matrix(scores);
  const std::string path = "scratch_distances.tsv";
  adjviz::save_distances(d, path);
  DistanceMatrix back = adjviz::load_distances(path);
  CHECK(back.classifier_ids == d.classifier_ids);
  REQUIRE(back.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      CHECK(back.at(i, j) == doctest::Approx(d.at(i, j)).epsilon(1e-11));
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("load_distances validates the matrix") {
  const std::string path = "scratch_bad_distances.tsv";
  auto write = [&](const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  };
  auto expect = [&](ErrorCode code, const std::string& needle) {
    try {
      adjviz::load_distances(path);
      FAIL("expected error containing '", needle, "'");
    } catch (const Error& e) {
      CHECK(e.code() == code);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  write("id\ta\tb\na\t0\t0.25\nb\t0.2500001\t0\n");
  expect(ErrorCode::kInvalidMatrix, "asymmetry beyond 1e-9 at (a, b)");

  write("id\ta\tb\na\t0.1\t0.25\nb\t0.25\t0\n");
  expect(ErrorCode::kInvalidMatrix, "nonzero diagonal at (a, a)");

  write("id\ta\tb\na\t0\t-0.25\nb\t-0.25\t0\n");
  expect(ErrorCode::kInvalidMatrix, "non-negative");

  write("id\ta\tb\nb\t0\t0.25\na\t0.25\t0\n");
  expect(ErrorCode::kInvalidMatrix, "row id 'b'");

  write("id\ta\tb\na\t0\tx\nb\t0.25\t0\n");
  expect(ErrorCode::kParse, "cannot parse distance 'x'");

  write("id\ta\tb\na\t0\t0.25\n");
  expect(ErrorCode::kParse, "expected 2 rows, got 1");

  // Asymmetry below the 1e-9 gate is accepted.
  write("id\ta\tb\na\t0\t0.2500000000001\nb\t0.25\t0\n");
  DistanceMatrix ok = adjviz::load_distances(path);
  CHECK(ok.at(0, 1) == doctest::Approx(0.25).epsilon(1e-9));
  std::filesystem::remove(path);
}
