// src/core/kendall.cpp

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

#include "core/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace adjviz {

namespace {

void check_lengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "column lengths differ: " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  }
  if (x.size() < 2) {
    // No pairs to classify; both denominator factors of tau are zero.
    throw Error(ErrorCode::kDegenerateColumn,
                "tau undefined for fewer than 2 observations");
  }
}

// Pairs within runs of equal keys: sum of t*(t-1)/2 over run lengths t.
template <class It, class Eq>
std::uint64_t tied_pairs(It begin, It end, Eq eq) {
  std::uint64_t total = 0;
  for (It run = begin; run != end;) {
    It next = run + 1;
    while (next != end && eq(*run, *next)) ++next;
    std::uint64_t t = static_cast<std::uint64_t>(next - run);
    total += t * (t - 1) / 2;
    run = next;
  }
  return total;
}

// Bottom-up merge sort of `a` counting inversions (right element strictly
// smaller than a left element).  Equal elements are taken from the left and
// contribute nothing.
std::uint64_t sort_count_inversions(std::vector<double>& a,
                                    std::vector<double>& buf) {
  const std::size_t n = a.size();
  buf.resize(n);
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          buf[k++] = a[j++];
          inversions += mid - i;
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
    }
  }
  return inversions;
}

}  // namespace

double tau_from_stats(const TauStats& s) {
  const std::uint64_t f_x = s.n_con + s.n_dis + s.ties_x;
  const std::uint64_t f_y = s.n_con + s.n_dis + s.ties_y;
  if (f_x == 0 || f_y == 0) {
    throw Error(ErrorCode::kDegenerateColumn,
                "tau undefined: all pairs tied in one column");
  }
  const double numerator =
      static_cast<double>(s.n_con) - static_cast<double>(s.n_dis);
  // Equal factors cover every tau = +/-1 case; dividing by the integer
  // directly keeps those extremes exact (sqrt(k)*sqrt(k) may round off k).
  const double denominator =
      f_x == f_y ? static_cast<double>(f_x)
                 : std::sqrt(static_cast<double>(f_x)) *
                       std::sqrt(static_cast<double>(f_y));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

TauResult kendall_tau_naive(std::span<const double> x,
                            std::span<const double> y) {
  check_lengths(x, y);
  const std::size_t n = x.size();
  TauStats s;
  s.n_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool tie_x = x[a] == x[b];
      const bool tie_y = y[a] == y[b];
      if (tie_x && tie_y) {
        ++s.ties_both;
      } else if (tie_x) {
        ++s.ties_x;
      } else if (tie_y) {
        ++s.ties_y;
      } else if ((x[a] < x[b]) == (y[a] < y[b])) {
        ++s.n_con;
      } else {
        ++s.n_dis;
      }
    }
  }
  return TauResult{tau_from_stats(s), s};
}

TauResult kendall_tau_fast(std::span<const double> x,
                           std::span<const double> y) {
  check_lengths(x, y);
  const std::size_t n = x.size();

  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {x[i], y[i]};
  std::sort(pairs.begin(), pairs.end());

  TauStats s;
  s.n_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;

  const std::uint64_t pairs_tied_x = tied_pairs(
      pairs.begin(), pairs.end(),
      [](const auto& a, const auto& b) { return a.first == b.first; });
  s.ties_both = tied_pairs(pairs.begin(), pairs.end(),
                           [](const auto& a, const auto& b) { return a == b; });

  // After the (x, y) sort, y is ascending inside every x run, so inversions
  // found while merge-sorting y are exactly the discordant pairs.
  std::vector<double> ys(n), buf;
  for (std::size_t i = 0; i < n; ++i) ys[i] = pairs[i].second;
  s.n_dis = sort_count_inversions(ys, buf);

  const std::uint64_t pairs_tied_y =
      tied_pairs(ys.begin(), ys.end(), [](double a, double b) { return a == b; });

  s.ties_x = pairs_tied_x - s.ties_both;
  s.ties_y = pairs_tied_y - s.ties_both;
  const std::uint64_t untied =
      s.n_pairs - pairs_tied_x - pairs_tied_y + s.ties_both;
  s.n_con = untied - s.n_dis;

  return TauResult{tau_from_stats(s), s};
}

}  // namespace adjviz
