// src/core/kendall.hpp

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

#ifndef ADJVIZ_CORE_KENDALL_HPP_
#define ADJVIZ_CORE_KENDALL_HPP_

#include <cstdint>
#include <span>

namespace adjviz {

// Pair classification counts for one column pair.  Every one of the
// n*(n-1)/2 trial pairs lands in exactly one bucket; pairs tied in both
// columns are excluded from every other count.
struct TauStats {
  std::uint64_t n_con = 0;      // concordant
  std::uint64_t n_dis = 0;      // discordant
  std::uint64_t ties_x = 0;     // tied only in x
  std::uint64_t ties_y = 0;     // tied only in y
  std::uint64_t ties_both = 0;  // tied in both
  std::uint64_t n_pairs = 0;    // n*(n-1)/2

  bool operator==(const TauStats&) const = default;
};

struct TauResult {
  double tau = 0.0;  // in [-1, 1]
  TauStats stats;
};

// tau = (n_con - n_dis) / sqrt((n_con + n_dis + ties_x) * (n_con + n_dis + ties_y)).
// Throws DegenerateColumn when a factor is zero (all pairs tied in a column).
double tau_from_stats(const TauStats& stats);

// Exhaustive O(n^2) pair enumeration.  Score equality is exact
// floating-point value equality.
TauResult kendall_tau_naive(std::span<const double> x,
                            std::span<const double> y);

// Knight's method: sort on (x, y), count discordant pairs as merge-sort
// inversions over y, recover tie counts from run lengths.  O(n log n),
// identical counts and tau to the naive version.
TauResult kendall_tau_fast(std::span<const double> x,
                           std::span<const double> y);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_KENDALL_HPP_
