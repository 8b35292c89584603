// src/core/distance.hpp

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

#ifndef ADJVIZ_CORE_DISTANCE_HPP_
#define ADJVIZ_CORE_DISTANCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace adjviz {

// Symmetric matrix of pairwise classifier rank distances, zero diagonal.
// Rank distances live in [0, 1]; matrices loaded from files may carry any
// non-negative distances (the embedding does not require the unit range).
struct DistanceMatrix {
  std::vector<std::string> classifier_ids;
  std::vector<double> values;  // row-major M x M

  std::size_t size() const { return classifier_ids.size(); }
  double at(std::size_t i, std::size_t j) const {
    return values[i * size() + j];
  }
  double& at(std::size_t i, std::size_t j) { return values[i * size() + j]; }
};

// D = (1 - tau) / 2: identical rankings map to 0, exact reversal to 1.
// Throws OutOfRange outside [-1, 1].
double tau_to_distance(double tau);

// Fills all M*(M-1)/2 pairs with tau_to_distance(kendall_tau_fast(...)).
// Pair computations run on `threads` workers (0 = available parallelism);
// the result is identical regardless of scheduling.  Throws DegenerateColumn
// naming the first constant classifier column.
DistanceMatrix distance_matrix(const ScoreMatrix& scores, unsigned threads = 0);

// Delimited text: header row and first column carry classifier ids, cells
// the distances with 12 significant digits.
void save_distances(const DistanceMatrix& matrix, const std::string& path);

// Validates shape, matching row/column ids, symmetry within 1e-9 and a zero
// diagonal; throws InvalidMatrix naming the offending cell.
DistanceMatrix load_distances(const std::string& path);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_DISTANCE_HPP_
