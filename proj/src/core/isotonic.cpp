// src/core/isotonic.cpp

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

#include "core/isotonic.hpp"

#include <string>

#include "core/error.hpp"

namespace adjviz {

std::vector<double> isotonic_regression(std::span<const double> values,
                                        std::span<const double> weights) {
  const std::size_t n = values.size();
  if (n == 0) {
    throw Error(ErrorCode::kEmptyInput, "isotonic regression on empty input");
  }
  if (weights.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "values length " + std::to_string(n) +
                    " != weights length " + std::to_string(weights.size()));
  }

  // Blocks kept as (pooled mean, total weight, element count); adjacent
  // blocks merge while the mean sequence decreases.  Merging only strict
  // violations keeps monotone input bit-identical.
  std::vector<double> mean(n);
  std::vector<double> weight(n);
  std::vector<std::size_t> count(n);
  std::size_t blocks = 0;

  for (std::size_t k = 0; k < n; ++k) {
    if (!(weights[k] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "non-positive weight " + std::to_string(weights[k]) +
                      " at index " + std::to_string(k));
    }
    mean[blocks] = values[k];
    weight[blocks] = weights[k];
    count[blocks] = 1;
    ++blocks;
    while (blocks > 1 && mean[blocks - 2] > mean[blocks - 1]) {
      const double w = weight[blocks - 2] + weight[blocks - 1];
      mean[blocks - 2] = (weight[blocks - 2] * mean[blocks - 2] +
                          weight[blocks - 1] * mean[blocks - 1]) /
                         w;
      weight[blocks - 2] = w;
      count[blocks - 2] += count[blocks - 1];
      --blocks;
    }
  }

  std::vector<double> fitted(n);
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t k = 0; k < count[b]; ++k) fitted[pos++] = mean[b];
  }
  return fitted;
}

std::vector<double> isotonic_regression(std::span<const double> values) {
  std::vector<double> ones(values.size(), 1.0);
  return isotonic_regression(values, ones);
}

}  // namespace adjviz
