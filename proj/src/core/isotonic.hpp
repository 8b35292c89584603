// src/core/isotonic.hpp

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

#ifndef ADJVIZ_CORE_ISOTONIC_HPP_
#define ADJVIZ_CORE_ISOTONIC_HPP_

#include <span>
#include <vector>

namespace adjviz {

// Weighted isotonic regression by pool-adjacent-violators.  Given values
// y_1..y_n in sequence order and positive weights w_1..w_n, returns the
// non-decreasing sequence f minimizing sum_k w_k (y_k - f_k)^2.
std::vector<double> isotonic_regression(std::span<const double> values,
                                        std::span<const double> weights);

// Unweighted variant: all weights equal to 1.
std::vector<double> isotonic_regression(std::span<const double> values);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_ISOTONIC_HPP_
