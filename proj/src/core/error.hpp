// src/core/error.hpp

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

#ifndef ADJVIZ_CORE_ERROR_HPP_
#define ADJVIZ_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace adjviz {

// Mirrors the adjviz_status codes of the C interface.
enum class ErrorCode {
  kIo = 1,
  kParse = 2,
  kMissingTrial = 3,
  kDuplicateTrial = 4,
  kDuplicateClassifier = 5,
  kNonFiniteScore = 6,
  kDuplicateKey = 7,
  kUnmappedTrial = 8,
  kLengthMismatch = 9,
  kDegenerateColumn = 10,
  kOutOfRange = 11,
  kDimensionTooLarge = 12,
  kEmptyInput = 13,
  kNonPositiveWeight = 14,
  kMissingLabel = 15,
  kSingleClass = 16,
  kInvalidMatrix = 17,
  kInvalidArgument = 18,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adjviz

#endif  // ADJVIZ_CORE_ERROR_HPP_
