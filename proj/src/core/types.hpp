// src/core/types.hpp

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

#ifndef ADJVIZ_CORE_TYPES_HPP_
#define ADJVIZ_CORE_TYPES_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace adjviz {

// Detection scores of M classifiers on a common set of N trials,
// column-major.  Higher scores support the positive class.  After group
// reduction the "trials" are group identifiers and the values per-group
// mean scores.  Instances are immutable by convention once built.
struct ScoreMatrix {
  std::vector<std::string> classifier_ids;     // M unique ids
  std::vector<std::string> trial_ids;          // N unique ids
  std::vector<std::vector<double>> columns;    // M columns of N finite scores

  std::size_t num_trials() const { return trial_ids.size(); }
  std::size_t num_classifiers() const { return classifier_ids.size(); }
  const std::vector<double>& column(std::size_t j) const { return columns[j]; }

  // Checks the structural invariants (shape, uniqueness, finiteness);
  // throws Error on violation.
  void validate() const;
};

// Trial ground truth.  Labels stay strings; binarization against a chosen
// positive-class token happens where metrics are computed.
struct LabelMap {
  std::unordered_map<std::string, std::string> labels;

  std::size_t size() const { return labels.size(); }
  const std::string* find(const std::string& trial_id) const {
    auto it = labels.find(trial_id);
    return it == labels.end() ? nullptr : &it->second;
  }
};

// Trial -> condition/group assignment; groups are mutually exclusive and
// exhaustive over any score matrix they are applied to.
struct GroupMap {
  std::unordered_map<std::string, std::string> groups;

  std::size_t size() const { return groups.size(); }
  const std::string* find(const std::string& trial_id) const {
    auto it = groups.find(trial_id);
    return it == groups.end() ? nullptr : &it->second;
  }
};

// Human-readable classifier attributes keyed by metadata column name; plot
// options pick which columns drive color, highlighting, and annotations.
struct ClassifierMetadata {
  struct Entry {
    std::unordered_map<std::string, std::string> attrs;

    const std::string* attr(const std::string& key) const {
      auto it = attrs.find(key);
      return it == attrs.end() ? nullptr : &it->second;
    }
    // Truthy flag column: anything except empty, "0", "false", "no".
    bool flag(const std::string& key) const {
      const std::string* value = attr(key);
      if (value == nullptr) return false;
      std::string lower(*value);
      for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      return !(lower.empty() || lower == "0" || lower == "false" || lower == "no");
    }
  };

  std::vector<std::string> ids;  // file order
  std::unordered_map<std::string, Entry> entries;

  bool has(const std::string& classifier_id) const {
    return entries.count(classifier_id) != 0;
  }
  const Entry* find(const std::string& classifier_id) const {
    auto it = entries.find(classifier_id);
    return it == entries.end() ? nullptr : &it->second;
  }
};

}  // namespace adjviz

#endif  // ADJVIZ_CORE_TYPES_HPP_
