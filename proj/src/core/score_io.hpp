// src/core/score_io.hpp

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

#ifndef ADJVIZ_CORE_SCORE_IO_HPP_
#define ADJVIZ_CORE_SCORE_IO_HPP_

#include <string>
#include <vector>

#include "core/types.hpp"

namespace adjviz {

// Loads one score file per classifier.  File format: UTF-8 text, one
// "<trial_id>\t<score>" record per line, '#' comment lines and blank lines
// ignored.  All files must cover an identical trial set; the matrix rows are
// ordered by sorted trial id and the columns follow path order.  Classifier
// ids default to the file name stems; `ids`, when non-empty, overrides them
// (same length as `paths`).
ScoreMatrix load_scores(const std::vector<std::string>& paths,
                        const std::vector<std::string>& ids = {});

// Writes one "<classifier_id>.tsv" per column into `dir` in the canonical
// format with shortest round-trip decimal scores, so a reload is
// bit-identical.  Returns the written paths in column order.
std::vector<std::string> save_scores(const ScoreMatrix& matrix,
                                     const std::string& dir);

// C x M matrix of per-group mean scores; groups ordered lexicographically.
// Every trial of `matrix` must be mapped by `groups`.
ScoreMatrix group_reduce(const ScoreMatrix& matrix, const GroupMap& groups);

// "<trial_id>\t<label>" per line.
LabelMap load_labels(const std::string& path);

// "<trial_id>\t<group_id>" per line.
GroupMap load_groups(const std::string& path);
void save_groups(const GroupMap& groups, const std::string& path);

// Comma-separated with header "id,<attr1>,...".  Every non-id column is
// kept as a string attribute; plot options decide which columns act as
// color, highlight flag, or annotation.
ClassifierMetadata load_metadata(const std::string& path);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_SCORE_IO_HPP_
