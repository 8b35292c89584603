// src/core/detmetrics.hpp

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

#ifndef ADJVIZ_CORE_DETMETRICS_HPP_
#define ADJVIZ_CORE_DETMETRICS_HPP_

#include <span>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace adjviz {

struct DetPoint {
  double threshold;
  double p_miss;  // fraction of targets scored below threshold
  double p_fa;    // fraction of nontargets scored at or above threshold
};

// Operating points at every distinct score (ascending) plus a final
// above-maximum sentinel, under the decision rule score >= threshold =>
// positive.  p_miss is non-decreasing and p_fa non-increasing along the
// sweep; the first point is (0, 1) and the last (1, 0).
struct DetCurve {
  std::vector<DetPoint> points;
};

// Scores of one classifier split by class; thrown errors: SingleClass when
// either side is empty, MissingLabel when a trial has no label entry.
struct BinaryScores {
  std::vector<double> targets;
  std::vector<double> nontargets;
};

BinaryScores split_by_label(const ScoreMatrix& scores, std::size_t column,
                            const LabelMap& labels,
                            const std::string& positive_label);

DetCurve det_curve(std::span<const double> target_scores,
                   std::span<const double> nontarget_scores);
DetCurve det_curve(const ScoreMatrix& scores, std::size_t column,
                   const LabelMap& labels, const std::string& positive_label);

// Crossing of the empirical p_miss and p_fa sweeps, linearly interpolated
// between the bracketing operating points.
double eer(const DetCurve& curve);

// Log-likelihood-ratio cost in bits; scores are natural-log LLRs.
double cllr(std::span<const double> target_llrs,
            std::span<const double> nontarget_llrs);

// Cllr after optimal monotone (PAV) calibration.  Tied scores are pooled
// before regression so the calibration map is a function of the score;
// posteriors are clamped to (1e-12, 1 - 1e-12) before the log-odds
// transform.
double min_cllr(std::span<const double> target_scores,
                std::span<const double> nontarget_scores);

// Trials sharing a pooled PAV calibration block map to one group; block ids
// are zero-padded so their lexicographic order equals score order.
GroupMap pav_rank_groups(const ScoreMatrix& scores, std::size_t column,
                         const LabelMap& labels,
                         const std::string& positive_label);

struct ClassifierMetrics {
  std::string classifier_id;
  double eer;
  double cllr;
  double min_cllr;
};

std::vector<ClassifierMetrics> compute_metrics(
    const ScoreMatrix& scores, const LabelMap& labels,
    const std::string& positive_label);

// Delimited table `classifier_id\teer\tcllr\tmin_cllr`, 9 significant digits.
void save_metrics(const std::vector<ClassifierMetrics>& metrics,
                  const std::string& path);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_DETMETRICS_HPP_
