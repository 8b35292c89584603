// src/core/detmetrics.cpp

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

#include "core/detmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "core/error.hpp"
#include "core/isotonic.hpp"

namespace adjviz {

namespace {

constexpr double kPosteriorClamp = 1e-12;

// log2(1 + e^x) without overflow.  The x <= 0 branch evaluates exactly 1.0
// at x = 0, which keeps cllr of all-zero LLRs at exactly 1 bit.
double log2_one_plus_exp(double x) {
  if (x <= 0.0) return std::log2(1.0 + std::exp(x));
  return x * std::numbers::log2e + std::log2(1.0 + std::exp(-x));
}

void require_both_classes(std::size_t n_targets, std::size_t n_nontargets) {
  if (n_targets == 0 || n_nontargets == 0) {
    throw Error(ErrorCode::kSingleClass,
                "need at least one target and one nontarget trial, got " +
                    std::to_string(n_targets) + " target(s) and " +
                    std::to_string(n_nontargets) + " nontarget(s)");
  }
}

// One distinct score with its per-class trial counts, in ascending score
// order; shared by min_cllr and pav_rank_groups.
struct ScorePoint {
  double score;
  double n_target;
  double n_nontarget;
};

std::vector<ScorePoint> pool_by_score(std::span<const double> target_scores,
                                      std::span<const double> nontarget_scores) {
  std::vector<std::pair<double, bool>> rows;
  rows.reserve(target_scores.size() + nontarget_scores.size());
  for (double s : target_scores) rows.emplace_back(s, true);
  for (double s : nontarget_scores) rows.emplace_back(s, false);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ScorePoint> points;
  for (const auto& [score, is_target] : rows) {
    if (points.empty() || points.back().score != score) {
      points.push_back({score, 0.0, 0.0});
    }
    if (is_target) {
      points.back().n_target += 1.0;
    } else {
      points.back().n_nontarget += 1.0;
    }
  }
  return points;
}

// PAV-calibrated LLR per score point, using the prior odds implied by the
// class counts.
std::vector<double> calibrated_llrs(const std::vector<ScorePoint>& points,
                                    double n_targets, double n_nontargets) {
  std::vector<double> posterior(points.size());
  std::vector<double> weight(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double n = points[k].n_target + points[k].n_nontarget;
    posterior[k] = points[k].n_target / n;
    weight[k] = n;
  }
  std::vector<double> fitted = isotonic_regression(posterior, weight);
  const double prior_log_odds = std::log(n_targets / n_nontargets);
  std::vector<double> llrs(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double p = std::clamp(fitted[k], kPosteriorClamp, 1.0 - kPosteriorClamp);
    llrs[k] = std::log(p / (1.0 - p)) - prior_log_odds;
  }
  return llrs;
}

std::string format_g(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

}  // namespace

BinaryScores split_by_label(const ScoreMatrix& scores, std::size_t column,
                            const LabelMap& labels,
                            const std::string& positive_label) {
  if (column >= scores.num_classifiers()) {
    throw Error(ErrorCode::kOutOfRange,
                "column " + std::to_string(column) + " out of range for " +
                    std::to_string(scores.num_classifiers()) + " classifiers");
  }
  BinaryScores split;
  const auto& col = scores.columns[column];
  for (std::size_t r = 0; r < scores.num_trials(); ++r) {
    const std::string* label = labels.find(scores.trial_ids[r]);
    if (label == nullptr) {
      throw Error(ErrorCode::kMissingLabel,
                  "trial '" + scores.trial_ids[r] + "' has no label");
    }
    if (*label == positive_label) {
      split.targets.push_back(col[r]);
    } else {
      split.nontargets.push_back(col[r]);
    }
  }
  require_both_classes(split.targets.size(), split.nontargets.size());
  return split;
}

DetCurve det_curve(std::span<const double> target_scores,
                   std::span<const double> nontarget_scores) {
  require_both_classes(target_scores.size(), nontarget_scores.size());
  std::vector<double> targets(target_scores.begin(), target_scores.end());
  std::vector<double> nontargets(nontarget_scores.begin(),
                                 nontarget_scores.end());
  std::sort(targets.begin(), targets.end());
  std::sort(nontargets.begin(), nontargets.end());

  std::vector<double> thresholds;
  thresholds.reserve(targets.size() + nontargets.size() + 1);
  std::merge(targets.begin(), targets.end(), nontargets.begin(),
             nontargets.end(), std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  thresholds.push_back(std::numeric_limits<double>::infinity());

  const double n_t = static_cast<double>(targets.size());
  const double n_n = static_cast<double>(nontargets.size());
  DetCurve curve;
  curve.points.reserve(thresholds.size());
  std::size_t below_t = 0;  // targets strictly below the current threshold
  std::size_t below_n = 0;
  for (double threshold : thresholds) {
    while (below_t < targets.size() && targets[below_t] < threshold) ++below_t;
    while (below_n < nontargets.size() && nontargets[below_n] < threshold) {
      ++below_n;
    }
    curve.points.push_back({threshold, static_cast<double>(below_t) / n_t,
                            static_cast<double>(nontargets.size() - below_n) / n_n});
  }
  return curve;
}

DetCurve det_curve(const ScoreMatrix& scores, std::size_t column,
                   const LabelMap& labels, const std::string& positive_label) {
  BinaryScores split = split_by_label(scores, column, labels, positive_label);
  return det_curve(split.targets, split.nontargets);
}

double eer(const DetCurve& curve) {
  if (curve.points.empty()) {
    throw Error(ErrorCode::kEmptyInput, "empty DET curve");
  }
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    const DetPoint& p = curve.points[k];
    const double diff = p.p_miss - p.p_fa;
    if (diff < 0.0) continue;
    if (diff == 0.0 || k == 0) return p.p_miss;
    const DetPoint& q = curve.points[k - 1];
    const double denom = (p.p_miss - q.p_miss) - (p.p_fa - q.p_fa);
    const double t = (q.p_fa - q.p_miss) / denom;
    return q.p_miss + t * (p.p_miss - q.p_miss);
  }
  return curve.points.back().p_miss;
}

double cllr(std::span<const double> target_llrs,
            std::span<const double> nontarget_llrs) {
  require_both_classes(target_llrs.size(), nontarget_llrs.size());
  double target_cost = 0.0;
  for (double s : target_llrs) target_cost += log2_one_plus_exp(-s);
  double nontarget_cost = 0.0;
  for (double s : nontarget_llrs) nontarget_cost += log2_one_plus_exp(s);
  return 0.5 * (target_cost / static_cast<double>(target_llrs.size()) +
                nontarget_cost / static_cast<double>(nontarget_llrs.size()));
}

double min_cllr(std::span<const double> target_scores,
                std::span<const double> nontarget_scores) {
  require_both_classes(target_scores.size(), nontarget_scores.size());
  const double n_t = static_cast<double>(target_scores.size());
  const double n_n = static_cast<double>(nontarget_scores.size());
  std::vector<ScorePoint> points = pool_by_score(target_scores, nontarget_scores);
  std::vector<double> llrs = calibrated_llrs(points, n_t, n_n);

  double target_cost = 0.0;
  double nontarget_cost = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].n_target > 0.0) {
      target_cost += points[k].n_target * log2_one_plus_exp(-llrs[k]);
    }
    if (points[k].n_nontarget > 0.0) {
      nontarget_cost += points[k].n_nontarget * log2_one_plus_exp(llrs[k]);
    }
  }
  return 0.5 * (target_cost / n_t + nontarget_cost / n_n);
}

GroupMap pav_rank_groups(const ScoreMatrix& scores, std::size_t column,
                         const LabelMap& labels,
                         const std::string& positive_label) {
  BinaryScores split = split_by_label(scores, column, labels, positive_label);
  std::vector<ScorePoint> points = pool_by_score(split.targets, split.nontargets);

  std::vector<double> posterior(points.size());
  std::vector<double> weight(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double n = points[k].n_target + points[k].n_nontarget;
    posterior[k] = points[k].n_target / n;
    weight[k] = n;
  }
  std::vector<double> fitted = isotonic_regression(posterior, weight);

  // Block index per score point: a new block starts where the fitted value
  // changes.
  std::vector<std::size_t> block(points.size(), 0);
  std::size_t n_blocks = points.empty() ? 0 : 1;
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (fitted[k] != fitted[k - 1]) ++n_blocks;
    block[k] = n_blocks - 1;
  }

  const int width = static_cast<int>(std::to_string(n_blocks).size());
  std::vector<std::string> block_ids(n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "g%0*zu", width, b + 1);
    block_ids[b] = buf;
  }

  // Score -> block id, then map every trial through its score.
  GroupMap groups;
  const auto& col = scores.columns[column];
  for (std::size_t r = 0; r < scores.num_trials(); ++r) {
    const auto it = std::lower_bound(
        points.begin(), points.end(), col[r],
        [](const ScorePoint& p, double s) { return p.score < s; });
    const std::size_t k = static_cast<std::size_t>(it - points.begin());
    groups.groups[scores.trial_ids[r]] = block_ids[block[k]];
  }
  return groups;
}

std::vector<ClassifierMetrics> compute_metrics(
    const ScoreMatrix& scores, const LabelMap& labels,
    const std::string& positive_label) {
  std::vector<ClassifierMetrics> rows;
  rows.reserve(scores.num_classifiers());
  for (std::size_t j = 0; j < scores.num_classifiers(); ++j) {
    BinaryScores split = split_by_label(scores, j, labels, positive_label);
    ClassifierMetrics row;
    row.classifier_id = scores.classifier_ids[j];
    try {
      row.eer = eer(det_curve(split.targets, split.nontargets));
      row.cllr = cllr(split.targets, split.nontargets);
      row.min_cllr = min_cllr(split.targets, split.nontargets);
    } catch (const Error& e) {
      throw Error(e.code(), "classifier '" + scores.classifier_ids[j] +
                                "': " + e.what());
    }
    rows.push_back(row);
  }
  return rows;
}

void save_metrics(const std::vector<ClassifierMetrics>& metrics,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  out << "classifier_id\teer\tcllr\tmin_cllr\n";
  for (const auto& row : metrics) {
    out << row.classifier_id << '\t' << format_g(row.eer) << '\t'
        << format_g(row.cllr) << '\t' << format_g(row.min_cllr) << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
  }
}

}  // namespace adjviz
