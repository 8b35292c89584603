// src/capi/adjviz_capi.cpp

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

#include "adjviz/adjviz.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/detmetrics.hpp"
#include "core/distance.hpp"
#include "core/error.hpp"
#include "core/kendall.hpp"
#include "core/mds.hpp"
#include "core/score_io.hpp"
#include "core/svg_plot.hpp"
#include "core/types.hpp"

struct adjviz_scores {
  adjviz::ScoreMatrix value;
};
struct adjviz_labels {
  adjviz::LabelMap value;
};
struct adjviz_groups {
  adjviz::GroupMap value;
};
struct adjviz_metadata {
  adjviz::ClassifierMetadata value;
};
struct adjviz_distances {
  adjviz::DistanceMatrix value;
};
struct adjviz_embedding {
  adjviz::Embedding value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message; }

// Runs fn, translating exceptions into status codes and the thread-local
// error message.
template <typename Fn>
adjviz_status guarded(Fn&& fn) {
  try {
    fn();
    return ADJVIZ_OK;
  } catch (const adjviz::Error& e) {
    set_error(e.what());
    return static_cast<adjviz_status>(e.code());
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return ADJVIZ_E_UNKNOWN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ADJVIZ_E_UNKNOWN;
  } catch (...) {
    set_error("unknown error");
    return ADJVIZ_E_UNKNOWN;
  }
}

adjviz_status require(bool ok, const char* message) {
  if (ok) return ADJVIZ_OK;
  set_error(message);
  return ADJVIZ_E_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* adjviz_version(void) { return "1.0.0"; }

const char* adjviz_status_name(adjviz_status status) {
  switch (status) {
    case ADJVIZ_OK: return "ok";
    case ADJVIZ_E_IO: return "io";
    case ADJVIZ_E_PARSE: return "parse";
    case ADJVIZ_E_MISSING_TRIAL: return "missing-trial";
    case ADJVIZ_E_DUPLICATE_TRIAL: return "duplicate-trial";
    case ADJVIZ_E_DUPLICATE_CLASSIFIER: return "duplicate-classifier";
    case ADJVIZ_E_NONFINITE_SCORE: return "nonfinite-score";
    case ADJVIZ_E_DUPLICATE_KEY: return "duplicate-key";
    case ADJVIZ_E_UNMAPPED_TRIAL: return "unmapped-trial";
    case ADJVIZ_E_LENGTH_MISMATCH: return "length-mismatch";
    case ADJVIZ_E_DEGENERATE_COLUMN: return "degenerate-column";
    case ADJVIZ_E_OUT_OF_RANGE: return "out-of-range";
    case ADJVIZ_E_DIMENSION_TOO_LARGE: return "dimension-too-large";
    case ADJVIZ_E_EMPTY_INPUT: return "empty-input";
    case ADJVIZ_E_NONPOSITIVE_WEIGHT: return "nonpositive-weight";
    case ADJVIZ_E_MISSING_LABEL: return "missing-label";
    case ADJVIZ_E_SINGLE_CLASS: return "single-class";
    case ADJVIZ_E_INVALID_MATRIX: return "invalid-matrix";
    case ADJVIZ_E_INVALID_ARGUMENT: return "invalid-argument";
    case ADJVIZ_E_UNKNOWN: return "unknown";
  }
  return "unknown";
}

const char* adjviz_last_error(void) { return g_last_error.c_str(); }

/* ---- score matrix ----------------------------------------------------- */

adjviz_status adjviz_scores_load(const char* const* paths, size_t n_paths,
                                 adjviz_scores** out) {
  if (adjviz_status s = require(paths != nullptr && out != nullptr,
                                "paths and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> path_list(paths, paths + n_paths);
    auto handle = new adjviz_scores{adjviz::load_scores(path_list)};
    *out = handle;
  });
}

void adjviz_scores_free(adjviz_scores* scores) { delete scores; }

size_t adjviz_scores_num_trials(const adjviz_scores* scores) {
  return scores != nullptr ? scores->value.num_trials() : 0;
}

size_t adjviz_scores_num_classifiers(const adjviz_scores* scores) {
  return scores != nullptr ? scores->value.num_classifiers() : 0;
}

const char* adjviz_scores_classifier_id(const adjviz_scores* scores,
                                        size_t column) {
  if (scores == nullptr || column >= scores->value.num_classifiers()) {
    return nullptr;
  }
  return scores->value.classifier_ids[column].c_str();
}

const char* adjviz_scores_trial_id(const adjviz_scores* scores, size_t row) {
  if (scores == nullptr || row >= scores->value.num_trials()) return nullptr;
  return scores->value.trial_ids[row].c_str();
}

adjviz_status adjviz_scores_column(const adjviz_scores* scores, size_t column,
                                   double* out) {
  if (adjviz_status s = require(scores != nullptr && out != nullptr,
                                "scores and out must be non-null")) {
    return s;
  }
  return guarded([&] {
    if (column >= scores->value.num_classifiers()) {
      throw adjviz::Error(adjviz::ErrorCode::kOutOfRange,
                          "column " + std::to_string(column) +
                              " out of range for " +
                              std::to_string(scores->value.num_classifiers()) +
                              " classifiers");
    }
    const auto& col = scores->value.columns[column];
    std::memcpy(out, col.data(), col.size() * sizeof(double));
  });
}

adjviz_status adjviz_scores_group_reduce(const adjviz_scores* scores,
                                         const adjviz_groups* groups,
                                         adjviz_scores** out) {
  if (adjviz_status s =
          require(scores != nullptr && groups != nullptr && out != nullptr,
                  "scores, groups, and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new adjviz_scores{adjviz::group_reduce(scores->value, groups->value)};
  });
}

/* ---- trial labels, trial groups, classifier metadata ------------------ */

adjviz_status adjviz_labels_load(const char* path, adjviz_labels** out) {
  if (adjviz_status s = require(path != nullptr && out != nullptr,
                                "path and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] { *out = new adjviz_labels{adjviz::load_labels(path)}; });
}

void adjviz_labels_free(adjviz_labels* labels) { delete labels; }

adjviz_status adjviz_groups_load(const char* path, adjviz_groups** out) {
  if (adjviz_status s = require(path != nullptr && out != nullptr,
                                "path and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] { *out = new adjviz_groups{adjviz::load_groups(path)}; });
}

adjviz_status adjviz_groups_save(const adjviz_groups* groups, const char* path) {
  if (adjviz_status s = require(groups != nullptr && path != nullptr,
                                "groups and path must be non-null")) {
    return s;
  }
  return guarded([&] { adjviz::save_groups(groups->value, path); });
}

void adjviz_groups_free(adjviz_groups* groups) { delete groups; }

adjviz_status adjviz_metadata_load(const char* path, adjviz_metadata** out) {
  if (adjviz_status s = require(path != nullptr && out != nullptr,
                                "path and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded(
      [&] { *out = new adjviz_metadata{adjviz::load_metadata(path)}; });
}

void adjviz_metadata_free(adjviz_metadata* metadata) { delete metadata; }

size_t adjviz_metadata_count(const adjviz_metadata* metadata) {
  return metadata != nullptr ? metadata->value.ids.size() : 0;
}

const char* adjviz_metadata_id(const adjviz_metadata* metadata, size_t index) {
  if (metadata == nullptr || index >= metadata->value.ids.size()) {
    return nullptr;
  }
  return metadata->value.ids[index].c_str();
}

int adjviz_metadata_has(const adjviz_metadata* metadata,
                        const char* classifier_id) {
  if (metadata == nullptr || classifier_id == nullptr) return 0;
  return metadata->value.has(classifier_id) ? 1 : 0;
}

/* ---- rank correlation -------------------------------------------------- */

adjviz_status adjviz_kendall_tau(const double* x, const double* y, size_t n,
                                 adjviz_tau_result* out) {
  if (adjviz_status s =
          require(x != nullptr && y != nullptr && out != nullptr,
                  "x, y, and out must be non-null")) {
    return s;
  }
  return guarded([&] {
    adjviz::TauResult r = adjviz::kendall_tau_fast(std::span(x, n), std::span(y, n));
    out->tau = r.tau;
    out->n_con = r.stats.n_con;
    out->n_dis = r.stats.n_dis;
    out->ties_x = r.stats.ties_x;
    out->ties_y = r.stats.ties_y;
    out->ties_both = r.stats.ties_both;
    out->n_pairs = r.stats.n_pairs;
  });
}

/* ---- distance matrix --------------------------------------------------- */

adjviz_status adjviz_distances_compute(const adjviz_scores* scores,
                                       unsigned threads,
                                       adjviz_distances** out) {
  if (adjviz_status s = require(scores != nullptr && out != nullptr,
                                "scores and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new adjviz_distances{adjviz::distance_matrix(scores->value, threads)};
  });
}

adjviz_status adjviz_distances_save(const adjviz_distances* distances,
                                    const char* path) {
  if (adjviz_status s = require(distances != nullptr && path != nullptr,
                                "distances and path must be non-null")) {
    return s;
  }
  return guarded([&] { adjviz::save_distances(distances->value, path); });
}

adjviz_status adjviz_distances_open(const char* path, adjviz_distances** out) {
  if (adjviz_status s = require(path != nullptr && out != nullptr,
                                "path and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded(
      [&] { *out = new adjviz_distances{adjviz::load_distances(path)}; });
}

void adjviz_distances_free(adjviz_distances* distances) { delete distances; }

size_t adjviz_distances_size(const adjviz_distances* distances) {
  return distances != nullptr ? distances->value.size() : 0;
}

const char* adjviz_distances_classifier_id(const adjviz_distances* distances,
                                           size_t index) {
  if (distances == nullptr || index >= distances->value.size()) return nullptr;
  return distances->value.classifier_ids[index].c_str();
}

double adjviz_distances_get(const adjviz_distances* distances, size_t i,
                            size_t j) {
  if (distances == nullptr || i >= distances->value.size() ||
      j >= distances->value.size()) {
    return -1.0;
  }
  return distances->value.at(i, j);
}

/* ---- 2D embedding ------------------------------------------------------ */

void adjviz_embed_options_init(adjviz_embed_options* options) {
  if (options == nullptr) return;
  options->method = ADJVIZ_MDS_NONMETRIC;
  options->max_iter = 300;
  options->eps = 1e-9;
  options->random_init = 0;
  options->seed = 0;
}

adjviz_status adjviz_embedding_compute(const adjviz_distances* distances,
                                       const adjviz_embed_options* options,
                                       adjviz_embedding** out) {
  if (adjviz_status s = require(distances != nullptr && out != nullptr,
                                "distances and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    adjviz_embed_options defaults;
    adjviz_embed_options_init(&defaults);
    const adjviz_embed_options& opt = options != nullptr ? *options : defaults;
    adjviz::Embedding embedding;
    if (opt.method == ADJVIZ_MDS_CLASSICAL) {
      embedding = adjviz::classical_mds(distances->value, 2);
    } else if (opt.method == ADJVIZ_MDS_NONMETRIC) {
      adjviz::MdsConfig config;
      config.max_iter = opt.max_iter;
      config.eps = opt.eps;
      if (opt.random_init != 0) config.seed = opt.seed;
      embedding = adjviz::nonmetric_mds(distances->value, 2, config);
    } else {
      throw adjviz::Error(adjviz::ErrorCode::kInvalidArgument,
                          "unknown MDS method " + std::to_string(opt.method));
    }
    *out = new adjviz_embedding{adjviz::procrustes_normalize(embedding)};
  });
}

adjviz_status adjviz_embedding_save(const adjviz_embedding* embedding,
                                    const char* path) {
  if (adjviz_status s = require(embedding != nullptr && path != nullptr,
                                "embedding and path must be non-null")) {
    return s;
  }
  return guarded([&] { adjviz::save_embedding(embedding->value, path); });
}

adjviz_status adjviz_embedding_open(const char* path, adjviz_embedding** out) {
  if (adjviz_status s = require(path != nullptr && out != nullptr,
                                "path and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded(
      [&] { *out = new adjviz_embedding{adjviz::load_embedding(path)}; });
}

void adjviz_embedding_free(adjviz_embedding* embedding) { delete embedding; }

size_t adjviz_embedding_size(const adjviz_embedding* embedding) {
  return embedding != nullptr ? embedding->value.size() : 0;
}

const char* adjviz_embedding_classifier_id(const adjviz_embedding* embedding,
                                           size_t index) {
  if (embedding == nullptr || index >= embedding->value.size()) return nullptr;
  return embedding->value.classifier_ids[index].c_str();
}

adjviz_status adjviz_embedding_coords(const adjviz_embedding* embedding,
                                      size_t index, double* x, double* y) {
  if (adjviz_status s =
          require(embedding != nullptr && x != nullptr && y != nullptr,
                  "embedding, x, and y must be non-null")) {
    return s;
  }
  return guarded([&] {
    if (index >= embedding->value.size()) {
      throw adjviz::Error(adjviz::ErrorCode::kOutOfRange,
                          "index " + std::to_string(index) +
                              " out of range for " +
                              std::to_string(embedding->value.size()) +
                              " classifiers");
    }
    *x = embedding->value.at(index, 0);
    *y = embedding->value.at(index, 1);
  });
}

double adjviz_embedding_stress(const adjviz_embedding* embedding) {
  return embedding != nullptr ? embedding->value.stress : -1.0;
}

/* ---- detection metrics ------------------------------------------------- */

adjviz_status adjviz_metrics_compute(const adjviz_scores* scores,
                                     const adjviz_labels* labels,
                                     const char* positive_label,
                                     adjviz_metrics_row* rows) {
  if (adjviz_status s = require(scores != nullptr && labels != nullptr &&
                                    positive_label != nullptr && rows != nullptr,
                                "scores, labels, positive_label, and rows must "
                                "be non-null")) {
    return s;
  }
  return guarded([&] {
    auto metrics =
        adjviz::compute_metrics(scores->value, labels->value, positive_label);
    for (size_t j = 0; j < metrics.size(); ++j) {
      rows[j].eer = metrics[j].eer;
      rows[j].cllr = metrics[j].cllr;
      rows[j].min_cllr = metrics[j].min_cllr;
    }
  });
}

adjviz_status adjviz_metrics_save(const adjviz_scores* scores,
                                  const adjviz_labels* labels,
                                  const char* positive_label,
                                  const char* path) {
  if (adjviz_status s =
          require(scores != nullptr && labels != nullptr &&
                      positive_label != nullptr && path != nullptr,
                  "scores, labels, positive_label, and path must be non-null")) {
    return s;
  }
  return guarded([&] {
    auto metrics =
        adjviz::compute_metrics(scores->value, labels->value, positive_label);
    adjviz::save_metrics(metrics, path);
  });
}

adjviz_status adjviz_pav_groups(const adjviz_scores* scores, size_t column,
                                const adjviz_labels* labels,
                                const char* positive_label,
                                adjviz_groups** out) {
  if (adjviz_status s =
          require(scores != nullptr && labels != nullptr &&
                      positive_label != nullptr && out != nullptr,
                  "scores, labels, positive_label, and out must be non-null")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new adjviz_groups{adjviz::pav_rank_groups(scores->value, column,
                                                     labels->value,
                                                     positive_label)};
  });
}

/* ---- SVG plot ----------------------------------------------------------- */

void adjviz_plot_options_init(adjviz_plot_options* options) {
  if (options == nullptr) return;
  options->color_by = nullptr;
  options->highlight_key = nullptr;
  options->annotate_key = nullptr;
  options->width = 640;
  options->height = 480;
}

adjviz_status adjviz_plot_svg(const adjviz_embedding* embedding,
                              const adjviz_metadata* metadata,
                              const adjviz_plot_options* options,
                              const char* path) {
  if (adjviz_status s = require(embedding != nullptr && path != nullptr,
                                "embedding and path must be non-null")) {
    return s;
  }
  return guarded([&] {
    adjviz_plot_options defaults;
    adjviz_plot_options_init(&defaults);
    const adjviz_plot_options& opt = options != nullptr ? *options : defaults;
    adjviz::PlotSpec spec;
    if (opt.color_by != nullptr) spec.color_by = opt.color_by;
    if (opt.highlight_key != nullptr) spec.highlight_key = opt.highlight_key;
    if (opt.annotate_key != nullptr) spec.annotate_key = opt.annotate_key;
    spec.width = opt.width;
    spec.height = opt.height;
    adjviz::save_svg(embedding->value,
                     metadata != nullptr ? &metadata->value : nullptr, spec,
                     path);
  });
}

} /* extern "C" */
