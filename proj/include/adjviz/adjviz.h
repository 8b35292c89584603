/* include/adjviz/adjviz.h */

/* Copyright 2026  The adjviz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

   THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
   KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
   WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
   MERCHANTABLITY OR NON-INFRINGEMENT.
   See the Apache 2 License for the specific language governing permissions and
   limitations under the License. */

/* C interface to the adjviz classifier-adjacency library.

   All functions that can fail return an adjviz_status; ADJVIZ_OK is 0.
   On failure, adjviz_last_error() returns a human-readable message for the
   most recent failing call on the current thread.  Objects are opaque
   handles created through *_load/*_compute functions and released with the
   matching *_free function.  Handles are immutable once created and may be
   shared across threads for reading. */

#ifndef ADJVIZ_ADJVIZ_H_
#define ADJVIZ_ADJVIZ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ADJVIZ_API __declspec(dllexport)
#else
#define ADJVIZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adjviz_status {
  ADJVIZ_OK = 0,
  ADJVIZ_E_IO = 1,                  /* file could not be read or written */
  ADJVIZ_E_PARSE = 2,               /* malformed input line (message has line number) */
  ADJVIZ_E_MISSING_TRIAL = 3,       /* trial sets of score files differ */
  ADJVIZ_E_DUPLICATE_TRIAL = 4,     /* same trial id twice in one score file */
  ADJVIZ_E_DUPLICATE_CLASSIFIER = 5,
  ADJVIZ_E_NONFINITE_SCORE = 6,
  ADJVIZ_E_DUPLICATE_KEY = 7,       /* duplicate key in a label/group/metadata file */
  ADJVIZ_E_UNMAPPED_TRIAL = 8,      /* trial without a group during reduction */
  ADJVIZ_E_LENGTH_MISMATCH = 9,
  ADJVIZ_E_DEGENERATE_COLUMN = 10,  /* Kendall tau undefined (constant column) */
  ADJVIZ_E_OUT_OF_RANGE = 11,
  ADJVIZ_E_DIMENSION_TOO_LARGE = 12,
  ADJVIZ_E_EMPTY_INPUT = 13,
  ADJVIZ_E_NONPOSITIVE_WEIGHT = 14,
  ADJVIZ_E_MISSING_LABEL = 15,
  ADJVIZ_E_SINGLE_CLASS = 16,       /* needs at least one positive and one negative trial */
  ADJVIZ_E_INVALID_MATRIX = 17,     /* asymmetric / bad diagonal / malformed matrix file */
  ADJVIZ_E_INVALID_ARGUMENT = 18,
  ADJVIZ_E_UNKNOWN = 19
} adjviz_status;

typedef struct adjviz_scores adjviz_scores;       /* N trials x M classifiers */
typedef struct adjviz_labels adjviz_labels;       /* trial id -> class label */
typedef struct adjviz_groups adjviz_groups;       /* trial id -> group id */
typedef struct adjviz_metadata adjviz_metadata;   /* classifier id -> attributes */
typedef struct adjviz_distances adjviz_distances; /* M x M rank distances */
typedef struct adjviz_embedding adjviz_embedding; /* M x 2 coordinates */

ADJVIZ_API const char* adjviz_version(void);
ADJVIZ_API const char* adjviz_status_name(adjviz_status status);

/* Message for the last failing call on the calling thread; never NULL. */
ADJVIZ_API const char* adjviz_last_error(void);

/* ---- score matrix ----------------------------------------------------- */

/* Loads one two-column score file (trial_id <TAB> score) per classifier.
   All files must cover an identical trial set; trials are ordered by sorted
   trial id, columns by path order.  Classifier ids are the file name stems. */
ADJVIZ_API adjviz_status adjviz_scores_load(const char* const* paths,
                                            size_t n_paths,
                                            adjviz_scores** out);
ADJVIZ_API void adjviz_scores_free(adjviz_scores* scores);

ADJVIZ_API size_t adjviz_scores_num_trials(const adjviz_scores* scores);
ADJVIZ_API size_t adjviz_scores_num_classifiers(const adjviz_scores* scores);
ADJVIZ_API const char* adjviz_scores_classifier_id(const adjviz_scores* scores,
                                                   size_t column);
ADJVIZ_API const char* adjviz_scores_trial_id(const adjviz_scores* scores,
                                              size_t row);
/* Copies column `column` into `out` (length = num_trials). */
ADJVIZ_API adjviz_status adjviz_scores_column(const adjviz_scores* scores,
                                              size_t column, double* out);

/* Replaces trials by per-group mean scores; group order is lexicographic. */
ADJVIZ_API adjviz_status adjviz_scores_group_reduce(const adjviz_scores* scores,
                                                    const adjviz_groups* groups,
                                                    adjviz_scores** out);

/* ---- trial labels, trial groups, classifier metadata ------------------ */

ADJVIZ_API adjviz_status adjviz_labels_load(const char* path,
                                            adjviz_labels** out);
ADJVIZ_API void adjviz_labels_free(adjviz_labels* labels);

ADJVIZ_API adjviz_status adjviz_groups_load(const char* path,
                                            adjviz_groups** out);
ADJVIZ_API adjviz_status adjviz_groups_save(const adjviz_groups* groups,
                                            const char* path);
ADJVIZ_API void adjviz_groups_free(adjviz_groups* groups);

ADJVIZ_API adjviz_status adjviz_metadata_load(const char* path,
                                              adjviz_metadata** out);
ADJVIZ_API void adjviz_metadata_free(adjviz_metadata* metadata);
ADJVIZ_API size_t adjviz_metadata_count(const adjviz_metadata* metadata);
ADJVIZ_API const char* adjviz_metadata_id(const adjviz_metadata* metadata,
                                          size_t index);
ADJVIZ_API int adjviz_metadata_has(const adjviz_metadata* metadata,
                                   const char* classifier_id);

/* ---- rank correlation -------------------------------------------------- */

typedef struct adjviz_tau_result {
  double tau;          /* tie-corrected Kendall tau in [-1, 1] */
  uint64_t n_con;      /* concordant pairs */
  uint64_t n_dis;      /* discordant pairs */
  uint64_t ties_x;     /* pairs tied only in x */
  uint64_t ties_y;     /* pairs tied only in y */
  uint64_t ties_both;  /* pairs tied in both (excluded from all other counts) */
  uint64_t n_pairs;    /* n * (n - 1) / 2 */
} adjviz_tau_result;

ADJVIZ_API adjviz_status adjviz_kendall_tau(const double* x, const double* y,
                                            size_t n, adjviz_tau_result* out);

/* ---- distance matrix --------------------------------------------------- */

/* D(i,j) = (1 - tau(i,j)) / 2 for all classifier pairs.  threads = 0 picks
   the available hardware parallelism; results do not depend on it. */
ADJVIZ_API adjviz_status adjviz_distances_compute(const adjviz_scores* scores,
                                                  unsigned threads,
                                                  adjviz_distances** out);
ADJVIZ_API adjviz_status adjviz_distances_save(const adjviz_distances* distances,
                                               const char* path);
ADJVIZ_API adjviz_status adjviz_distances_open(const char* path,
                                               adjviz_distances** out);
ADJVIZ_API void adjviz_distances_free(adjviz_distances* distances);
ADJVIZ_API size_t adjviz_distances_size(const adjviz_distances* distances);
ADJVIZ_API const char* adjviz_distances_classifier_id(
    const adjviz_distances* distances, size_t index);
ADJVIZ_API double adjviz_distances_get(const adjviz_distances* distances,
                                       size_t i, size_t j);

/* ---- 2D embedding ------------------------------------------------------ */

typedef enum adjviz_mds_method {
  ADJVIZ_MDS_NONMETRIC = 0, /* SMACOF with isotonic disparities */
  ADJVIZ_MDS_CLASSICAL = 1  /* Torgerson double-centering eigendecomposition */
} adjviz_mds_method;

typedef struct adjviz_embed_options {
  int method;        /* adjviz_mds_method */
  int max_iter;      /* SMACOF iteration cap */
  double eps;        /* relative stress improvement stopping threshold */
  int random_init;   /* nonzero: random start with `seed`; else classical start */
  uint64_t seed;
} adjviz_embed_options;

/* Fills the documented defaults: nonmetric, max_iter 300, eps 1e-9,
   deterministic classical initialization. */
ADJVIZ_API void adjviz_embed_options_init(adjviz_embed_options* options);

/* Computes a procrustes-normalized 2D embedding of the distance matrix. */
ADJVIZ_API adjviz_status adjviz_embedding_compute(
    const adjviz_distances* distances, const adjviz_embed_options* options,
    adjviz_embedding** out);
ADJVIZ_API adjviz_status adjviz_embedding_save(const adjviz_embedding* embedding,
                                               const char* path);
ADJVIZ_API adjviz_status adjviz_embedding_open(const char* path,
                                               adjviz_embedding** out);
ADJVIZ_API void adjviz_embedding_free(adjviz_embedding* embedding);
ADJVIZ_API size_t adjviz_embedding_size(const adjviz_embedding* embedding);
ADJVIZ_API const char* adjviz_embedding_classifier_id(
    const adjviz_embedding* embedding, size_t index);
ADJVIZ_API adjviz_status adjviz_embedding_coords(
    const adjviz_embedding* embedding, size_t index, double* x, double* y);
/* stress-1 for nonmetric embeddings; clamped eigenvalue mass for classical. */
ADJVIZ_API double adjviz_embedding_stress(const adjviz_embedding* embedding);

/* ---- detection metrics ------------------------------------------------- */

typedef struct adjviz_metrics_row {
  double eer;      /* equal error rate in [0, 1] */
  double cllr;     /* log-likelihood-ratio cost, bits */
  double min_cllr; /* PAV-calibrated lower bound, bits */
} adjviz_metrics_row;

/* Fills one row per classifier (rows has num_classifiers entries).  Labels
   equal to positive_label count as targets; everything else is nontarget. */
ADJVIZ_API adjviz_status adjviz_metrics_compute(const adjviz_scores* scores,
                                                const adjviz_labels* labels,
                                                const char* positive_label,
                                                adjviz_metrics_row* rows);
ADJVIZ_API adjviz_status adjviz_metrics_save(const adjviz_scores* scores,
                                             const adjviz_labels* labels,
                                             const char* positive_label,
                                             const char* path);

/* PAV rank groups of one classifier column: trials in the same pooled
   calibration block share a group, numbered in score order. */
ADJVIZ_API adjviz_status adjviz_pav_groups(const adjviz_scores* scores,
                                           size_t column,
                                           const adjviz_labels* labels,
                                           const char* positive_label,
                                           adjviz_groups** out);

/* ---- SVG plot ----------------------------------------------------------- */

typedef struct adjviz_plot_options {
  const char* color_by;      /* metadata attribute for marker colors; NULL: none */
  const char* highlight_key; /* metadata flag column for diamond markers */
  const char* annotate_key;  /* metadata attribute printed next to markers */
  int width;                 /* canvas size in pixels */
  int height;
} adjviz_plot_options;

ADJVIZ_API void adjviz_plot_options_init(adjviz_plot_options* options);

/* Renders a standalone SVG scatter of the embedding.  metadata may be NULL
   (neutral markers, no legend). */
ADJVIZ_API adjviz_status adjviz_plot_svg(const adjviz_embedding* embedding,
                                         const adjviz_metadata* metadata,
                                         const adjviz_plot_options* options,
                                         const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ADJVIZ_ADJVIZ_H_ */
