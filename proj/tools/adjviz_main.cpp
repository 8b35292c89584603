// tools/adjviz_main.cpp

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

// Command-line pipeline around the adjviz C API:
//   adjviz distances <score_dir> <out> [--groups file] [--threads n]
//   adjviz embed <distances> <out> [--method classical|nonmetric] [--seed n]
//   adjviz plot <embedding> <out.svg> [--metadata csv] [--color-by attr]
//               [--highlight attr] [--annotate attr] [--width n] [--height n]
//   adjviz metrics <score_dir> <labels> <out> [--positive-label token]
//   adjviz pav-groups <score_file> <labels> <out> [--positive-label token]

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adjviz/adjviz.h"

namespace {

int fail_with_last_error() {
  std::cerr << "error: " << adjviz_last_error() << "\n";
  return 1;
}

#define CHECK_API(call)                       \
  do {                                        \
    if ((call) != ADJVIZ_OK) {                \
      return fail_with_last_error();          \
    }                                         \
  } while (0)

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using ScoresHandle =
    std::unique_ptr<adjviz_scores, HandleDeleter<adjviz_scores, adjviz_scores_free>>;
using LabelsHandle =
    std::unique_ptr<adjviz_labels, HandleDeleter<adjviz_labels, adjviz_labels_free>>;
using GroupsHandle =
    std::unique_ptr<adjviz_groups, HandleDeleter<adjviz_groups, adjviz_groups_free>>;
using MetadataHandle =
    std::unique_ptr<adjviz_metadata,
                    HandleDeleter<adjviz_metadata, adjviz_metadata_free>>;
using DistancesHandle =
    std::unique_ptr<adjviz_distances,
                    HandleDeleter<adjviz_distances, adjviz_distances_free>>;
using EmbeddingHandle =
    std::unique_ptr<adjviz_embedding,
                    HandleDeleter<adjviz_embedding, adjviz_embedding_free>>;

// Regular files of the directory in sorted name order; dotfiles skipped.
std::vector<std::string> list_score_files(const std::string& dir) {
  std::error_code ec;
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().front() == '.') continue;
    paths.push_back(entry.path().string());
  }
  if (ec) {
    std::cerr << "error: cannot read score directory '" << dir
              << "': " << ec.message() << "\n";
    std::exit(1);
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

int load_score_dir(const std::string& dir, ScoresHandle& out) {
  std::vector<std::string> paths = list_score_files(dir);
  if (paths.empty()) {
    std::cerr << "error: no score files in directory '" << dir << "'\n";
    return 1;
  }
  std::vector<const char*> c_paths;
  c_paths.reserve(paths.size());
  for (const auto& p : paths) c_paths.push_back(p.c_str());
  adjviz_scores* scores = nullptr;
  if (adjviz_scores_load(c_paths.data(), c_paths.size(), &scores) != ADJVIZ_OK) {
    return fail_with_last_error();
  }
  out.reset(scores);
  return 0;
}

struct DistancesArgs {
  std::string score_dir;
  std::string out;
  std::string groups_file;
  unsigned threads = 0;
};

int run_distances(const DistancesArgs& args) {
  ScoresHandle scores;
  if (int rc = load_score_dir(args.score_dir, scores)) return rc;

  ScoresHandle reduced;
  const adjviz_scores* input = scores.get();
  if (!args.groups_file.empty()) {
    adjviz_groups* groups = nullptr;
    CHECK_API(adjviz_groups_load(args.groups_file.c_str(), &groups));
    GroupsHandle groups_handle(groups);
    adjviz_scores* grouped = nullptr;
    CHECK_API(adjviz_scores_group_reduce(scores.get(), groups, &grouped));
    reduced.reset(grouped);
    input = reduced.get();
  }

  adjviz_distances* distances = nullptr;
  CHECK_API(adjviz_distances_compute(input, args.threads, &distances));
  DistancesHandle handle(distances);
  CHECK_API(adjviz_distances_save(distances, args.out.c_str()));
  return 0;
}

struct EmbedArgs {
  std::string distances_file;
  std::string out;
  std::string method = "nonmetric";
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_embed(const EmbedArgs& args) {
  adjviz_distances* distances = nullptr;
  CHECK_API(adjviz_distances_open(args.distances_file.c_str(), &distances));
  DistancesHandle distances_handle(distances);

  adjviz_embed_options options;
  adjviz_embed_options_init(&options);
  options.method = args.method == "classical" ? ADJVIZ_MDS_CLASSICAL
                                              : ADJVIZ_MDS_NONMETRIC;
  if (args.seed_given) {
    options.random_init = 1;
    options.seed = args.seed;
  }

  adjviz_embedding* embedding = nullptr;
  CHECK_API(adjviz_embedding_compute(distances, &options, &embedding));
  EmbeddingHandle embedding_handle(embedding);
  CHECK_API(adjviz_embedding_save(embedding, args.out.c_str()));
  return 0;
}

struct PlotArgs {
  std::string embedding_file;
  std::string out;
  std::string metadata_file;
  std::string color_by;
  std::string highlight_key;
  std::string annotate_key;
  int width = 640;
  int height = 480;
};

int run_plot(const PlotArgs& args) {
  adjviz_embedding* embedding = nullptr;
  CHECK_API(adjviz_embedding_open(args.embedding_file.c_str(), &embedding));
  EmbeddingHandle embedding_handle(embedding);

  MetadataHandle metadata_handle;
  if (!args.metadata_file.empty()) {
    adjviz_metadata* metadata = nullptr;
    CHECK_API(adjviz_metadata_load(args.metadata_file.c_str(), &metadata));
    metadata_handle.reset(metadata);
    const size_t m = adjviz_embedding_size(embedding);
    for (size_t i = 0; i < m; ++i) {
      const char* id = adjviz_embedding_classifier_id(embedding, i);
      if (!adjviz_metadata_has(metadata, id)) {
        std::cerr << "warning: classifier '" << id
                  << "' has no metadata row; rendered neutral\n";
      }
    }
  }

  adjviz_plot_options options;
  adjviz_plot_options_init(&options);
  if (!args.color_by.empty()) options.color_by = args.color_by.c_str();
  if (!args.highlight_key.empty()) {
    options.highlight_key = args.highlight_key.c_str();
  }
  if (!args.annotate_key.empty()) options.annotate_key = args.annotate_key.c_str();
  options.width = args.width;
  options.height = args.height;

  CHECK_API(adjviz_plot_svg(embedding, metadata_handle.get(), &options,
                            args.out.c_str()));
  return 0;
}

struct MetricsArgs {
  std::string score_dir;
  std::string labels_file;
  std::string out;
  std::string positive_label = "target";
};

int run_metrics(const MetricsArgs& args) {
  ScoresHandle scores;
  if (int rc = load_score_dir(args.score_dir, scores)) return rc;
  adjviz_labels* labels = nullptr;
  CHECK_API(adjviz_labels_load(args.labels_file.c_str(), &labels));
  LabelsHandle labels_handle(labels);
  CHECK_API(adjviz_metrics_save(scores.get(), labels,
                                args.positive_label.c_str(), args.out.c_str()));
  return 0;
}

struct PavGroupsArgs {
  std::string score_file;
  std::string labels_file;
  std::string out;
  std::string positive_label = "target";
};

int run_pav_groups(const PavGroupsArgs& args) {
  const char* path = args.score_file.c_str();
  adjviz_scores* scores = nullptr;
  CHECK_API(adjviz_scores_load(&path, 1, &scores));
  ScoresHandle scores_handle(scores);
  adjviz_labels* labels = nullptr;
  CHECK_API(adjviz_labels_load(args.labels_file.c_str(), &labels));
  LabelsHandle labels_handle(labels);

  adjviz_groups* groups = nullptr;
  CHECK_API(adjviz_pav_groups(scores, 0, labels, args.positive_label.c_str(),
                              &groups));
  GroupsHandle groups_handle(groups);
  CHECK_API(adjviz_groups_save(groups, args.out.c_str()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifier adjacency: rank distances, 2D embeddings, and "
               "DET/EER/Cllr annotations from detection scores"};
  app.require_subcommand(1);

  DistancesArgs distances_args;
  auto* distances = app.add_subcommand(
      "distances", "Compute the pairwise rank-distance matrix");
  distances->add_option("score_dir", distances_args.score_dir,
                        "Directory with one score file per classifier")
      ->required();
  distances->add_option("out", distances_args.out, "Output matrix file")
      ->required();
  distances->add_option("--groups", distances_args.groups_file,
                        "Trial-to-group file; rows become per-group means");
  distances
      ->add_option("--threads", distances_args.threads,
                   "Worker threads, 0 = available parallelism")
      ->envname("ADJVIZ_THREADS");

  EmbedArgs embed_args;
  auto* embed =
      app.add_subcommand("embed", "Embed a distance matrix into 2D via MDS");
  embed->add_option("distances", embed_args.distances_file,
                    "Distance matrix file")
      ->required();
  embed->add_option("out", embed_args.out, "Output embedding file")->required();
  embed->add_option("--method", embed_args.method, "MDS variant")
      ->check(CLI::IsMember({"classical", "nonmetric"}))
      ->capture_default_str();
  auto* seed_option = embed->add_option(
      "--seed", embed_args.seed, "Random SMACOF initialization with this seed");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render an embedding as SVG");
  plot->add_option("embedding", plot_args.embedding_file, "Embedding file")
      ->required();
  plot->add_option("out", plot_args.out, "Output SVG file")->required();
  plot->add_option("--metadata", plot_args.metadata_file,
                   "Classifier metadata CSV");
  plot->add_option("--color-by", plot_args.color_by,
                   "Metadata attribute for marker colors");
  plot->add_option("--highlight", plot_args.highlight_key,
                   "Metadata flag attribute for diamond markers");
  plot->add_option("--annotate", plot_args.annotate_key,
                   "Metadata attribute printed next to markers");
  plot->add_option("--width", plot_args.width, "Canvas width in pixels")
      ->capture_default_str();
  plot->add_option("--height", plot_args.height, "Canvas height in pixels")
      ->capture_default_str();

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand(
      "metrics", "Per-classifier EER / Cllr / min-Cllr table");
  metrics->add_option("score_dir", metrics_args.score_dir,
                      "Directory with one score file per classifier")
      ->required();
  metrics->add_option("labels", metrics_args.labels_file, "Trial label file")
      ->required();
  metrics->add_option("out", metrics_args.out, "Output table file")->required();
  metrics
      ->add_option("--positive-label", metrics_args.positive_label,
                   "Label token counted as target")
      ->capture_default_str();

  PavGroupsArgs pav_args;
  auto* pav_groups = app.add_subcommand(
      "pav-groups", "Group trials by pooled PAV calibration block");
  pav_groups->add_option("score_file", pav_args.score_file,
                         "Score file of one classifier")
      ->required();
  pav_groups->add_option("labels", pav_args.labels_file, "Trial label file")
      ->required();
  pav_groups->add_option("out", pav_args.out, "Output group file")->required();
  pav_groups
      ->add_option("--positive-label", pav_args.positive_label,
                   "Label token counted as target")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (distances->parsed()) return run_distances(distances_args);
  if (embed->parsed()) {
    embed_args.seed_given = seed_option->count() > 0;
    return run_embed(embed_args);
  }
  if (plot->parsed()) return run_plot(plot_args);
  if (metrics->parsed()) return run_metrics(metrics_args);
  if (pav_groups->parsed()) return run_pav_groups(pav_args);
  std::cerr << "error: no subcommand\n";
  return 1;
}
