// src/core/mds.hpp

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

#ifndef ADJVIZ_CORE_MDS_HPP_
#define ADJVIZ_CORE_MDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/distance.hpp"

namespace adjviz {

// A low-dimensional configuration of the classifiers.  Coordinates are
// row-major, one row per classifier, in distance-matrix order, and each
// coordinate column is centered on zero.
//
// `stress` holds the normalized stress-1 value for non-metric embeddings.
// Classical embeddings carry no stress; there `stress` records the clamped
// eigenvalue mass sum|lambda_neg| / sum|lambda| as a distortion diagnostic.
struct Embedding {
  std::vector<std::string> classifier_ids;
  std::size_t dim = 2;
  std::vector<double> coords;  // size() * dim, row-major
  std::string method;          // "classical" or "nonmetric"
  double stress = 0.0;
  std::vector<double> trace;   // per-iteration stress-1 (non-metric only)
  std::size_t iterations = 0;
  std::optional<std::uint64_t> seed;

  std::size_t size() const { return classifier_ids.size(); }
  double at(std::size_t i, std::size_t k) const { return coords[i * dim + k]; }
  double& at(std::size_t i, std::size_t k) { return coords[i * dim + k]; }
};

struct MdsConfig {
  int max_iter = 300;
  double eps = 1e-9;  // relative stress-1 improvement below which to stop
  std::optional<std::uint64_t> seed;  // set: random init; unset: classical init
};

// Torgerson double-centering MDS.  Negative eigenvalues clamp to zero; the
// clamped mass is recorded in the result.  Requires dim <= M - 1.
Embedding classical_mds(const DistanceMatrix& distances, std::size_t dim = 2);

// SMACOF with isotonic disparities (Kruskal's primary approach to ties).
// Reaching max_iter is not an error; the trace holds stress-1 per iteration
// and is non-increasing.
Embedding nonmetric_mds(const DistanceMatrix& distances, std::size_t dim = 2,
                        const MdsConfig& config = {});

// Canonical orientation for 2D embeddings: centroid at the origin, principal
// axis along x, reflections fixed by the sign of the first classifier's
// coordinates (falling back to the first classifier with a nonzero
// coordinate on that axis).
Embedding procrustes_normalize(const Embedding& embedding);

void save_embedding(const Embedding& embedding, const std::string& path);
Embedding load_embedding(const std::string& path);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_MDS_HPP_
