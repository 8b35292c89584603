// src/core/mds.cpp

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

#include "core/mds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "core/error.hpp"
#include "core/isotonic.hpp"

namespace adjviz {

namespace {

void center_columns(Embedding& e) {
  const std::size_t m = e.size();
  if (m == 0) return;
  for (std::size_t k = 0; k < e.dim; ++k) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += e.at(i, k);
    mean /= static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) e.at(i, k) -= mean;
  }
}

// Uniform double in [0, 1) from the top 53 bits of the engine output.
// std::uniform_real_distribution is implementation-defined, so the raw-bit
// construction keeps seeded runs reproducible everywhere.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct PairList {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  std::vector<double> delta;  // input dissimilarities
  std::size_t count() const { return delta.size(); }
};

PairList make_pairs(const DistanceMatrix& d) {
  PairList pairs;
  const std::size_t m = d.size();
  pairs.first.reserve(m * (m - 1) / 2);
  pairs.second.reserve(m * (m - 1) / 2);
  pairs.delta.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      pairs.first.push_back(i);
      pairs.second.push_back(j);
      pairs.delta.push_back(d.at(i, j));
    }
  }
  return pairs;
}

void config_distances(const Embedding& e, const PairList& pairs,
                      std::vector<double>& out) {
  out.resize(pairs.count());
  for (std::size_t p = 0; p < pairs.count(); ++p) {
    const std::size_t i = pairs.first[p];
    const std::size_t j = pairs.second[p];
    double sq = 0.0;
    for (std::size_t k = 0; k < e.dim; ++k) {
      const double diff = e.at(i, k) - e.at(j, k);
      sq += diff * diff;
    }
    out[p] = std::sqrt(sq);
  }
}

// Kruskal's primary approach to ties: pairs are ordered by dissimilarity
// with the current distances as secondary key, so tied dissimilarities put
// no constraint on each other.
void disparities(const PairList& pairs, const std::vector<double>& dist,
                 std::vector<std::size_t>& order, std::vector<double>& scratch,
                 std::vector<double>& out) {
  const std::size_t p_count = pairs.count();
  order.resize(p_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pairs.delta[a] != pairs.delta[b]) return pairs.delta[a] < pairs.delta[b];
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return a < b;
  });
  scratch.resize(p_count);
  for (std::size_t r = 0; r < p_count; ++r) scratch[r] = dist[order[r]];
  std::vector<double> fitted = isotonic_regression(scratch);
  out.resize(p_count);
  for (std::size_t r = 0; r < p_count; ++r) out[order[r]] = fitted[r];
}

double stress1(const std::vector<double>& disp, const std::vector<double>& dist) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t p = 0; p < dist.size(); ++p) {
    const double diff = disp[p] - dist[p];
    num += diff * diff;
    den += dist[p] * dist[p];
  }
  if (den == 0.0) return 0.0;
  return std::sqrt(num / den);
}

// One Guttman transform step: X = B(Z) Z / M with b_ij = -dhat_ij / d_ij.
Embedding guttman(const Embedding& z, const PairList& pairs,
                  const std::vector<double>& disp,
                  const std::vector<double>& dist) {
  const std::size_t m = z.size();
  std::vector<double> b(m * m, 0.0);
  for (std::size_t p = 0; p < pairs.count(); ++p) {
    if (dist[p] <= 0.0) continue;
    const double w = disp[p] / dist[p];
    const std::size_t i = pairs.first[p];
    const std::size_t j = pairs.second[p];
    b[i * m + j] -= w;
    b[j * m + i] -= w;
    b[i * m + i] += w;
    b[j * m + j] += w;
  }
  Embedding x = z;
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < z.dim; ++k) {
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += b[i * m + j] * z.at(j, k);
      x.at(i, k) = acc * inv_m;
    }
  }
  return x;
}

Embedding random_config(const DistanceMatrix& d, std::size_t dim,
                        std::uint64_t seed) {
  Embedding e;
  e.classifier_ids = d.classifier_ids;
  e.dim = dim;
  e.coords.assign(d.size() * dim, 0.0);
  std::mt19937_64 rng(seed);
  for (double& c : e.coords) c = uniform_unit(rng) - 0.5;
  return e;
}

// Classical configuration padded with zero columns when dim exceeds M - 1,
// so a 2-classifier matrix can still start a 2D SMACOF run.
Embedding classical_config(const DistanceMatrix& d, std::size_t dim) {
  const std::size_t usable = std::min(dim, d.size() - 1);
  Embedding base = classical_mds(d, usable);
  if (usable == dim) return base;
  Embedding e;
  e.classifier_ids = base.classifier_ids;
  e.dim = dim;
  e.coords.assign(d.size() * dim, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t k = 0; k < usable; ++k) e.at(i, k) = base.at(i, k);
  }
  return e;
}

std::string format_g(double value, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

}  // namespace

Embedding classical_mds(const DistanceMatrix& distances, std::size_t dim) {
  const std::size_t m = distances.size();
  if (m < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "distance matrix has " + std::to_string(m) + " classifier(s)");
  }
  if (dim < 1 || dim > m - 1) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "dim " + std::to_string(dim) + " not in [1, " +
                    std::to_string(m - 1) + "] for " + std::to_string(m) +
                    " classifiers");
  }

  Eigen::MatrixXd b(m, m);
  std::vector<double> row_mean(m, 0.0);
  double grand_mean = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double sq = distances.at(i, j) * distances.at(i, j);
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sq;
      row_mean[i] += sq;
    }
    row_mean[i] /= static_cast<double>(m);
    grand_mean += row_mean[i];
  }
  grand_mean /= static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto& cell = b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      cell = -0.5 * (cell - row_mean[i] - row_mean[j] + grand_mean);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidMatrix, "eigendecomposition failed");
  }
  const auto& values = solver.eigenvalues();   // ascending
  const auto& vectors = solver.eigenvectors();

  double negative_mass = 0.0;
  double total_mass = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    total_mass += std::abs(values(k));
    if (values(k) < 0.0) negative_mass += -values(k);
  }

  Embedding e;
  e.classifier_ids = distances.classifier_ids;
  e.dim = dim;
  e.coords.assign(m * dim, 0.0);
  e.method = "classical";
  e.stress = total_mass > 0.0 ? negative_mass / total_mass : 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const Eigen::Index col = static_cast<Eigen::Index>(m - 1 - k);
    const double scale = std::sqrt(std::max(values(col), 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      e.at(i, k) = vectors(static_cast<Eigen::Index>(i), col) * scale;
    }
  }
  center_columns(e);
  return e;
}

Embedding nonmetric_mds(const DistanceMatrix& distances, std::size_t dim,
                        const MdsConfig& config) {
  const std::size_t m = distances.size();
  if (m < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "distance matrix has " + std::to_string(m) + " classifier(s)");
  }
  if (dim < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dim must be positive");
  }
  if (config.max_iter < 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_iter must be >= 0");
  }

  PairList pairs = make_pairs(distances);
  Embedding z = config.seed ? random_config(distances, dim, *config.seed)
                            : classical_config(distances, dim);
  z.method = "nonmetric";
  z.seed = config.seed;
  z.trace.clear();
  z.iterations = 0;

  std::vector<double> dist;
  std::vector<double> disp;
  std::vector<std::size_t> order;
  std::vector<double> scratch;

  config_distances(z, pairs, dist);
  disparities(pairs, dist, order, scratch, disp);
  double stress = stress1(disp, dist);
  z.trace.push_back(stress);

  std::vector<double> new_dist;
  std::vector<double> new_disp;
  for (int it = 1; it <= config.max_iter; ++it) {
    Embedding x = guttman(z, pairs, disp, dist);
    config_distances(x, pairs, new_dist);
    disparities(pairs, new_dist, order, scratch, new_disp);
    const double new_stress = stress1(new_disp, new_dist);
    // Majorization drives raw stress down; the stress-1 denominator can
    // still drift, so a step that would raise stress-1 is discarded.
    if (new_stress > stress) break;
    x.method = z.method;
    x.seed = z.seed;
    x.trace = std::move(z.trace);
    z = std::move(x);
    dist.swap(new_dist);
    disp.swap(new_disp);
    const double previous = stress;
    stress = new_stress;
    z.trace.push_back(stress);
    z.iterations = static_cast<std::size_t>(it);
    if (previous == 0.0 || previous - stress <= config.eps * previous) break;
  }

  z.stress = stress;
  center_columns(z);
  return z;
}

Embedding procrustes_normalize(const Embedding& embedding) {
  if (embedding.dim != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "procrustes normalization requires a 2D embedding, got dim " +
                    std::to_string(embedding.dim));
  }
  Embedding e = embedding;
  const std::size_t m = e.size();
  if (m == 0) return e;
  center_columns(e);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += e.at(i, 0) * e.at(i, 0);
    syy += e.at(i, 1) * e.at(i, 1);
    sxy += e.at(i, 0) * e.at(i, 1);
  }
  const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = e.at(i, 0);
    const double y = e.at(i, 1);
    e.at(i, 0) = c * x + s * y;
    e.at(i, 1) = -s * x + c * y;
  }

  double scale = 0.0;
  for (double v : e.coords) scale = std::max(scale, std::abs(v));
  // Coordinates this far below the cloud scale count as zero, so the sign
  // rule keys on a stable coordinate instead of rounding noise.
  const double tol = 1e-9 * scale;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const double v = e.at(i, k);
      if (std::abs(v) <= tol) continue;
      if (v < 0.0) {
        for (std::size_t r = 0; r < m; ++r) e.at(r, k) = -e.at(r, k);
      }
      break;
    }
  }
  return e;
}

void save_embedding(const Embedding& embedding, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  out << "# method=" << embedding.method
      << " stress=" << format_g(embedding.stress, 9)
      << " iterations=" << embedding.iterations << " seed=";
  if (embedding.seed) {
    out << *embedding.seed;
  } else {
    out << "-";
  }
  out << '\n';
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    out << embedding.classifier_ids[i];
    for (std::size_t k = 0; k < embedding.dim; ++k) {
      out << '\t' << format_g(embedding.at(i, k), 9);
    }
    out << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
  }
}

Embedding load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  }
  Embedding e;
  e.dim = 2;

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kParse, path + ": empty embedding file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty() || line[0] != '#') {
    throw Error(ErrorCode::kParse,
                path + ": missing '# method=... stress=...' header line");
  }
  std::istringstream header(line.substr(1));
  std::string token;
  while (header >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "method") {
      e.method = value;
    } else if (key == "stress") {
      e.stress = std::strtod(value.c_str(), nullptr);
    } else if (key == "iterations") {
      e.iterations = static_cast<std::size_t>(std::strtoull(value.c_str(), nullptr, 10));
    } else if (key == "seed" && value != "-") {
      e.seed = static_cast<std::uint64_t>(std::strtoull(value.c_str(), nullptr, 10));
    }
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
      if (ch == '\t') {
        fields.push_back(field);
        field.clear();
      } else {
        field.push_back(ch);
      }
    }
    fields.push_back(field);
    if (fields.size() != 3) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected 'id\\tx\\ty', got "
          << fields.size() << " fields";
      throw Error(ErrorCode::kParse, msg.str());
    }
    double xy[2];
    for (int k = 0; k < 2; ++k) {
      const std::string& text = fields[static_cast<std::size_t>(k) + 1];
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), xy[k]);
      if (ec != std::errc() || ptr != text.data() + text.size() ||
          !std::isfinite(xy[k])) {
        std::ostringstream msg;
        msg << path << ":" << line_no << ": cannot parse coordinate '" << text
            << "'";
        throw Error(ErrorCode::kParse, msg.str());
      }
    }
    for (const auto& existing : e.classifier_ids) {
      if (existing == fields[0]) {
        std::ostringstream msg;
        msg << path << ":" << line_no << ": duplicate classifier id '"
            << fields[0] << "'";
        throw Error(ErrorCode::kDuplicateClassifier, msg.str());
      }
    }
    e.classifier_ids.push_back(fields[0]);
    e.coords.push_back(xy[0]);
    e.coords.push_back(xy[1]);
  }
  if (e.classifier_ids.empty()) {
    throw Error(ErrorCode::kParse, path + ": no classifier rows");
  }
  return e;
}

}  // namespace adjviz
