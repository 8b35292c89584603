// src/core/distance.cpp

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

#include "core/distance.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "core/kendall.hpp"

namespace adjviz {

double tau_to_distance(double tau) {
  if (!(tau >= -1.0 && tau <= 1.0)) {
    std::ostringstream msg;
    msg << "tau " << tau << " outside [-1, 1]";
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
  return 0.5 * (1.0 - tau);
}

DistanceMatrix distance_matrix(const ScoreMatrix& scores, unsigned threads) {
  const std::size_t m = scores.num_classifiers();
  const std::size_t n = scores.num_trials();
  if (m < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "need at least 2 classifiers, got " + std::to_string(m));
  }
  if (n < 2) {
    throw Error(ErrorCode::kDegenerateColumn,
                "tau undefined with " + std::to_string(n) +
                    " row(s); need at least 2");
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto& col = scores.columns[j];
    if (std::all_of(col.begin(), col.end(),
                    [&](double v) { return v == col.front(); })) {
      throw Error(ErrorCode::kDegenerateColumn,
                  "classifier '" + scores.classifier_ids[j] +
                      "' has constant scores (tau undefined)");
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  index_pairs.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) index_pairs.emplace_back(i, j);
  }

  std::vector<double> pair_distance(index_pairs.size(), 0.0);
  unsigned worker_count = threads != 0 ? threads
                                       : std::max(1u, std::thread::hardware_concurrency());
  worker_count = static_cast<unsigned>(
      std::min<std::size_t>(worker_count, index_pairs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= index_pairs.size()) return;
      try {
        const auto [i, j] = index_pairs[k];
        TauResult r = kendall_tau_fast(scores.columns[i], scores.columns[j]);
        pair_distance[k] = tau_to_distance(r.tau);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(index_pairs.size());
        return;
      }
    }
  };

  if (worker_count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  DistanceMatrix matrix;
  matrix.classifier_ids = scores.classifier_ids;
  matrix.values.assign(m * m, 0.0);
  for (std::size_t k = 0; k < index_pairs.size(); ++k) {
    const auto [i, j] = index_pairs[k];
    matrix.at(i, j) = pair_distance[k];
    matrix.at(j, i) = pair_distance[k];
  }
  return matrix;
}

void save_distances(const DistanceMatrix& matrix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  const std::size_t m = matrix.size();
  out << "id";
  for (const auto& id : matrix.classifier_ids) out << '\t' << id;
  out << '\n';
  char buf[40];
  for (std::size_t i = 0; i < m; ++i) {
    out << matrix.classifier_ids[i];
    for (std::size_t j = 0; j < m; ++j) {
      std::snprintf(buf, sizeof(buf), "%.12g", matrix.at(i, j));
      out << '\t' << buf;
    }
    out << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

DistanceMatrix load_distances(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kParse, path + ": empty distance file");
  }
  auto header = split_tabs(line);
  if (header.size() < 3 || header[0] != "id") {
    throw Error(ErrorCode::kParse,
                path + ": expected header 'id\\t<classifier ids...>'");
  }

  DistanceMatrix matrix;
  matrix.classifier_ids.assign(header.begin() + 1, header.end());
  const std::size_t m = matrix.classifier_ids.size();
  matrix.values.assign(m * m, 0.0);

  std::size_t row = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (row >= m) {
      throw Error(ErrorCode::kParse, path + ": more rows than classifiers");
    }
    auto fields = split_tabs(line);
    if (fields.size() != m + 1) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected " << m + 1
          << " fields, got " << fields.size();
      throw Error(ErrorCode::kParse, msg.str());
    }
    if (fields[0] != matrix.classifier_ids[row]) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": row id '" << fields[0]
          << "' does not match column id '" << matrix.classifier_ids[row]
          << "'";
      throw Error(ErrorCode::kInvalidMatrix, msg.str());
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::string& text = fields[j + 1];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        std::ostringstream msg;
        msg << path << ":" << line_no << ": cannot parse distance '" << text
            << "'";
        throw Error(ErrorCode::kParse, msg.str());
      }
      if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream msg;
        msg << path << ": distance (" << matrix.classifier_ids[row] << ", "
            << matrix.classifier_ids[j] << ") = " << v
            << " is not a non-negative finite value";
        throw Error(ErrorCode::kInvalidMatrix, msg.str());
      }
      matrix.at(row, j) = v;
    }
    ++row;
  }
  if (row != m) {
    throw Error(ErrorCode::kParse, path + ": expected " + std::to_string(m) +
                                       " rows, got " + std::to_string(row));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (matrix.at(i, i) != 0.0) {
      std::ostringstream msg;
      msg << path << ": nonzero diagonal at (" << matrix.classifier_ids[i]
          << ", " << matrix.classifier_ids[i] << ")";
      throw Error(ErrorCode::kInvalidMatrix, msg.str());
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(matrix.at(i, j) - matrix.at(j, i)) > 1e-9) {
        std::ostringstream msg;
        msg << path << ": asymmetry beyond 1e-9 at ("
            << matrix.classifier_ids[i] << ", " << matrix.classifier_ids[j]
            << ")";
        throw Error(ErrorCode::kInvalidMatrix, msg.str());
      }
    }
  }
  return matrix;
}

}  // namespace adjviz
