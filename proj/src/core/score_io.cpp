// src/core/score_io.cpp

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

#include "core/score_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"

namespace adjviz {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  return out;
}

// Strips a trailing '\r' so CRLF files parse like LF files.
void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#';
}

double parse_score(const std::string& text, const std::string& path,
                   std::size_t line_no) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": cannot parse score '" << text << "'";
    throw Error(ErrorCode::kParse, msg.str());
  }
  return value;
}

// Splits "key<TAB>value"; anything else is a parse error.
std::pair<std::string, std::string> split_record(const std::string& line,
                                                 const std::string& path,
                                                 std::size_t line_no) {
  auto tab = line.find('\t');
  if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
    std::ostringstream msg;
    msg << path << ":" << line_no
        << ": expected two fields separated by a single TAB";
    throw Error(ErrorCode::kParse, msg.str());
  }
  std::string key = line.substr(0, tab);
  std::string value = line.substr(tab + 1);
  if (key.empty() || value.empty()) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": empty field";
    throw Error(ErrorCode::kParse, msg.str());
  }
  return {std::move(key), std::move(value)};
}

std::string shortest_decimal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

void ScoreMatrix::validate() const {
  if (classifier_ids.size() != columns.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "classifier id / column count mismatch");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : classifier_ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kDuplicateClassifier,
                  "duplicate classifier id '" + id + "'");
    }
  }
  seen.clear();
  for (const auto& id : trial_ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kDuplicateTrial, "duplicate trial id '" + id + "'");
    }
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != trial_ids.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "column '" + classifier_ids[j] + "' has wrong length");
    }
    for (double v : columns[j]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFiniteScore,
                    "non-finite score in column '" + classifier_ids[j] + "'");
      }
    }
  }
}

ScoreMatrix load_scores(const std::vector<std::string>& paths,
                        const std::vector<std::string>& ids) {
  if (paths.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no score files given");
  }
  if (!ids.empty() && ids.size() != paths.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "classifier id override count does not match path count");
  }

  ScoreMatrix matrix;
  std::unordered_set<std::string> id_set;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    std::string id = ids.empty()
                         ? std::filesystem::path(paths[k]).stem().string()
                         : ids[k];
    if (!id_set.insert(id).second) {
      throw Error(ErrorCode::kDuplicateClassifier,
                  "duplicate classifier id '" + id + "' (from '" + paths[k] +
                      "')");
    }
    matrix.classifier_ids.push_back(std::move(id));
  }

  std::vector<std::unordered_map<std::string, double>> per_file(paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    auto in = open_input(paths[k]);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      chomp(line);
      if (skippable(line)) continue;
      auto [trial, score_text] = split_record(line, paths[k], line_no);
      double score = parse_score(score_text, paths[k], line_no);
      if (!std::isfinite(score)) {
        std::ostringstream msg;
        msg << paths[k] << ":" << line_no << ": non-finite score for trial '"
            << trial << "' of classifier '" << matrix.classifier_ids[k] << "'";
        throw Error(ErrorCode::kNonFiniteScore, msg.str());
      }
      if (!per_file[k].emplace(trial, score).second) {
        std::ostringstream msg;
        msg << paths[k] << ":" << line_no << ": duplicate trial '" << trial
            << "' in classifier '" << matrix.classifier_ids[k] << "'";
        throw Error(ErrorCode::kDuplicateTrial, msg.str());
      }
    }
    if (per_file[k].empty()) {
      throw Error(ErrorCode::kEmptyInput, "'" + paths[k] + "' has no records");
    }
  }

  // Strict alignment: every file must cover exactly the first file's trials.
  std::vector<std::string> trials;
  trials.reserve(per_file[0].size());
  for (const auto& [trial, _] : per_file[0]) trials.push_back(trial);
  std::sort(trials.begin(), trials.end());

  for (std::size_t k = 1; k < per_file.size(); ++k) {
    for (const auto& trial : trials) {
      if (!per_file[k].count(trial)) {
        throw Error(ErrorCode::kMissingTrial,
                    "trial '" + trial + "' present in classifier '" +
                        matrix.classifier_ids[0] + "' but missing from '" +
                        matrix.classifier_ids[k] + "'");
      }
    }
    if (per_file[k].size() != trials.size()) {
      // Same size + superset would have matched; find an extra trial to name.
      std::vector<std::string> extra;
      std::unordered_set<std::string> base(trials.begin(), trials.end());
      for (const auto& [trial, _] : per_file[k]) {
        if (!base.count(trial)) extra.push_back(trial);
      }
      std::sort(extra.begin(), extra.end());
      throw Error(ErrorCode::kMissingTrial,
                  "trial '" + extra.front() + "' present in classifier '" +
                      matrix.classifier_ids[k] + "' but missing from '" +
                      matrix.classifier_ids[0] + "'");
    }
  }

  matrix.trial_ids = trials;
  matrix.columns.resize(paths.size());
  for (std::size_t k = 0; k < per_file.size(); ++k) {
    matrix.columns[k].reserve(trials.size());
    for (const auto& trial : trials) {
      matrix.columns[k].push_back(per_file[k].at(trial));
    }
  }
  return matrix;
}

std::vector<std::string> save_scores(const ScoreMatrix& matrix,
                                     const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t j = 0; j < matrix.num_classifiers(); ++j) {
    std::filesystem::path path =
        std::filesystem::path(dir) / (matrix.classifier_ids[j] + ".tsv");
    auto out = open_output(path.string());
    for (std::size_t i = 0; i < matrix.num_trials(); ++i) {
      out << matrix.trial_ids[i] << '\t'
          << shortest_decimal(matrix.columns[j][i]) << '\n';
    }
    if (!out) {
      throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
    }
    paths.push_back(path.string());
  }
  return paths;
}

ScoreMatrix group_reduce(const ScoreMatrix& matrix, const GroupMap& groups) {
  // std::map keeps the lexicographic group order required of the output.
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < matrix.num_trials(); ++i) {
    const std::string* group = groups.find(matrix.trial_ids[i]);
    if (group == nullptr) {
      throw Error(ErrorCode::kUnmappedTrial,
                  "trial '" + matrix.trial_ids[i] + "' has no group");
    }
    members[*group].push_back(i);
  }

  ScoreMatrix reduced;
  reduced.classifier_ids = matrix.classifier_ids;
  reduced.trial_ids.reserve(members.size());
  for (const auto& [group, _] : members) reduced.trial_ids.push_back(group);

  reduced.columns.assign(matrix.num_classifiers(), {});
  for (std::size_t j = 0; j < matrix.num_classifiers(); ++j) {
    const auto& column = matrix.columns[j];
    auto& out = reduced.columns[j];
    out.reserve(members.size());
    for (const auto& [_, rows] : members) {
      double sum = 0.0;
      for (std::size_t i : rows) sum += column[i];
      out.push_back(sum / static_cast<double>(rows.size()));
    }
  }
  return reduced;
}

namespace {

// Shared two-column reader for labels and groups.
std::unordered_map<std::string, std::string> load_pairs(
    const std::string& path) {
  auto in = open_input(path);
  std::unordered_map<std::string, std::string> result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (skippable(line)) continue;
    auto [key, value] = split_record(line, path, line_no);
    if (!result.emplace(key, value).second) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": duplicate key '" << key << "'";
      throw Error(ErrorCode::kDuplicateKey, msg.str());
    }
  }
  return result;
}

}  // namespace

LabelMap load_labels(const std::string& path) {
  return LabelMap{load_pairs(path)};
}

GroupMap load_groups(const std::string& path) {
  return GroupMap{load_pairs(path)};
}

void save_groups(const GroupMap& groups, const std::string& path) {
  std::vector<std::pair<std::string, std::string>> rows(groups.groups.begin(),
                                                        groups.groups.end());
  std::sort(rows.begin(), rows.end());
  auto out = open_output(path);
  for (const auto& [trial, group] : rows) {
    out << trial << '\t' << group << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

ClassifierMetadata load_metadata(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  std::size_t line_no = 0;

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (skippable(line)) continue;
    header = split_csv(line);
    break;
  }
  if (header.empty() || header[0] != "id") {
    throw Error(ErrorCode::kParse,
                path + ": metadata header must start with 'id'");
  }

  ClassifierMetadata meta;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (skippable(line)) continue;
    auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected " << header.size()
          << " fields, got " << fields.size();
      throw Error(ErrorCode::kParse, msg.str());
    }
    const std::string& id = fields[0];
    if (meta.has(id)) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": duplicate classifier id '" << id
          << "'";
      throw Error(ErrorCode::kDuplicateKey, msg.str());
    }
    ClassifierMetadata::Entry entry;
    for (std::size_t c = 1; c < header.size(); ++c) {
      entry.attrs[header[c]] = fields[c];
    }
    meta.ids.push_back(id);
    meta.entries.emplace(id, std::move(entry));
  }
  return meta;
}

}  // namespace adjviz
