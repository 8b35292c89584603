// src/core/svg_plot.cpp

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

#include "core/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace adjviz {

namespace {

constexpr const char* kNeutralColor = "#999999";
constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
constexpr double kMarkerRadius = 5.0;
constexpr double kLegendWidth = 130.0;

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string format2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Embedding& embedding,
                       const ClassifierMetadata* metadata,
                       const PlotSpec& spec) {
  if (embedding.dim != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "plot requires a 2D embedding, got dim " +
                    std::to_string(embedding.dim));
  }
  if (spec.width < 100 || spec.height < 100) {
    throw Error(ErrorCode::kInvalidArgument,
                "canvas must be at least 100x100 pixels");
  }
  const std::size_t m = embedding.size();

  // Color per classifier plus the legend entries, both in first-appearance
  // order of the color attribute's values.
  const bool coloring = metadata != nullptr && !spec.color_by.empty();
  std::vector<std::string> legend_values;
  std::vector<const char*> colors(m, kNeutralColor);
  if (coloring) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto* entry = metadata->find(embedding.classifier_ids[i]);
      const std::string* value =
          entry != nullptr ? entry->attr(spec.color_by) : nullptr;
      if (value == nullptr || value->empty()) continue;
      auto it = std::find(legend_values.begin(), legend_values.end(), *value);
      std::size_t index;
      if (it == legend_values.end()) {
        index = legend_values.size();
        legend_values.push_back(*value);
      } else {
        index = static_cast<std::size_t>(it - legend_values.begin());
      }
      colors[i] = kPalette[index % kPaletteSize];
    }
  }
  const bool legend = !legend_values.empty();

  const double margin = 20.0;
  const double plot_w =
      static_cast<double>(spec.width) - 2.0 * margin - (legend ? kLegendWidth : 0.0);
  const double plot_h = static_cast<double>(spec.height) - 2.0 * margin;

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = embedding.at(i, 0);
    const double y = embedding.at(i, 1);
    if (i == 0 || x < min_x) min_x = x;
    if (i == 0 || x > max_x) max_x = x;
    if (i == 0 || y < min_y) min_y = y;
    if (i == 0 || y > max_y) max_y = y;
  }
  const double range = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double pad = 0.05 * range;
  // One scale for both axes keeps the aspect ratio equal to the data's.
  const double scale =
      std::min(plot_w / (range + 2.0 * pad), plot_h / (range + 2.0 * pad));
  const double center_x = 0.5 * (min_x + max_x);
  const double center_y = 0.5 * (min_y + max_y);
  const double origin_x = margin + 0.5 * plot_w;
  const double origin_y = margin + 0.5 * plot_h;
  auto px = [&](double x) { return origin_x + (x - center_x) * scale; };
  auto py = [&](double y) { return origin_y - (y - center_y) * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << " " << spec.height << "\">\n";
  svg << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" fill=\"#ffffff\"/>\n";
  svg << "  <rect class=\"frame\" x=\"" << format2(margin) << "\" y=\""
      << format2(margin) << "\" width=\"" << format2(plot_w) << "\" height=\""
      << format2(plot_h) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  for (std::size_t i = 0; i < m; ++i) {
    const std::string& id = embedding.classifier_ids[i];
    const auto* entry = metadata != nullptr ? metadata->find(id) : nullptr;
    const bool highlighted = entry != nullptr && !spec.highlight_key.empty() &&
                             entry->flag(spec.highlight_key);
    const double cx = px(embedding.at(i, 0));
    const double cy = py(embedding.at(i, 1));
    const std::string title = "<title>" + xml_escape(id) + "</title>";
    if (highlighted) {
      const double r = kMarkerRadius + 1.5;
      svg << "  <path class=\"marker marker-highlight\" d=\"M "
          << format2(cx) << " " << format2(cy - r) << " L " << format2(cx + r)
          << " " << format2(cy) << " L " << format2(cx) << " "
          << format2(cy + r) << " L " << format2(cx - r) << " " << format2(cy)
          << " Z\" fill=\"" << colors[i]
          << "\" stroke=\"#333333\" stroke-width=\"1\">" << title
          << "</path>\n";
    } else {
      svg << "  <circle class=\"marker\" cx=\"" << format2(cx) << "\" cy=\""
          << format2(cy) << "\" r=\"" << format2(kMarkerRadius) << "\" fill=\""
          << colors[i] << "\" stroke=\"#333333\" stroke-width=\"0.5\">" << title
          << "</circle>\n";
    }
    if (entry != nullptr && !spec.annotate_key.empty()) {
      const std::string* note = entry->attr(spec.annotate_key);
      if (note != nullptr && !note->empty()) {
        svg << "  <text class=\"annotation\" x=\""
            << format2(cx + kMarkerRadius + 3.0) << "\" y=\""
            << format2(cy + 3.5) << "\" font-family=\"sans-serif\" "
            << "font-size=\"10\" fill=\"#333333\">" << xml_escape(*note)
            << "</text>\n";
      }
    }
  }

  if (legend) {
    const double lx = static_cast<double>(spec.width) - kLegendWidth;
    double ly = margin + 8.0;
    svg << "  <text class=\"legend-title\" x=\"" << format2(lx) << "\" y=\""
        << format2(ly) << "\" font-family=\"sans-serif\" font-size=\"11\" "
        << "font-weight=\"bold\" fill=\"#333333\">"
        << xml_escape(spec.color_by) << "</text>\n";
    ly += 8.0;
    for (std::size_t v = 0; v < legend_values.size(); ++v) {
      svg << "  <rect class=\"swatch\" x=\"" << format2(lx) << "\" y=\""
          << format2(ly) << "\" width=\"12\" height=\"12\" fill=\""
          << kPalette[v % kPaletteSize] << "\"/>\n";
      svg << "  <text class=\"legend-label\" x=\"" << format2(lx + 17.0)
          << "\" y=\"" << format2(ly + 10.0)
          << "\" font-family=\"sans-serif\" font-size=\"11\" "
          << "fill=\"#333333\">" << xml_escape(legend_values[v])
          << "</text>\n";
      ly += 18.0;
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

void save_svg(const Embedding& embedding, const ClassifierMetadata* metadata,
              const PlotSpec& spec, const std::string& path) {
  const std::string content = render_svg(embedding, metadata, spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
  }
}

}  // namespace adjviz
