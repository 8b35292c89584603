// src/core/svg_plot.hpp

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

#ifndef ADJVIZ_CORE_SVG_PLOT_HPP_
#define ADJVIZ_CORE_SVG_PLOT_HPP_

#include <string>

#include "core/mds.hpp"
#include "core/types.hpp"

namespace adjviz {

// Figure conventions for the scatter plot: circles mark classifiers,
// diamonds mark highlighted ones, colors encode one metadata attribute.
struct PlotSpec {
  std::string color_by;       // metadata column for marker color; empty: off
  std::string highlight_key;  // truthy metadata column for diamond markers
  std::string annotate_key;   // metadata column printed next to each marker
  int width = 640;
  int height = 480;
};

// Standalone SVG scatter with equal-aspect axes and, when coloring is
// active, a legend of attribute values in first-appearance order.  metadata
// may be null: neutral markers, no legend.  Output is deterministic.
std::string render_svg(const Embedding& embedding,
                       const ClassifierMetadata* metadata,
                       const PlotSpec& spec);

void save_svg(const Embedding& embedding, const ClassifierMetadata* metadata,
              const PlotSpec& spec, const std::string& path);

}  // namespace adjviz

#endif  // ADJVIZ_CORE_SVG_PLOT_HPP_
