// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace textrec {

// Tiny standalone SVG emitters for the corpus reports and the augmentation
// contact sheet. No external tooling needed to look at the figures.

std::string svg_bar_chart(const std::string& title,
                          const std::vector<std::pair<std::string, double>>& bars);

std::string svg_scatter(const std::string& title, const std::string& x_label,
                        const std::string& y_label,
                        const std::vector<std::pair<double, double>>& points);

// Lays out pre-rendered image tiles (as data-URI PNGs or embedded PPM->PNG
// is overkill; tiles are referenced by relative filename).
std::string svg_contact_sheet(const std::string& title,
                              const std::vector<std::string>& image_files,
                              int tile_w, int tile_h, int columns);

} // namespace textrec
