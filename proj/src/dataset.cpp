// SPDX-License-Identifier: Apache-2.0
#include "dataset.hpp"

#include <filesystem>
#include <fstream>

#include "error.hpp"

namespace textrec {

std::vector<Sample> load_annotations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_io("cannot open annotation file " + path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();

  std::vector<Sample> samples;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      fail_format(path + ":" + std::to_string(lineno) + ": missing tab separator");
    Sample s;
    s.image_path = (base / line.substr(0, tab)).string();
    s.label = line.substr(tab + 1);
    samples.push_back(std::move(s));
  }
  return samples;
}

void save_annotations(const std::vector<Sample>& samples, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail_io("cannot write " + path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  for (const auto& s : samples) {
    // Store paths relative to the annotation file when possible.
    std::error_code ec;
    auto rel = std::filesystem::relative(s.image_path, base, ec);
    std::string p = (ec || rel.empty()) ? s.image_path : rel.string();
    out << p << '\t' << s.label << '\n';
  }
  if (!out) fail_io("short write to " + path);
}

} // namespace textrec
