// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace textrec {

// One annotated line image: path (as written in the annotation file,
// resolved against the annotation file's directory) plus its UTF-8 label.
struct Sample {
  std::string image_path;
  std::string label;
};

// Annotation file: UTF-8 TSV, one `relative/image/path<TAB>label` per line.
// Scan order (line order) is preserved; it defines charset ordering.
std::vector<Sample> load_annotations(const std::string& path);

void save_annotations(const std::vector<Sample>& samples, const std::string& path);

} // namespace textrec
