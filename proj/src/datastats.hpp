// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dataset.hpp"

namespace textrec {

// Character occurrence counts bucketed by frequency. Boundaries are
// 1 / 2-10 / 11-100 / 101-1000 / 1001+, the singleton bucket kept separate.
struct FrequencyBuckets {
  int64_t once = 0;
  int64_t upto_10 = 0;    // 2..10
  int64_t upto_100 = 0;   // 11..100
  int64_t upto_1000 = 0;  // 101..1000
  int64_t over_1000 = 0;  // 1001+
  int64_t total = 0;      // distinct characters

  int64_t sum() const { return once + upto_10 + upto_100 + upto_1000 + over_1000; }
};

struct GeometrySummary {
  std::vector<std::pair<int, int>> sizes;      // (width, height) per readable image
  std::vector<std::string> unreadable;          // paths excluded from stats
  double frac_height_gt_32 = 0;
  double frac_height_gt_48 = 0;
  double frac_height_gt_64 = 0;
};

struct CorpusReport {
  int64_t n_samples = 0;
  int64_t distinct_chars = 0;
  FrequencyBuckets frequency;
  std::map<int, int64_t> length_histogram; // space-stripped length -> count
  int max_length = 0;
  GeometrySummary geometry;
};

// Deterministic seeded shuffle, |train| = round(ratio * N), disjoint and
// exhaustive. Throws if N < 2 or the ratio is outside (0, 1).
std::pair<std::vector<Sample>, std::vector<Sample>>
split_train_val(const std::vector<Sample>& samples, double ratio, uint64_t seed);

FrequencyBuckets char_frequency_report(const std::vector<Sample>& samples);

// Lengths computed after space stripping.
std::map<int, int64_t> length_histogram(const std::vector<Sample>& samples);

// Reads every image; unreadable files are reported, never fatal.
GeometrySummary image_geometry_report(const std::vector<Sample>& samples);

CorpusReport corpus_report(const std::vector<Sample>& samples, bool scan_images);

// report.json / report.csv / figure SVGs into out_dir. Returns true when
// every image was readable.
bool write_corpus_report(const CorpusReport& report, const std::string& out_dir);

std::string report_to_json(const CorpusReport& report);
CorpusReport report_from_json(const std::string& json_text);

// Copies n seeded-random samples plus a labels.tsv into audit_dir for
// manual inspection. Throws when n exceeds the corpus size.
void export_label_audit_sample(const std::vector<Sample>& samples, int64_t n,
                               uint64_t seed, const std::string& audit_dir);

} // namespace textrec
