// SPDX-License-Identifier: Apache-2.0
#include "datastats.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "error.hpp"
#include "imaging.hpp"
#include "rng.hpp"
#include "svg.hpp"
#include "utf8.hpp"

namespace textrec {

using nlohmann::json;

std::pair<std::vector<Sample>, std::vector<Sample>>
split_train_val(const std::vector<Sample>& samples, double ratio, uint64_t seed) {
  if (samples.size() < 2) fail_invalid("need at least 2 samples to split");
  if (!(ratio > 0.0 && ratio < 1.0)) fail_invalid("split ratio must be in (0, 1)");

  std::vector<size_t> order(samples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  for (size_t i = order.size() - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(i)));
    std::swap(order[i], order[j]);
  }

  size_t n_train = static_cast<size_t>(
      std::llround(ratio * static_cast<double>(samples.size())));
  n_train = std::min(std::max<size_t>(n_train, 1), samples.size() - 1);

  std::pair<std::vector<Sample>, std::vector<Sample>> out;
  out.first.reserve(n_train);
  out.second.reserve(samples.size() - n_train);
  for (size_t i = 0; i < order.size(); ++i)
    (i < n_train ? out.first : out.second).push_back(samples[order[i]]);
  return out;
}

namespace {

std::unordered_map<char32_t, int64_t> char_counts(const std::vector<Sample>& samples) {
  std::unordered_map<char32_t, int64_t> counts;
  for (const auto& s : samples)
    for (char32_t cp : utf8_decode(s.label))
      if (cp != 0x20) ++counts[cp];
  return counts;
}

} // namespace

FrequencyBuckets char_frequency_report(const std::vector<Sample>& samples) {
  if (samples.empty()) fail_invalid("empty corpus");
  FrequencyBuckets b;
  for (const auto& [cp, count] : char_counts(samples)) {
    (void)cp;
    if (count == 1) ++b.once;
    else if (count <= 10) ++b.upto_10;
    else if (count <= 100) ++b.upto_100;
    else if (count <= 1000) ++b.upto_1000;
    else ++b.over_1000;
    ++b.total;
  }
  return b;
}

std::map<int, int64_t> length_histogram(const std::vector<Sample>& samples) {
  std::map<int, int64_t> hist;
  for (const auto& s : samples) {
    int len = static_cast<int>(utf8_decode(strip_spaces(s.label)).size());
    ++hist[len];
  }
  return hist;
}

GeometrySummary image_geometry_report(const std::vector<Sample>& samples) {
  GeometrySummary g;
  int64_t gt32 = 0, gt48 = 0, gt64 = 0;
  for (const auto& s : samples) {
    try {
      ImageBuffer img = load_image(s.image_path);
      g.sizes.emplace_back(img.width, img.height);
      if (img.height > 32) ++gt32;
      if (img.height > 48) ++gt48;
      if (img.height > 64) ++gt64;
    } catch (const Error&) {
      g.unreadable.push_back(s.image_path);
    }
  }
  if (!g.sizes.empty()) {
    double n = static_cast<double>(g.sizes.size());
    g.frac_height_gt_32 = gt32 / n;
    g.frac_height_gt_48 = gt48 / n;
    g.frac_height_gt_64 = gt64 / n;
  }
  return g;
}

CorpusReport corpus_report(const std::vector<Sample>& samples, bool scan_images) {
  if (samples.empty()) fail_invalid("empty corpus");
  CorpusReport r;
  r.n_samples = static_cast<int64_t>(samples.size());
  r.frequency = char_frequency_report(samples);
  r.distinct_chars = r.frequency.total;
  r.length_histogram = length_histogram(samples);
  for (const auto& [len, _] : r.length_histogram) r.max_length = std::max(r.max_length, len);
  if (scan_images) r.geometry = image_geometry_report(samples);
  return r;
}

std::string report_to_json(const CorpusReport& r) {
  json j;
  j["n_samples"] = r.n_samples;
  j["distinct_chars"] = r.distinct_chars;
  j["frequency"] = {
      {"1", r.frequency.once},        {"2-10", r.frequency.upto_10},
      {"11-100", r.frequency.upto_100}, {"101-1000", r.frequency.upto_1000},
      {"1001+", r.frequency.over_1000}, {"total", r.frequency.total},
  };
  json hist = json::object();
  for (const auto& [len, count] : r.length_histogram)
    hist[std::to_string(len)] = count;
  j["length_histogram"] = hist;
  j["max_length"] = r.max_length;
  json sizes = json::array();
  for (const auto& [w, h] : r.geometry.sizes) sizes.push_back({w, h});
  j["geometry"] = {
      {"sizes", sizes},
      {"unreadable", r.geometry.unreadable},
      {"frac_height_gt_32", r.geometry.frac_height_gt_32},
      {"frac_height_gt_48", r.geometry.frac_height_gt_48},
      {"frac_height_gt_64", r.geometry.frac_height_gt_64},
  };
  return j.dump(2) + "\n";
}

CorpusReport report_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_format("invalid report JSON");
  CorpusReport r;
  r.n_samples = j.at("n_samples").get<int64_t>();
  r.distinct_chars = j.at("distinct_chars").get<int64_t>();
  const auto& f = j.at("frequency");
  r.frequency.once = f.at("1").get<int64_t>();
  r.frequency.upto_10 = f.at("2-10").get<int64_t>();
  r.frequency.upto_100 = f.at("11-100").get<int64_t>();
  r.frequency.upto_1000 = f.at("101-1000").get<int64_t>();
  r.frequency.over_1000 = f.at("1001+").get<int64_t>();
  r.frequency.total = f.at("total").get<int64_t>();
  for (const auto& [k, v] : j.at("length_histogram").items())
    r.length_histogram[std::stoi(k)] = v.get<int64_t>();
  r.max_length = j.at("max_length").get<int>();
  const auto& g = j.at("geometry");
  for (const auto& s : g.at("sizes"))
    r.geometry.sizes.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
  r.geometry.unreadable = g.at("unreadable").get<std::vector<std::string>>();
  r.geometry.frac_height_gt_32 = g.at("frac_height_gt_32").get<double>();
  r.geometry.frac_height_gt_48 = g.at("frac_height_gt_48").get<double>();
  r.geometry.frac_height_gt_64 = g.at("frac_height_gt_64").get<double>();
  return r;
}

bool write_corpus_report(const CorpusReport& r, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto path = [&](const char* name) { return (fs::path(out_dir) / name).string(); };

  {
    std::ofstream out(path("report.json"), std::ios::binary | std::ios::trunc);
    if (!out) fail_io("cannot write report.json");
    out << report_to_json(r);
  }
  {
    std::ofstream out(path("report.csv"), std::ios::binary | std::ios::trunc);
    if (!out) fail_io("cannot write report.csv");
    out << "metric,value\n";
    out << "n_samples," << r.n_samples << "\n";
    out << "distinct_chars," << r.distinct_chars << "\n";
    out << "freq_1," << r.frequency.once << "\n";
    out << "freq_2_10," << r.frequency.upto_10 << "\n";
    out << "freq_11_100," << r.frequency.upto_100 << "\n";
    out << "freq_101_1000," << r.frequency.upto_1000 << "\n";
    out << "freq_1001_plus," << r.frequency.over_1000 << "\n";
    out << "max_length," << r.max_length << "\n";
    out << "frac_height_gt_32," << r.geometry.frac_height_gt_32 << "\n";
    out << "frac_height_gt_48," << r.geometry.frac_height_gt_48 << "\n";
    out << "frac_height_gt_64," << r.geometry.frac_height_gt_64 << "\n";
    out << "unreadable_images," << r.geometry.unreadable.size() << "\n";
  }

  std::vector<std::pair<std::string, double>> len_bars;
  for (const auto& [len, count] : r.length_histogram)
    len_bars.emplace_back(std::to_string(len), static_cast<double>(count));
  std::ofstream(path("text_length.svg"), std::ios::trunc)
      << svg_bar_chart("Text length distribution", len_bars);

  std::vector<std::pair<std::string, double>> freq_bars = {
      {"1001+", static_cast<double>(r.frequency.over_1000)},
      {"101-1000", static_cast<double>(r.frequency.upto_1000)},
      {"11-100", static_cast<double>(r.frequency.upto_100)},
      {"2-10", static_cast<double>(r.frequency.upto_10)},
      {"1", static_cast<double>(r.frequency.once)},
  };
  std::ofstream(path("char_frequency.svg"), std::ios::trunc)
      << svg_bar_chart("Character frequency buckets (distinct chars)", freq_bars);

  if (!r.geometry.sizes.empty()) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(r.geometry.sizes.size());
    for (const auto& [w, h] : r.geometry.sizes)
      pts.emplace_back(static_cast<double>(w), static_cast<double>(h));
    std::ofstream(path("image_scale.svg"), std::ios::trunc)
        << svg_scatter("Image scale distribution", "width", "height", pts);

    std::map<int, int64_t> hh;
    for (const auto& [w, h] : r.geometry.sizes) {
      (void)w;
      ++hh[h];
    }
    std::vector<std::pair<std::string, double>> hbars;
    for (const auto& [h, c] : hh)
      hbars.emplace_back(std::to_string(h), static_cast<double>(c));
    std::ofstream(path("image_height.svg"), std::ios::trunc)
        << svg_bar_chart("Image height distribution", hbars);
  }
  return r.geometry.unreadable.empty();
}

void export_label_audit_sample(const std::vector<Sample>& samples, int64_t n,
                               uint64_t seed, const std::string& audit_dir) {
  if (n < 0 || n > static_cast<int64_t>(samples.size()))
    fail_invalid("audit sample size " + std::to_string(n) + " exceeds corpus size " +
                 std::to_string(samples.size()));
  namespace fs = std::filesystem;
  fs::create_directories(audit_dir);

  std::vector<size_t> order(samples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  for (size_t i = order.size() - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(i)));
    std::swap(order[i], order[j]);
  }

  std::ofstream labels((fs::path(audit_dir) / "labels.tsv").string(),
                       std::ios::binary | std::ios::trunc);
  if (!labels) fail_io("cannot write labels.tsv");
  for (int64_t i = 0; i < n; ++i) {
    const Sample& s = samples[order[static_cast<size_t>(i)]];
    std::string ext = fs::path(s.image_path).extension().string();
    if (ext.empty()) ext = ".img";
    std::string name = "sample_" + std::to_string(i) + ext;
    std::error_code ec;
    fs::copy_file(s.image_path, fs::path(audit_dir) / name,
                  fs::copy_options::overwrite_existing, ec);
    labels << name << '\t' << s.label;
    if (ec) labels << "\t[copy failed: " << s.image_path << "]";
    labels << '\n';
  }
}

} // namespace textrec
