// SPDX-License-Identifier: Apache-2.0
#include "charset.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "utf8.hpp"

namespace textrec {

namespace {
constexpr char kHeader[] = "#ctc-charset v1";
constexpr char32_t kSpace = 0x20;
} // namespace

void Charset::add_char(char32_t cp) {
  if (cp == kSpace || index_.count(cp)) return;
  chars_.push_back(cp);
  index_[cp] = static_cast<int>(chars_.size()); // 1-based, blank holds 0
}

Charset Charset::build(const std::vector<Sample>& samples) {
  if (samples.empty()) fail_invalid("empty corpus");
  Charset cs;
  for (const auto& s : samples)
    for (char32_t cp : utf8_decode(s.label)) cs.add_char(cp);
  return cs;
}

int Charset::index_of(char32_t cp) const {
  auto it = index_.find(cp);
  if (it == index_.end()) {
    std::string ch;
    utf8_append(ch, cp);
    fail_invalid("character '" + ch + "' not in charset");
  }
  return it->second;
}

char32_t Charset::char_at(int index) const {
  if (index < 1 || index > size())
    fail_invalid("index out of charset: " + std::to_string(index));
  return chars_[static_cast<size_t>(index) - 1];
}

std::vector<int> Charset::encode(const std::string& label) const {
  std::vector<char32_t> cps = utf8_decode(label);
  std::vector<int> out;
  out.reserve(cps.size());
  std::string bad;
  for (size_t pos = 0; pos < cps.size(); ++pos) {
    char32_t cp = cps[pos];
    if (cp == kSpace) continue;
    auto it = index_.find(cp);
    if (it == index_.end()) {
      if (!bad.empty()) bad += ", ";
      std::string ch;
      utf8_append(ch, cp);
      bad += "'" + ch + "' at position " + std::to_string(pos);
    } else {
      out.push_back(it->second);
    }
  }
  if (!bad.empty()) fail_invalid("characters not in charset: " + bad);
  return out;
}

std::string Charset::decode_indices(const std::vector<int>& indices) const {
  std::string out;
  for (int idx : indices) {
    if (idx == kBlank) fail_invalid("index out of charset: 0 (blank)");
    utf8_append(out, char_at(idx));
  }
  return out;
}

std::string Charset::serialize() const {
  std::string out = kHeader;
  out += '\n';
  for (char32_t cp : chars_) {
    utf8_append(out, cp);
    out += '\n';
  }
  return out;
}

void Charset::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail_io("cannot write " + path);
  out << serialize();
  if (!out) fail_io("short write to " + path);
}

Charset Charset::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_io("cannot open charset file " + path);
  std::string line;
  if (!std::getline(in, line)) fail_format(path + ": empty charset file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    fail_format(path + ": bad header (expected '" + std::string(kHeader) + "')");
  Charset cs;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto cps = utf8_decode(line);
    if (cps.size() != 1)
      fail_format(path + ":" + std::to_string(lineno) +
                  ": expected exactly one character per line");
    if (cps[0] == kSpace)
      fail_format(path + ":" + std::to_string(lineno) + ": space is not allowed");
    if (cs.index_.count(cps[0]))
      fail_format(path + ":" + std::to_string(lineno) + ": duplicate character");
    cs.add_char(cps[0]);
  }
  return cs;
}

} // namespace textrec
