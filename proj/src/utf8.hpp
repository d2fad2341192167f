// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace textrec {

// Minimal UTF-8 <-> codepoint conversion. Labels are taken verbatim; no
// normalization of equivalence classes.
inline std::vector<char32_t> utf8_decode(const std::string& s) {
  std::vector<char32_t> out;
  size_t i = 0;
  while (i < s.size()) {
    uint8_t b = static_cast<uint8_t>(s[i]);
    char32_t cp = 0;
    int extra = 0;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xe0) == 0xc0) {
      cp = b & 0x1f;
      extra = 1;
    } else if ((b & 0xf0) == 0xe0) {
      cp = b & 0x0f;
      extra = 2;
    } else if ((b & 0xf8) == 0xf0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      fail_format("invalid UTF-8 at byte " + std::to_string(i));
    }
    if (i + extra >= s.size()) fail_format("truncated UTF-8 sequence");
    for (int k = 1; k <= extra; ++k) {
      uint8_t cb = static_cast<uint8_t>(s[i + k]);
      if ((cb & 0xc0) != 0x80) fail_format("invalid UTF-8 continuation");
      cp = (cp << 6) | (cb & 0x3f);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

inline void utf8_append(std::string& s, char32_t cp) {
  if (cp < 0x80) {
    s.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    s.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    s.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    s.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string s;
  for (char32_t cp : cps) utf8_append(s, cp);
  return s;
}

// Drops U+0020 only; the metric and the loss both ignore plain spaces.
inline std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s)
    if (ch != ' ') out.push_back(ch);
  return out;
}

} // namespace textrec
