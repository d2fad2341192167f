// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "dataset.hpp"

namespace textrec {

// Ordered bijection between characters and dense indices. Index 0 is the
// reserved blank and maps to no character; characters occupy [1, size()].
// The space character (U+0020) is excluded: it contributes nothing to the
// metric, so it is dropped at build time and again at encode time.
//
// Immutable after construction; safe to share across threads.
class Charset {
public:
  static constexpr int kBlank = 0;

  // Distinct non-space characters across all labels, ordered by first
  // occurrence in sample order. Throws "empty corpus" on an empty sample set.
  static Charset build(const std::vector<Sample>& samples);

  // File format: first line `#ctc-charset v1`, then one character per
  // line; the i-th character line holds the character with index i.
  static Charset load(const std::string& path);
  void save(const std::string& path) const;
  std::string serialize() const;

  int size() const { return static_cast<int>(chars_.size()); }

  // Vocabulary seen by the CTC head: characters plus the blank.
  int vocab_size() const { return size() + 1; }

  bool contains(char32_t cp) const { return index_.count(cp) != 0; }
  int index_of(char32_t cp) const;
  char32_t char_at(int index) const;

  // Spaces dropped; out-of-charset characters are an error listing every
  // offender with its codepoint position in the original label.
  std::vector<int> encode(const std::string& label) const;

  // Inverse of encode on space-free labels. Rejects the blank index.
  std::string decode_indices(const std::vector<int>& indices) const;

  const std::vector<char32_t>& chars() const { return chars_; }

private:
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, int> index_;

  void add_char(char32_t cp);
};

} // namespace textrec
