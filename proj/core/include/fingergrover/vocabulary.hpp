// Copyright 2026 The FingerGrover Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FINGERGROVER_VOCABULARY_HPP_
#define FINGERGROVER_VOCABULARY_HPP_

#include <cstddef>
#include <vector>

#include "fingergrover/bit_string.hpp"

namespace fingergrover {

// All length-m sliding windows of a text. windows()[k] is the slice that
// starts at 0-based offset k, so n = N - m + 1.
class Vocabulary {
 public:
  Vocabulary(BitString text, std::size_t m);

  std::size_t n() const { return windows_.size(); }
  std::size_t m() const { return m_; }
  std::size_t source_length() const { return text_.size(); }
  const BitString& text() const { return text_; }
  const std::vector<BitString>& windows() const { return windows_; }
  const BitString& operator[](std::size_t k) const { return windows_[k]; }

 private:
  BitString text_;
  std::size_t m_;
  std::vector<BitString> windows_;
};

// Raises InvalidArgument for m = 0 or m > text.size().
Vocabulary build_vocabulary(const BitString& text, std::size_t m);

// Ground-truth substring search. Both return every 0-based offset k with
// text[k, k+m) == pattern, ascending.
std::vector<std::size_t> find_occurrences_naive(const BitString& text,
                                                const BitString& pattern);
std::vector<std::size_t> find_occurrences_kmp(const BitString& text,
                                              const BitString& pattern);

// Linear-time classical search (KMP).
inline std::vector<std::size_t> find_occurrences_classical(
    const BitString& text, const BitString& pattern) {
  return find_occurrences_kmp(text, pattern);
}

}  // namespace fingergrover

#endif  // FINGERGROVER_VOCABULARY_HPP_
