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

#include "fingergrover/vocabulary.hpp"

#include <algorithm>

#include "fingergrover/errors.hpp"

namespace fingergrover {
namespace {

void check_window(std::size_t text_length, std::size_t m) {
  if (m == 0) throw InvalidArgument("window length must be at least 1");
  if (m > text_length) throw InvalidArgument("pattern longer than text");
}

}  // namespace

Vocabulary::Vocabulary(BitString text, std::size_t m)
    : text_(std::move(text)), m_(m) {
  check_window(text_.size(), m_);
  const std::size_t n = text_.size() - m_ + 1;
  windows_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) windows_.push_back(text_.slice(k, m_));
}

Vocabulary build_vocabulary(const BitString& text, std::size_t m) {
  return Vocabulary(text, m);
}

std::vector<std::size_t> find_occurrences_naive(const BitString& text,
                                                const BitString& pattern) {
  check_window(text.size(), pattern.size());
  const auto t = text.bits();
  const auto p = pattern.bits();
  std::vector<std::size_t> hits;
  for (std::size_t k = 0; k + p.size() <= t.size(); ++k) {
    if (std::equal(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(k))) {
      hits.push_back(k);
    }
  }
  return hits;
}

std::vector<std::size_t> find_occurrences_kmp(const BitString& text,
                                              const BitString& pattern) {
  check_window(text.size(), pattern.size());
  const auto t = text.bits();
  const auto p = pattern.bits();
  const std::size_t m = p.size();

  // failure[i]: length of the longest proper border of p[0..i].
  std::vector<std::size_t> failure(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && p[i] != p[k]) k = failure[k - 1];
    if (p[i] == p[k]) ++k;
    failure[i] = k;
  }

  std::vector<std::size_t> hits;
  for (std::size_t i = 0, q = 0; i < t.size(); ++i) {
    while (q > 0 && t[i] != p[q]) q = failure[q - 1];
    if (t[i] == p[q]) ++q;
    if (q == m) {
      hits.push_back(i + 1 - m);
      q = failure[q - 1];
    }
  }
  return hits;
}

}  // namespace fingergrover
