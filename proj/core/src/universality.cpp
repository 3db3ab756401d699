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

#include "fingergrover/universality.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <nlohmann/json.hpp>

#include "fingergrover/errors.hpp"
#include "fingergrover/random.hpp"

namespace fingergrover {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// C(n, k), saturating.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Track as long double to detect overflow before the exact product.
  long double approx = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) {
    approx = approx * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  if (approx > 1.8e19L) return kSaturated;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

using Bitset = std::vector<std::uint64_t>;

class CollisionTable {
 public:
  CollisionTable(const HashFamily& family, std::size_t m)
      : d_(family.size()), words_(std::size_t{1} << m), blocks_((d_ + 63) / 64) {
    images_.resize(d_ * words_);
    for (std::size_t j = 0; j < d_; ++j) {
      for (std::size_t x = 0; x < words_; ++x) {
        images_[j * words_ + x] = family.evaluate(j, BitString::from_value(x, m)).value();
      }
    }
  }

  std::size_t words() const { return words_; }
  std::size_t blocks() const { return blocks_; }

  // Members j with f_j(v) == f_j(w).
  Bitset collisions(std::size_t v, std::size_t w) const {
    Bitset out(blocks_, 0);
    for (std::size_t j = 0; j < d_; ++j) {
      if (images_[j * words_ + v] == images_[j * words_ + w]) {
        out[j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
    return out;
  }

 private:
  std::size_t d_;
  std::size_t words_;
  std::size_t blocks_;
  std::vector<std::uint64_t> images_;
};

std::size_t union_count(const std::vector<Bitset>& per_word,
                        const std::vector<std::size_t>& subset,
                        std::size_t blocks) {
  std::size_t count = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t acc = 0;
    for (std::size_t v : subset) acc |= per_word[v][b];
    count += static_cast<std::size_t>(std::popcount(acc));
  }
  return count;
}

// Advances an ascending k-combination of {0..limit-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& combo, std::size_t limit) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < limit - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UniversalityReport verify_strong_universality(const HashFamily& family,
                                              std::size_t n, double eps,
                                              std::size_t m,
                                              const UniversalityOptions& options) {
  if (m == 0 || m > 20) throw InvalidArgument("universality check needs 1 <= m <= 20");
  if (n == 0) throw InvalidArgument("subset size must be at least 1");

  UniversalityReport report;
  report.subset_size = n;
  report.word_length = m;
  report.eps = eps;

  const CollisionTable table(family, m);
  const std::size_t words = table.words();
  const double d = static_cast<double>(family.size());
  report.cases_total = saturating_mul(words, binomial(words - 1, n));
  if (n > words - 1) {
    // No n-subset avoids w; the condition holds vacuously.
    report.exhaustive = true;
    report.coverage = 1.0;
    return report;
  }
  report.exhaustive = report.cases_total <= options.exhaustive_budget;

  std::size_t best_count = 0;
  std::vector<std::size_t> best_set;
  std::size_t best_word = 0;
  bool have_best = false;

  auto improve = [&](std::size_t w, std::vector<std::size_t> subset,
                     std::size_t count) {
    best_count = count;
    best_set = std::move(subset);
    best_word = w;
    have_best = true;
  };

  if (report.exhaustive) {
    for (std::size_t w = 0; w < words; ++w) {
      // others[i] enumerates {0..words-1} \ {w}.
      std::vector<std::size_t> others;
      others.reserve(words - 1);
      for (std::size_t v = 0; v < words; ++v) {
        if (v == w) continue;
        others.push_back(v);
      }
      std::vector<Bitset> rows;
      rows.reserve(others.size());
      for (std::size_t v : others) rows.push_back(table.collisions(v, w));

      std::vector<std::size_t> combo(n);
      for (std::size_t i = 0; i < n; ++i) combo[i] = i;
      do {
        const std::size_t count = union_count(rows, combo, table.blocks());
        ++report.cases_tested;
        if (!have_best || count > best_count) {
          std::vector<std::size_t> as_words;
          for (std::size_t i : combo) as_words.push_back(others[i]);
          improve(w, std::move(as_words), count);
        }
      } while (next_combination(combo, others.size()));
    }
  } else {
    Rng rng(mix64(options.seed));
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      const std::size_t w = rng.below(words);
      std::vector<std::size_t> subset;
      while (subset.size() < n) {
        const std::size_t v = rng.below(words);
        if (v == w || std::find(subset.begin(), subset.end(), v) != subset.end()) continue;
        subset.push_back(v);
      }
      std::sort(subset.begin(), subset.end());
      std::vector<Bitset> rows;
      std::vector<std::size_t> idx;
      for (std::size_t v : subset) {
        idx.push_back(rows.size());
        rows.push_back(table.collisions(v, w));
      }
      const std::size_t count = union_count(rows, idx, table.blocks());
      ++report.cases_tested;
      if (!have_best || count > best_count) improve(w, subset, count);
    }
  }

  report.max_ratio = have_best ? static_cast<double>(best_count) / d : 0.0;
  report.coverage =
      report.cases_total == 0
          ? 1.0
          : static_cast<double>(report.cases_tested) /
                static_cast<double>(report.cases_total);
  report.violated = report.max_ratio > eps;
  if (report.violated) {
    UniversalityWitness witness;
    for (std::size_t v : best_set) witness.set.push_back(BitString::from_value(v, m));
    witness.word = BitString::from_value(best_word, m);
    witness.ratio = report.max_ratio;
    report.witness = std::move(witness);
  }
  return report;
}

std::string to_json(const UniversalityReport& report, bool pretty) {
  nlohmann::ordered_json j;
  j["subset_size"] = report.subset_size;
  j["word_length"] = report.word_length;
  j["eps"] = report.eps;
  j["max_ratio"] = report.max_ratio;
  j["exhaustive"] = report.exhaustive;
  j["cases_tested"] = report.cases_tested;
  j["cases_total"] = report.cases_total;
  j["coverage"] = report.coverage;
  j["violated"] = report.violated;
  if (report.witness) {
    nlohmann::ordered_json set = nlohmann::ordered_json::array();
    for (const auto& v : report.witness->set) set.push_back(v.to_string());
    j["witness"] = {{"set", set},
                    {"word", report.witness->word.to_string()},
                    {"ratio", report.witness->ratio}};
  }
  return j.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace fingergrover
