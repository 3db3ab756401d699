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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fingergrover/bit_string.hpp"
#include "fingergrover/errors.hpp"
#include "fingergrover/vocabulary.hpp"
#include "oracles.hpp"

namespace fingergrover {
namespace {

BitString bits(const char* s) { return BitString::parse(s); }

std::vector<std::string> as_strings(const Vocabulary& v) {
  std::vector<std::string> out;
  for (const auto& w : v.windows()) out.push_back(w.to_string());
  return out;
}

TEST(BitStringTest, NumericValueExamples) {
  EXPECT_EQ(numeric_value(bits("101")), 5u);
  EXPECT_EQ(numeric_value(bits("000")), 0u);
  EXPECT_EQ(numeric_value(bits("1111")), 15u);
}

TEST(BitStringTest, NumericValueRejectsWideWords) {
  EXPECT_NO_THROW(numeric_value(BitString(std::vector<std::uint8_t>(62, 1))));
  try {
    numeric_value(BitString(std::vector<std::uint8_t>(63, 1)));
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("oracle-only width exceeded"), std::string::npos);
  }
}

TEST(BitStringTest, ParseRejectsNonBinary) {
  try {
    BitString::parse("0120");
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("invalid binary digit"), std::string::npos);
  }
  EXPECT_THROW(BitString(std::vector<std::uint8_t>{0, 2}), InvalidArgument);
}

TEST(BitStringTest, FromValueInvertsNumericValue) {
  for (std::size_t m = 1; m <= 16; ++m) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
      const BitString w = BitString::from_value(a, m);
      ASSERT_EQ(w.size(), m);
      ASSERT_EQ(numeric_value(w), a);
    }
  }
  EXPECT_THROW(BitString::from_value(8, 3), InvalidArgument);
}

TEST(BitStringTest, NumericValueMatchesPowerSum) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    std::string digits;
    const std::size_t len = 1 + gen() % 62;
    for (std::size_t k = 0; k < len; ++k) digits.push_back(gen() & 1 ? '1' : '0');
    ASSERT_EQ(numeric_value(BitString::parse(digits)), testing::value_of(digits)) << digits;
  }
}

TEST(BitStringTest, PackedBytesAreMsbFirst) {
  const std::uint8_t bytes[] = {0xA5, 0x01};
  EXPECT_EQ(BitString::from_packed_bytes(bytes).to_string(), "1010010100000001");
}

TEST(VocabularyTest, Examples) {
  const Vocabulary a = build_vocabulary(bits("0011"), 2);
  EXPECT_EQ(a.n(), 3u);
  EXPECT_EQ(as_strings(a), (std::vector<std::string>{"00", "01", "11"}));

  const Vocabulary b = build_vocabulary(bits("01"), 2);
  EXPECT_EQ(b.n(), 1u);
  EXPECT_EQ(as_strings(b), (std::vector<std::string>{"01"}));

  const Vocabulary c = build_vocabulary(bits("10101"), 3);
  EXPECT_EQ(c.n(), 3u);
  EXPECT_EQ(as_strings(c), (std::vector<std::string>{"101", "010", "101"}));
  EXPECT_EQ(c.m(), 3u);
  EXPECT_EQ(c.source_length(), 5u);
}

TEST(VocabularyTest, Errors) {
  try {
    build_vocabulary(bits("01"), 3);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("pattern longer than text"), std::string::npos);
  }
  EXPECT_THROW(build_vocabulary(bits("01"), 0), InvalidArgument);
}

TEST(VocabularyTest, WindowsReconstructText) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t length = 1 + gen() % 100;
    const std::size_t m = 1 + gen() % length;
    std::string digits;
    for (std::size_t k = 0; k < length; ++k) digits.push_back(gen() & 1 ? '1' : '0');
    const Vocabulary v = build_vocabulary(BitString::parse(digits), m);
    ASSERT_EQ(v.n(), length - m + 1);
    std::string rebuilt;
    for (const auto& w : v.windows()) rebuilt.push_back(static_cast<char>('0' + w[0]));
    rebuilt += v.windows().back().to_string().substr(1);
    ASSERT_EQ(rebuilt, digits);
  }
}

TEST(ClassicalSearchTest, Examples) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(find_occurrences_classical(bits("0011"), bits("01")), V{1});
  EXPECT_EQ(find_occurrences_classical(bits("10101"), bits("101")), (V{0, 2}));
  EXPECT_EQ(find_occurrences_classical(bits("0000"), bits("11")), V{});
  EXPECT_EQ(find_occurrences_naive(bits("10101"), bits("101")), (V{0, 2}));
}

TEST(ClassicalSearchTest, KmpAgreesWithNaiveAndSubstr) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t length = 1 + gen() % 200;
    const std::size_t m = 1 + gen() % std::min<std::size_t>(20, length);
    std::string text, pattern;
    for (std::size_t k = 0; k < length; ++k) text.push_back(gen() & 1 ? '1' : '0');
    // Half the patterns are copied from the text so matches are common.
    if (gen() & 1) {
      pattern = text.substr(gen() % (length - m + 1), m);
    } else {
      for (std::size_t k = 0; k < m; ++k) pattern.push_back(gen() & 1 ? '1' : '0');
    }
    const auto t = BitString::parse(text);
    const auto p = BitString::parse(pattern);
    const auto kmp = find_occurrences_kmp(t, p);
    ASSERT_EQ(kmp, find_occurrences_naive(t, p));
    ASSERT_EQ(kmp, testing::occurrences_by_substr(text, pattern));
  }
}

TEST(BitFileTest, AsciiWithOptionalNewline) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "fingergrover_core_test.txt";
  for (const char* contents : {"0011", "0011\n", "0011\r\n"}) {
    std::ofstream(path, std::ios::binary) << contents;
    EXPECT_EQ(read_bit_file(path).to_string(), "0011");
  }
  std::ofstream(path, std::ios::binary) << "00 11\n";
  EXPECT_THROW(read_bit_file(path), InvalidArgument);
  std::ofstream(path, std::ios::binary) << "\xF0";
  EXPECT_EQ(read_bit_file(path, BitFileFormat::kPackedBytes).to_string(), "11110000");
  std::filesystem::remove(path);
  EXPECT_THROW(read_bit_file(dir / "fingergrover_missing_file"), InvalidArgument);
}

}  // namespace
}  // namespace fingergrover
