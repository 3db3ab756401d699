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

#ifndef FINGERGROVER_BIT_STRING_HPP_
#define FINGERGROVER_BIT_STRING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fingergrover {

// Binary word b_0 ... b_{len-1}. Bit 0 is the most significant when the word
// is read as a number.
class BitString {
 public:
  BitString() = default;

  // Every element must be 0 or 1.
  explicit BitString(std::vector<std::uint8_t> bits);

  // Parses ASCII '0'/'1'. Any other character raises InvalidArgument.
  static BitString parse(std::string_view digits);

  // bin(value) zero-padded to `width` bits. value must fit in width.
  static BitString from_value(std::uint64_t value, std::size_t width);

  // Unpacks bytes MSB-first, 8 bits per byte.
  static BitString from_packed_bytes(std::span<const std::uint8_t> bytes);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  // Bits [offset, offset + length).
  BitString slice(std::size_t offset, std::size_t length) const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Widest word numeric_value() will evaluate.
inline constexpr std::size_t kMaxOracleWidth = 62;

// a(w), MSB-first. Only meant for test oracles and small words; raises
// CapacityError ("oracle-only width exceeded") above kMaxOracleWidth bits.
std::uint64_t numeric_value(const BitString& w);

enum class BitFileFormat { kAscii, kPackedBytes };

// Reads a text file. kAscii accepts '0'/'1' with an optional trailing newline
// (LF or CRLF); kPackedBytes unpacks raw bytes MSB-first.
BitString read_bit_file(const std::filesystem::path& path,
                        BitFileFormat format = BitFileFormat::kAscii);

}  // namespace fingergrover

#endif  // FINGERGROVER_BIT_STRING_HPP_
