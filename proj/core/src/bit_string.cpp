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

#include "fingergrover/bit_string.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "fingergrover/errors.hpp"

namespace fingergrover {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw InvalidArgument("invalid binary digit at position " +
                            std::to_string(i));
    }
  }
}

BitString BitString::parse(std::string_view digits) {
  std::vector<std::uint8_t> bits;
  bits.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char ch = digits[i];
    if (ch != '0' && ch != '1') {
      std::ostringstream msg;
      msg << "invalid binary digit '" << ch << "' at position " << i;
      throw InvalidArgument(msg.str());
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

BitString BitString::from_value(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw InvalidArgument("value " + std::to_string(value) +
                          " does not fit in " + std::to_string(width) +
                          " bits");
  }
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    bits[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

BitString BitString::from_packed_bytes(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) {
      bits.push_back(static_cast<std::uint8_t>((byte >> shift) & 1U));
    }
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
  if (offset > bits_.size() || length > bits_.size() - offset) {
    throw InvalidArgument("slice out of range");
  }
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                   bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
  return out;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::uint64_t numeric_value(const BitString& w) {
  if (w.size() > kMaxOracleWidth) {
    throw CapacityError("oracle-only width exceeded: " +
                        std::to_string(w.size()) + " > " +
                        std::to_string(kMaxOracleWidth) + " bits");
  }
  std::uint64_t value = 0;
  for (std::uint8_t b : w.bits()) value = (value << 1) | b;
  return value;
}

BitString read_bit_file(const std::filesystem::path& path,
                        BitFileFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  if (in.bad()) throw InvalidArgument("cannot read " + path.string());

  if (format == BitFileFormat::kPackedBytes) {
    std::vector<std::uint8_t> bytes(contents.begin(), contents.end());
    return BitString::from_packed_bytes(bytes);
  }
  std::string_view digits(contents);
  if (!digits.empty() && digits.back() == '\n') digits.remove_suffix(1);
  if (!digits.empty() && digits.back() == '\r') digits.remove_suffix(1);
  return BitString::parse(digits);
}

}  // namespace fingergrover
