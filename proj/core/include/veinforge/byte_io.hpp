// Copyright 2026 The VeinForge Authors
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

#pragma once

#include "veinforge/error.hpp"

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

// Little-endian primitive encoding shared by the binary file formats.
namespace veinforge::byte_io {

template <typename T>
void put(std::ostream& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                               std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                  std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
  const U bits = std::bit_cast<U>(value);
  char buf[sizeof(U)];
  for (std::size_t i = 0; i < sizeof(U); ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(buf, sizeof(U));
}

template <typename T>
T get(std::istream& in, const char* what) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                               std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                  std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
  unsigned char buf[sizeof(U)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(U))) fail(ErrorCode::FormatError, std::string("truncated ") + what);
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) bits = static_cast<U>(bits | (static_cast<U>(buf[i]) << (8 * i)));
  return std::bit_cast<T>(bits);
}

inline void put_string16(std::ostream& out, const std::string& s) {
  if (s.size() > 0xFFFF) fail(ErrorCode::FormatError, "string longer than 65535 bytes");
  put<std::uint16_t>(out, static_cast<std::uint16_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string get_string16(std::istream& in, const char* what) {
  const auto len = get<std::uint16_t>(in, what);
  std::string s(len, '\0');
  if (len && !in.read(s.data(), len)) fail(ErrorCode::FormatError, std::string("truncated ") + what);
  return s;
}

inline void expect_magic(std::istream& in, const char (&magic)[5], const char* what) {
  char buf[4];
  if (!in.read(buf, 4) || std::string(buf, 4) != std::string(magic, 4)) {
    fail(ErrorCode::FormatError, std::string("bad magic for ") + what);
  }
}

inline void expect_end(std::istream& in, const char* what) {
  if (in.peek() != std::char_traits<char>::eof()) fail(ErrorCode::FormatError, std::string("trailing bytes after ") + what);
}

}  // namespace veinforge::byte_io
