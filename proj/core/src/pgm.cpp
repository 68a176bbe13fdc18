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

#include "veinforge/pgm.hpp"
#include "veinforge/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace veinforge::imaging {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads one unsigned decimal token.
  std::size_t read_number(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (1u << 30)) fail(ErrorCode::CorruptImage, std::string("PGM ") + what + " out of range");
      ++pos_;
    }
    if (pos_ == start) fail(ErrorCode::CorruptImage, std::string("PGM header: missing ") + what);
    return value;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }
  char peek() const noexcept { return bytes_[pos_]; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage decode_pgm(std::string_view bytes) {
  if (bytes.size() >= 8 && static_cast<unsigned char>(bytes[0]) == 0x89 && bytes.substr(1, 3) == "PNG") {
    fail(ErrorCode::UnsupportedFormat, "PNG input is not supported; convert to PGM");
  }
  if (bytes.size() < 2 || bytes[0] != 'P') fail(ErrorCode::UnsupportedFormat, "not a netpbm file");
  const char kind = bytes[1];
  if (kind == '3' || kind == '6') fail(ErrorCode::UnsupportedFormat, "color PPM input is rejected");
  if (kind != '2' && kind != '5') fail(ErrorCode::UnsupportedFormat, std::string("unsupported netpbm type P") + kind);

  HeaderReader reader(bytes);
  reader.advance(2);
  const std::size_t width = reader.read_number("width");
  const std::size_t height = reader.read_number("height");
  const std::size_t maxval = reader.read_number("maxval");
  if (width == 0 || height == 0) fail(ErrorCode::CorruptImage, "PGM has a zero dimension");
  if (maxval != 255) fail(ErrorCode::UnsupportedFormat, "only maxval 255 is supported, got " + std::to_string(maxval));

  const std::size_t count = width * height;
  std::vector<std::uint8_t> pixels(count);
  if (kind == '5') {
    if (reader.at_end() || !std::isspace(static_cast<unsigned char>(reader.peek()))) {
      fail(ErrorCode::CorruptImage, "PGM header not terminated by whitespace");
    }
    reader.advance(1);
    if (bytes.size() - reader.pos() < count) {
      fail(ErrorCode::CorruptImage, "PGM payload truncated: " + std::to_string(bytes.size() - reader.pos()) +
                                        " of " + std::to_string(count) + " bytes");
    }
    for (std::size_t i = 0; i < count; ++i) {
      pixels[i] = static_cast<std::uint8_t>(bytes[reader.pos() + i]);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      reader.skip_space_and_comments();
      if (reader.at_end()) {
        fail(ErrorCode::CorruptImage, "PGM payload truncated: " + std::to_string(i) + " of " +
                                          std::to_string(count) + " samples");
      }
      const std::size_t value = reader.read_number("sample");
      if (value > 255) fail(ErrorCode::CorruptImage, "PGM sample exceeds maxval");
      pixels[i] = static_cast<std::uint8_t>(value);
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::string encode_pgm(const GrayImage& img, PgmEncoding encoding) {
  std::ostringstream out;
  out << (encoding == PgmEncoding::Binary ? "P5" : "P2") << '\n'
      << img.width() << ' ' << img.height() << '\n'
      << 255 << '\n';
  if (encoding == PgmEncoding::Binary) {
    const auto px = img.pixels();
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  } else {
    for (std::size_t y = 0; y < img.height(); ++y) {
      for (std::size_t x = 0; x < img.width(); ++x) {
        if (x) out << ' ';
        out << static_cast<int>(img.at(x, y));
      }
      out << '\n';
    }
  }
  return out.str();
}

GrayImage load_grayscale(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    fail(ErrorCode::FileNotFound, "image not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open image: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return decode_pgm(buffer.str());
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.message());
  }
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img, PgmEncoding encoding) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  const std::string bytes = encode_pgm(img, encoding);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::IoError, "short write to " + path.string());
}

}  // namespace veinforge::imaging
