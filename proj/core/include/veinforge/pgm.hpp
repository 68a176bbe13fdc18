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

#include "veinforge/image.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace veinforge::imaging {

enum class PgmEncoding { Binary, Ascii };

/// Decodes a P2 (ASCII) or P5 (binary) graymap with maxval 255. Color and
/// bitmap netpbm variants, PNG and anything else raise UnsupportedFormat;
/// short or malformed payloads raise CorruptImage.
GrayImage decode_pgm(std::string_view bytes);

std::string encode_pgm(const GrayImage& img, PgmEncoding encoding = PgmEncoding::Binary);

/// Reads a grayscale raster from disk (FileNotFound when the path is absent).
GrayImage load_grayscale(const std::filesystem::path& path);

/// Writes a P5 file, creating parent directories as needed.
void write_pgm(const std::filesystem::path& path, const GrayImage& img,
               PgmEncoding encoding = PgmEncoding::Binary);

}  // namespace veinforge::imaging
