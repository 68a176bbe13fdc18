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

#include "veinforge/error.hpp"

namespace veinforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptImage: return "CorruptImage";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::EmptyHistogram: return "EmptyHistogram";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateRecord: return "DuplicateRecord";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::UnsplittableClass: return "UnsplittableClass";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::EmptyNode: return "EmptyNode";
    case ErrorCode::InvalidTrainingSet: return "InvalidTrainingSet";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyTestSet: return "EmptyTestSet";
    case ErrorCode::UndefinedRate: return "UndefinedRate";
    case ErrorCode::DegenerateTrialSet: return "DegenerateTrialSet";
    case ErrorCode::UnsortedCurve: return "UnsortedCurve";
    case ErrorCode::Unachievable: return "Unachievable";
    case ErrorCode::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

}  // namespace veinforge
