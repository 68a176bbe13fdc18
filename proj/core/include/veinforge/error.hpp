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

#include <stdexcept>
#include <string>
#include <string_view>

namespace veinforge {

enum class ErrorCode {
  FileNotFound,
  UnsupportedFormat,
  CorruptImage,
  InvalidParam,
  EmptyHistogram,
  ParseError,
  DuplicateRecord,
  LayoutMismatch,
  UnsplittableClass,
  OutOfBounds,
  DegenerateData,
  DimensionMismatch,
  IoError,
  FormatError,
  EmptyNode,
  InvalidTrainingSet,
  UnknownLabel,
  EmptyTestSet,
  UndefinedRate,
  DegenerateTrialSet,
  UnsortedCurve,
  Unachievable,
  EmptyInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI and tests can dispatch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the leading code name.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace veinforge
