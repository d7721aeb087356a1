// Copyright 2026 The SumLens Authors.
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

#ifndef SUMLENS_ERROR_H_
#define SUMLENS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumlens {

// Machine-readable failure categories. The names are what the CLI prints in
// its error JSON, so keep them stable.
enum class ErrorCode {
  kParseError,
  kEmptyDocument,
  kEmptyFeatureSet,
  kNoClassifiableSentences,
  kInvalidParameter,
  kDomainError,
  kInsufficientData,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown for malformed JSON input; carries the byte offset reported by the
// parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset)
      : Error(ErrorCode::kParseError, message), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace sumlens

#endif  // SUMLENS_ERROR_H_
