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

#include "sumlens/error.h"

namespace sumlens {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kEmptyDocument:
      return "EmptyDocument";
    case ErrorCode::kEmptyFeatureSet:
      return "EmptyFeatureSet";
    case ErrorCode::kNoClassifiableSentences:
      return "NoClassifiableSentences";
    case ErrorCode::kInvalidParameter:
      return "InvalidParameter";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kInsufficientData:
      return "InsufficientData";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace sumlens
