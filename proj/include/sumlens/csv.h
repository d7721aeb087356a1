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

#ifndef SUMLENS_CSV_H_
#define SUMLENS_CSV_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace sumlens {

// Quotes a field when it contains a comma, quote or line break.
std::string CsvField(std::string_view value);

// Fixed six-decimal rendering used for every score column.
std::string FormatScore(double value);

// RFC 4180 records, header included. Quoted fields may span lines.
std::vector<std::vector<std::string>> ReadCsv(std::istream& in);

}  // namespace sumlens

#endif  // SUMLENS_CSV_H_
