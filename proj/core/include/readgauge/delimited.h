// Copyright 2026 The ReadGauge Authors.
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

#ifndef READGAUGE_DELIMITED_H_
#define READGAUGE_DELIMITED_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace readgauge {

// A delimited table with a header row. Quoted fields may hold the delimiter,
// doubled quotes and newlines.
struct DelimitedTable {
  struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line where the row starts
  };

  char delimiter = ',';
  std::vector<std::string> header;
  std::vector<Row> rows;

  // Index of a header column, or nullopt.
  std::optional<std::size_t> Column(std::string_view name) const;
};

// Tab if the header line has one, otherwise comma.
char InferDelimiter(std::string_view header_line);

// Throws Error(kMalformedRow) on an unterminated quote. Blank lines are
// skipped. When delimiter is unset it is inferred from the header line.
DelimitedTable ParseDelimited(std::string_view content,
                              std::optional<char> delimiter = std::nullopt);

// Throws Error(kFileUnreadable) if the file cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

DelimitedTable ReadDelimitedFile(const std::filesystem::path &path,
                                 std::optional<char> delimiter = std::nullopt);

}  // namespace readgauge

#endif  // READGAUGE_DELIMITED_H_
