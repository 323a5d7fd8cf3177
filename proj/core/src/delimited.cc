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

#include "readgauge/delimited.h"

#include <fstream>
#include <sstream>

#include "readgauge/error.h"

namespace readgauge {

std::optional<std::size_t> DelimitedTable::Column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

char InferDelimiter(std::string_view header_line) {
  return header_line.find('\t') != std::string_view::npos ? '\t' : ',';
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

DelimitedTable ParseDelimited(std::string_view content,
                              std::optional<char> delimiter) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  DelimitedTable table;
  table.delimiter =
      delimiter.value_or(InferDelimiter(content.substr(0, content.find('\n'))));
  const char delim = table.delimiter;

  std::vector<std::string> fields;
  std::string field;
  bool quoted_field = false;
  std::size_t line = 1;
  std::size_t row_line = 1;
  bool header_done = false;

  const auto finish_field = [&] {
    fields.push_back(quoted_field ? field : std::string(Trim(field)));
    field.clear();
    quoted_field = false;
  };
  const auto finish_row = [&] {
    finish_field();
    const bool blank = fields.size() == 1 && fields[0].empty();
    if (!blank) {
      if (!header_done) {
        table.header = std::move(fields);
        header_done = true;
      } else {
        table.rows.push_back({std::move(fields), row_line});
      }
    }
    fields.clear();
  };

  std::size_t i = 0;
  while (i < content.size()) {
    const char c = content[i];
    if (c == '"' && Trim(field).empty() && !quoted_field) {
      field.clear();
      quoted_field = true;
      const std::size_t open_line = line;
      ++i;
      while (true) {
        if (i >= content.size()) {
          throw Error(ErrorCode::kMalformedRow,
                      "unterminated quoted field starting on line " +
                          std::to_string(open_line));
        }
        if (content[i] == '"') {
          if (i + 1 < content.size() && content[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (content[i] == '\n') ++line;
        if (content[i] == '\r' && i + 1 < content.size() &&
            content[i + 1] == '\n') {
          ++i;
          continue;
        }
        field.push_back(content[i]);
        ++i;
      }
      // Anything between the closing quote and the delimiter is dropped.
      while (i < content.size() && content[i] != delim && content[i] != '\n' &&
             content[i] != '\r') {
        ++i;
      }
      continue;
    }
    if (c == delim) {
      finish_field();
      ++i;
      continue;
    }
    if (c == '\r' || c == '\n') {
      finish_row();
      if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') ++i;
      ++i;
      ++line;
      row_line = line;
      continue;
    }
    if (!quoted_field) field.push_back(c);
    ++i;
  }
  if (!field.empty() || !fields.empty() || quoted_field) finish_row();
  return table;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable,
                "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

DelimitedTable ReadDelimitedFile(const std::filesystem::path &path,
                                 std::optional<char> delimiter) {
  return ParseDelimited(ReadFile(path), delimiter);
}

}  // namespace readgauge
