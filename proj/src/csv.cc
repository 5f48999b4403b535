//
// Copyright 2026 The Unicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "unicity/csv.h"

namespace unicity {

bool CsvReader::Next() {
  if (!std::getline(in_, line_)) return false;
  ++line_no_;
  record_line_ = line_no_;
  malformed_ = false;
  field_count_ = 0;

  auto next_field = [&]() -> std::string& {
    if (field_count_ == fields_.size()) fields_.emplace_back();
    std::string& f = fields_[field_count_++];
    f.clear();
    return f;
  };

  std::string* field = &next_field();
  bool in_quotes = false;
  bool field_started_quoted = false;
  std::size_t i = 0;
  for (;;) {
    if (i >= line_.size()) {
      if (in_quotes) {
        // Quoted field continues on the next physical line.
        if (!std::getline(in_, line_)) {
          malformed_ = true;
          break;
        }
        ++line_no_;
        field->push_back('\n');
        i = 0;
        continue;
      }
      break;
    }
    const char c = line_[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line_.size() && line_[i + 1] == '"') {
          field->push_back('"');
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        continue;
      }
      field->push_back(c);
      ++i;
      continue;
    }
    if (c == ',') {
      field = &next_field();
      field_started_quoted = false;
      ++i;
      continue;
    }
    if (c == '"' && field->empty() && !field_started_quoted) {
      in_quotes = true;
      field_started_quoted = true;
      ++i;
      continue;
    }
    if (c == '\r' && i + 1 == line_.size()) {
      ++i;
      continue;
    }
    field->push_back(c);
    ++i;
  }
  return true;
}

void AppendCsvField(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out.append(field);
    return;
  }
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

void WriteCsvRow(std::ostream& out, std::span<const std::string> fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line.push_back(',');
    AppendCsvField(line, fields[i]);
  }
  line.push_back('\n');
  out << line;
}

}  // namespace unicity
