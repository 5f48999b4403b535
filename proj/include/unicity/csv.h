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

// Minimal RFC 4180 reader/writer: comma separator, double-quote quoting,
// quoted fields may span lines, CRLF or LF record ends.

#ifndef UNICITY_CSV_H_
#define UNICITY_CSV_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unicity {

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads the next record. Returns false at end of input. A blank line is a
  // record with a single empty field.
  bool Next();

  std::span<const std::string> fields() const {
    return std::span<const std::string>(fields_).first(field_count_);
  }
  // 1-based line where the current record starts.
  std::size_t line_number() const { return record_line_; }
  // True if the record ended inside an unterminated quoted field.
  bool malformed() const { return malformed_; }

 private:
  std::istream& in_;
  std::string line_;
  std::vector<std::string> fields_;
  std::size_t field_count_ = 0;
  std::size_t line_no_ = 0;
  std::size_t record_line_ = 0;
  bool malformed_ = false;
};

// Appends one field, quoting it if it contains a comma, quote, CR or LF.
void AppendCsvField(std::string& out, std::string_view field);

void WriteCsvRow(std::ostream& out, std::span<const std::string> fields);

}  // namespace unicity

#endif  // UNICITY_CSV_H_
