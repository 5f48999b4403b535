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

#ifndef UNICITY_TIMESTAMP_H_
#define UNICITY_TIMESTAMP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace unicity {

// How the timestamp column is written.
//   "iso8601"  YYYY-MM-DD[T ]HH:MM[:SS[.fff]][Z|+HH[:MM]|-HH[:MM]]
//   "unix"     integer seconds since the epoch
//   "unix_ms"  integer milliseconds since the epoch (truncated to seconds)
//   otherwise  a strptime(3) pattern, e.g. "%d.%m.%Y %H:%M:%S"
// Values without an explicit offset are read at `utc_offset_seconds`.
struct TimestampFormat {
  enum class Kind { kIso8601, kUnixSeconds, kUnixMillis, kPattern };
  Kind kind = Kind::kIso8601;
  std::string pattern;
  int utc_offset_seconds = 0;

  // Throws ConfigError for an empty descriptor or a malformed offset.
  static TimestampFormat Parse(std::string_view descriptor,
                               std::string_view utc_offset = "+00:00");
};

// "+02:00", "-0530", "Z", "+00:00" -> seconds east of UTC.
std::optional<int> ParseUtcOffset(std::string_view text);

// Seconds since the epoch, or nullopt if `text` does not match.
std::optional<std::int64_t> ParseTimestamp(std::string_view text,
                                           const TimestampFormat& format);

std::optional<std::int64_t> ParseIso8601(std::string_view text,
                                         int default_offset_seconds = 0);

// Always "YYYY-MM-DDTHH:MM:SSZ".
std::string FormatIso8601(std::int64_t epoch_seconds);

}  // namespace unicity

#endif  // UNICITY_TIMESTAMP_H_
