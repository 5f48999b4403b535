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

#include "unicity/timestamp.h"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>

#include "unicity/common.h"

namespace unicity {
namespace {

bool Digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
  if (pos + count > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    const char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

std::optional<std::int64_t> ToEpoch(int year, int month, int day, int hour,
                                    int minute, int second) {
  using namespace std::chrono;
  const year_month_day ymd{std::chrono::year{year},
                           std::chrono::month{static_cast<unsigned>(month)},
                           std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 60) return std::nullopt;
  const auto days = sys_days(ymd).time_since_epoch().count();
  return static_cast<std::int64_t>(days) * 86400 + hour * 3600 + minute * 60 +
         second;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<int> ParseUtcOffset(std::string_view text) {
  text = Trim(text);
  if (text == "Z" || text == "z" || text == "UTC") return 0;
  if (text.size() < 3 || (text[0] != '+' && text[0] != '-')) return std::nullopt;
  const int sign = text[0] == '-' ? -1 : 1;
  int hours = 0, minutes = 0;
  if (!Digits(text, 1, 2, hours)) return std::nullopt;
  std::size_t pos = 3;
  if (pos < text.size() && text[pos] == ':') ++pos;
  if (pos < text.size()) {
    if (!Digits(text, pos, 2, minutes) || pos + 2 != text.size()) {
      return std::nullopt;
    }
  }
  if (hours > 23 || minutes > 59) return std::nullopt;
  return sign * (hours * 3600 + minutes * 60);
}

TimestampFormat TimestampFormat::Parse(std::string_view descriptor,
                                       std::string_view utc_offset) {
  TimestampFormat f;
  if (descriptor.empty()) throw ConfigError("empty timestamp format");
  if (descriptor == "iso8601") {
    f.kind = Kind::kIso8601;
  } else if (descriptor == "unix") {
    f.kind = Kind::kUnixSeconds;
  } else if (descriptor == "unix_ms") {
    f.kind = Kind::kUnixMillis;
  } else {
    f.kind = Kind::kPattern;
    f.pattern = std::string(descriptor);
  }
  const auto offset = ParseUtcOffset(utc_offset);
  if (!offset) {
    throw ConfigError("bad UTC offset '" + std::string(utc_offset) +
                      "' (expected e.g. +02:00)");
  }
  f.utc_offset_seconds = *offset;
  return f;
}

std::optional<std::int64_t> ParseIso8601(std::string_view text,
                                         int default_offset_seconds) {
  text = Trim(text);
  int year, month, day, hour, minute, second = 0;
  if (!Digits(text, 0, 4, year) || text.size() < 16 || text[4] != '-' ||
      !Digits(text, 5, 2, month) || text[7] != '-' || !Digits(text, 8, 2, day) ||
      (text[10] != 'T' && text[10] != 't' && text[10] != ' ') ||
      !Digits(text, 11, 2, hour) || text[13] != ':' ||
      !Digits(text, 14, 2, minute)) {
    return std::nullopt;
  }
  std::size_t pos = 16;
  if (pos < text.size() && text[pos] == ':') {
    if (!Digits(text, pos + 1, 2, second)) return std::nullopt;
    pos += 3;
    if (pos < text.size() && (text[pos] == '.' || text[pos] == ',')) {
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start) return std::nullopt;
    }
  }
  int offset = default_offset_seconds;
  if (pos < text.size()) {
    const auto parsed = ParseUtcOffset(text.substr(pos));
    if (!parsed) return std::nullopt;
    offset = *parsed;
  }
  const auto local = ToEpoch(year, month, day, hour, minute, second);
  if (!local) return std::nullopt;
  return *local - offset;
}

std::optional<std::int64_t> ParseTimestamp(std::string_view text,
                                           const TimestampFormat& format) {
  switch (format.kind) {
    case TimestampFormat::Kind::kIso8601:
      return ParseIso8601(text, format.utc_offset_seconds);
    case TimestampFormat::Kind::kUnixSeconds:
    case TimestampFormat::Kind::kUnixMillis: {
      text = Trim(text);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
      return format.kind == TimestampFormat::Kind::kUnixMillis ? v / 1000 : v;
    }
    case TimestampFormat::Kind::kPattern: {
      const std::string buf(Trim(text));
      std::tm tm{};
      const char* end = strptime(buf.c_str(), format.pattern.c_str(), &tm);
      if (end == nullptr || *end != '\0') return std::nullopt;
      const auto local = ToEpoch(tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                                 tm.tm_hour, tm.tm_min, tm.tm_sec);
      if (!local) return std::nullopt;
      return *local - format.utc_offset_seconds;
    }
  }
  return std::nullopt;
}

std::string FormatIso8601(std::int64_t epoch_seconds) {
  using namespace std::chrono;
  std::int64_t days = epoch_seconds / 86400;
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(rem / 3600),
                static_cast<int>(rem % 3600 / 60), static_cast<int>(rem % 60));
  return buf;
}

}  // namespace unicity
