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

#include <cstring>
#include <fstream>

#include "unicity/ingestion.h"

namespace unicity {
namespace {

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void U8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void U32(std::uint32_t v) { Le(v, 4); }
  void U64(std::uint64_t v) { Le(v, 8); }
  void I64(std::int64_t v) { Le(static_cast<std::uint64_t>(v), 8); }
  void Str(const std::string& s) {
    U32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void Raw(const char* p, std::size_t n) {
    out_.write(p, static_cast<std::streamsize>(n));
  }

 private:
  void Le(std::uint64_t v, int bytes) {
    char buf[8];
    for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(buf, bytes);
  }
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint8_t U8() { return static_cast<std::uint8_t>(Le(1)); }
  std::uint32_t U32() { return static_cast<std::uint32_t>(Le(4)); }
  std::uint64_t U64() { return Le(8); }
  std::int64_t I64() { return static_cast<std::int64_t>(Le(8)); }
  std::string Str() {
    const std::uint32_t n = U32();
    std::string s(n, '\0');
    Read(s.data(), n);
    return s;
  }
  void Read(char* p, std::size_t n) {
    in_.read(p, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw DataError("snapshot truncated");
    }
  }

 private:
  std::uint64_t Le(int bytes) {
    unsigned char buf[8];
    Read(reinterpret_cast<char*>(buf), static_cast<std::size_t>(bytes));
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
  }
  std::istream& in_;
};

}  // namespace

void WriteSnapshot(std::ostream& out, const TraceStore& store) {
  Writer w(out);
  w.Raw(kSnapshotMagic, sizeof(kSnapshotMagic));
  w.U8(kSnapshotVersion);
  w.U8(store.has_demographics() ? 1 : 0);
  w.U8(0);
  w.U8(0);
  w.U32(static_cast<std::uint32_t>(store.users().size()));
  for (const auto& name : store.users().names()) w.Str(name);
  w.U32(static_cast<std::uint32_t>(store.domains().size()));
  for (const auto& name : store.domains().names()) w.Str(name);
  w.U64(store.event_count());
  for (const Event& e : store.events()) {
    w.U32(e.user);
    w.U32(e.domain);
    w.I64(e.timestamp);
    w.U32(e.active_seconds);
  }
  if (store.has_demographics()) {
    const auto demo = store.demographics_by_user();
    std::uint32_t count = 0;
    for (const auto& d : demo) count += d.has_value();
    w.U32(count);
    for (std::size_t u = 0; u < demo.size(); ++u) {
      if (!demo[u]) continue;
      w.U32(static_cast<std::uint32_t>(u));
      w.U8(static_cast<std::uint8_t>(demo[u]->gender));
      w.U8(static_cast<std::uint8_t>(demo[u]->age));
    }
  }
  if (!out) throw DataError("failed writing snapshot");
}

void WriteSnapshot(const std::filesystem::path& path, const TraceStore& store) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  WriteSnapshot(out, store);
}

TraceStore ReadSnapshot(std::istream& in) {
  Reader r(in);
  char magic[4];
  r.Read(magic, sizeof(magic));
  if (std::memcmp(magic, kSnapshotMagic, sizeof(magic)) != 0) {
    throw DataError("not a trace snapshot (bad magic)");
  }
  const std::uint8_t version = r.U8();
  if (version != kSnapshotVersion) {
    throw DataError("unsupported snapshot version " + std::to_string(version));
  }
  const std::uint8_t flags = r.U8();
  r.U8();
  r.U8();

  auto read_dict = [&r] {
    std::vector<std::string> names(r.U32());
    for (auto& n : names) n = r.Str();
    try {
      return std::make_shared<const Dictionary>(std::move(names));
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("corrupt snapshot dictionary: ") + e.what());
    }
  };
  auto users = read_dict();
  auto domains = read_dict();
  const std::uint64_t n_events = r.U64();
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n_events, 1u << 26)));
  for (std::uint64_t i = 0; i < n_events; ++i) {
    Event e;
    e.user = r.U32();
    e.domain = r.U32();
    e.timestamp = r.I64();
    e.active_seconds = r.U32();
    if (e.user >= users->size() || e.domain >= domains->size()) {
      throw DataError("corrupt snapshot: event id out of range");
    }
    events.push_back(e);
  }
  std::vector<std::optional<Demographics>> demo;
  if (flags & 1) {
    demo.resize(users->size());
    const std::uint32_t count = r.U32();
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t u = r.U32();
      const std::uint8_t g = r.U8();
      const std::uint8_t age = r.U8();
      if (u >= users->size() || g > 2 || age > 120) {
        throw DataError("corrupt snapshot: bad demographics entry");
      }
      demo[u] = Demographics{users->name(u), static_cast<Gender>(g), age};
    }
  }
  return TraceStore::FromInterned(std::move(users), std::move(domains),
                                  std::move(events), std::move(demo));
}

TraceStore ReadSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return ReadSnapshot(in);
}

}  // namespace unicity
