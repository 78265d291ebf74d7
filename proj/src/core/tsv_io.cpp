// Copyright 2026 The sanet Authors.
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

#include "sanet/core/tsv_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string_view>

#include "sanet/util/error.hpp"

namespace sanet {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool IsSkippable(std::string_view line) {
  return line.empty() || line.front() == '#';
}

std::string_view StripCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Plain nonnegative integer without sign or leading zeros.
std::optional<std::uint32_t> CanonicalId(std::string_view s) {
  if (s.empty() || s.size() > 10) return std::nullopt;
  if (s.size() > 1 && s.front() == '0') return std::nullopt;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  auto v = ParseNumber<std::uint64_t>(s);
  if (!v || *v >= 0x7fffffffULL) return std::nullopt;
  return static_cast<std::uint32_t>(*v);
}

[[noreturn]] void ParseFail(const std::string& what, std::size_t line_no) {
  Fail(ErrorCode::kParse, what + " (line " + std::to_string(line_no) + ")");
}

std::ifstream OpenIn(const std::filesystem::path& p) {
  std::ifstream in(p);
  Require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + p.string());
  return in;
}

std::ofstream OpenOut(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  Require(static_cast<bool>(out), ErrorCode::kIo, "cannot write " + p.string());
  return out;
}

}  // namespace

std::string FormatTime(double t) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), t);
  return std::string(buf, ptr);
}

std::optional<std::uint32_t> LabelRegistry::FindSocial(const std::string& label) const {
  auto it = social_.find(label);
  if (it == social_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t LabelRegistry::InternSocial(const std::string& label) {
  auto [it, inserted] =
      social_.try_emplace(label, static_cast<std::uint32_t>(social_labels_.size()));
  if (inserted) social_labels_.push_back(label);
  return it->second;
}

std::optional<std::uint32_t> LabelRegistry::FindAttribute(const std::string& type,
                                                          const std::string& value) const {
  auto it = attrs_.find({type, value});
  if (it == attrs_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t LabelRegistry::InternAttribute(const std::string& type,
                                             const std::string& value) {
  auto [it, inserted] =
      attrs_.try_emplace({type, value}, static_cast<std::uint32_t>(attr_keys_.size()));
  if (inserted) attr_keys_.emplace_back(type, value);
  return it->second;
}

void WriteComments(std::ostream& os, const std::vector<std::string>& lines) {
  for (const auto& line : lines) {
    std::istringstream split(line);
    std::string part;
    while (std::getline(split, part)) os << "# " << part << '\n';
  }
}

void WriteSocialTsv(std::ostream& os, const SanGraph& g) {
  std::vector<SocialId> outs;
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    outs.assign(g.out(u).begin(), g.out(u).end());
    std::sort(outs.begin(), outs.end());
    const std::string src = g.SocialLabel(u);
    for (SocialId v : outs) os << src << '\t' << g.SocialLabel(v) << '\n';
  }
}

void WriteAttributeTsv(std::ostream& os, const SanGraph& g) {
  std::vector<SocialId> members;
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    const AttrId id = MakeAttr(a);
    members.assign(g.members(id).begin(), g.members(id).end());
    std::sort(members.begin(), members.end());
    const std::string& type = g.attribute_type_name(g.attribute_type(id));
    const std::string value = g.AttributeLabel(id);
    for (SocialId u : members) {
      os << g.SocialLabel(u) << '\t' << type << '\t' << value << '\n';
    }
  }
}

void WriteEventLogTsv(std::ostream& os, const EventLog& log) {
  for (const Event& e : log.events) {
    os << FormatTime(e.time) << '\t';
    switch (e.kind) {
      case EventKind::kArrive:
        os << "arrive\t" << e.u;
        break;
      case EventKind::kAttributeLink: {
        os << "alink\t" << e.u << '\t' << e.target;
        auto it = log.attributes.find(e.target);
        if (it != log.attributes.end()) {
          os << '\t' << it->second.type;
          if (!it->second.value.empty()) os << '\t' << it->second.value;
        }
        break;
      }
      case EventKind::kSocialLink:
        os << "slink\t" << e.u << '\t' << e.target;
        if (e.cause != LinkCause::kUnknown) os << '\t' << LinkCauseName(e.cause);
        break;
    }
    os << '\n';
  }
}

SanGraph ReadSanTsv(std::istream& social, std::istream* attributes,
                    LabelRegistry& registry, LabelMode mode) {
  struct AttrRow {
    std::string node, type, value;
  };
  std::vector<std::pair<std::string, std::string>> links;
  std::vector<AttrRow> attr_rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(social, raw)) {
    ++line_no;
    const std::string_view line = StripCr(raw);
    if (IsSkippable(line)) continue;
    auto cols = SplitTabs(line);
    if (cols.size() < 2 || cols.size() > 3) ParseFail("social row needs 2 or 3 columns", line_no);
    if (cols[0].empty() || cols[1].empty()) ParseFail("empty node label", line_no);
    if (cols.size() == 3 && !ParseNumber<std::int64_t>(cols[2])) {
      ParseFail("day stamp is not an integer", line_no);
    }
    links.emplace_back(std::string(cols[0]), std::string(cols[1]));
  }
  if (attributes != nullptr) {
    line_no = 0;
    while (std::getline(*attributes, raw)) {
      ++line_no;
      const std::string_view line = StripCr(raw);
      if (IsSkippable(line)) continue;
      auto cols = SplitTabs(line);
      if (cols.size() != 3) ParseFail("attribute row needs 3 columns", line_no);
      if (cols[0].empty() || cols[1].empty() || cols[2].empty()) {
        ParseFail("empty attribute field", line_no);
      }
      attr_rows.push_back({std::string(cols[0]), std::string(cols[1]), std::string(cols[2])});
    }
  }

  bool numeric = mode == LabelMode::kNumeric;
  if (mode == LabelMode::kAuto) {
    numeric = std::all_of(links.begin(), links.end(),
                          [](const auto& l) {
                            return CanonicalId(l.first) && CanonicalId(l.second);
                          }) &&
              std::all_of(attr_rows.begin(), attr_rows.end(),
                          [](const AttrRow& r) { return CanonicalId(r.node).has_value(); });
  }

  SanGraph g;
  std::vector<std::pair<SocialId, SocialId>> social_pairs;
  std::vector<SocialId> attr_owner;
  social_pairs.reserve(links.size());
  attr_owner.reserve(attr_rows.size());
  if (numeric) {
    auto id_of = [](const std::string& s) {
      auto v = CanonicalId(s);
      if (!v) Fail(ErrorCode::kParse, "label '" + s + "' is not a numeric id");
      return MakeSocial(*v);
    };
    std::uint32_t max_id = 0;
    bool any = false;
    for (const auto& [s, d] : links) {
      social_pairs.emplace_back(id_of(s), id_of(d));
      max_id = std::max({max_id, social_pairs.back().first.value,
                         social_pairs.back().second.value});
      any = true;
    }
    for (const auto& r : attr_rows) {
      attr_owner.push_back(id_of(r.node));
      max_id = std::max(max_id, attr_owner.back().value);
      any = true;
    }
    if (any) {
      g.ReserveSocialNodes(max_id + 1);
      for (std::uint32_t i = 0; i <= max_id; ++i) g.AddSocialNode();
    }
  } else {
    for (const auto& [s, d] : links) {
      social_pairs.emplace_back(MakeSocial(registry.InternSocial(s)),
                                MakeSocial(registry.InternSocial(d)));
    }
    for (const auto& r : attr_rows) attr_owner.push_back(MakeSocial(registry.InternSocial(r.node)));
    g.ReserveSocialNodes(registry.social_count());
    for (std::size_t i = 0; i < registry.social_count(); ++i) {
      g.SetSocialLabel(g.AddSocialNode(), registry.social_label(static_cast<std::uint32_t>(i)));
    }
  }

  std::vector<AttrId> attr_ids;
  attr_ids.reserve(attr_rows.size());
  for (const auto& r : attr_rows) {
    attr_ids.push_back(MakeAttr(registry.InternAttribute(r.type, r.value)));
  }
  for (std::size_t a = 0; a < registry.attribute_count(); ++a) {
    const auto& [type, value] = registry.attribute_key(static_cast<std::uint32_t>(a));
    g.AddAttributeNode(g.InternAttributeType(type), value);
  }

  for (std::size_t i = 0; i < social_pairs.size(); ++i) {
    const auto [u, v] = social_pairs[i];
    if (u == v) Fail(ErrorCode::kParse, "self link on node " + links[i].first);
    g.AddSocialLink(u, v);
  }
  for (std::size_t i = 0; i < attr_rows.size(); ++i) {
    g.AddAttributeLink(attr_owner[i], attr_ids[i]);
  }
  return g;
}

EventLog ReadEventLogTsv(std::istream& is) {
  EventLog log;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string_view line = StripCr(raw);
    if (IsSkippable(line)) continue;
    auto cols = SplitTabs(line);
    if (cols.size() < 3) ParseFail("event row needs at least 3 columns", line_no);
    auto t = ParseNumber<double>(cols[0]);
    if (!t) ParseFail("bad event time", line_no);
    auto u = ParseNumber<std::uint32_t>(cols[2]);
    if (!u) ParseFail("bad node id", line_no);
    const std::string_view kind = cols[1];
    if (kind == "arrive") {
      if (cols.size() != 3) ParseFail("arrive takes one argument", line_no);
      log.Arrive(*t, MakeSocial(*u));
    } else if (kind == "alink") {
      if (cols.size() < 5 || cols.size() > 6) ParseFail("alink takes u, a, type[, value]", line_no);
      auto a = ParseNumber<std::uint32_t>(cols[3]);
      if (!a) ParseFail("bad attribute id", line_no);
      AttributeDecl decl{std::string(cols[4]), cols.size() == 6 ? std::string(cols[5]) : ""};
      auto it = log.attributes.find(*a);
      if (it == log.attributes.end()) {
        log.attributes.emplace(*a, std::move(decl));
      } else if (!(it->second == decl)) {
        ParseFail("attribute " + std::to_string(*a) + " redeclared with another type", line_no);
      }
      log.AttributeLink(*t, MakeSocial(*u), MakeAttr(*a));
    } else if (kind == "slink") {
      if (cols.size() < 4 || cols.size() > 5) ParseFail("slink takes u, v[, cause]", line_no);
      auto v = ParseNumber<std::uint32_t>(cols[3]);
      if (!v) ParseFail("bad node id", line_no);
      const LinkCause cause =
          cols.size() == 5 ? ParseLinkCause(std::string(cols[4])) : LinkCause::kUnknown;
      log.SocialLink(*t, MakeSocial(*u), MakeSocial(*v), cause);
    } else {
      ParseFail("unknown event kind '" + std::string(kind) + "'", line_no);
    }
  }
  return log;
}

SanGraph LoadSanDir(const std::filesystem::path& dir, LabelRegistry& registry,
                    LabelMode mode) {
  auto social = OpenIn(dir / "social.tsv");
  const auto attr_path = dir / "attributes.tsv";
  if (std::filesystem::exists(attr_path)) {
    auto attrs = OpenIn(attr_path);
    return ReadSanTsv(social, &attrs, registry, mode);
  }
  return ReadSanTsv(social, nullptr, registry, mode);
}

SanGraph LoadSanDir(const std::filesystem::path& dir) {
  LabelRegistry registry;
  return LoadSanDir(dir, registry);
}

void SaveSanDir(const std::filesystem::path& dir, const SanGraph& g,
                const std::vector<std::string>& comments) {
  std::filesystem::create_directories(dir);
  {
    auto out = OpenOut(dir / "social.tsv");
    WriteComments(out, comments);
    WriteSocialTsv(out, g);
  }
  auto out = OpenOut(dir / "attributes.tsv");
  WriteComments(out, comments);
  WriteAttributeTsv(out, g);
}

EventLog LoadEventLog(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ReadEventLogTsv(in);
}

void SaveEventLog(const std::filesystem::path& path, const EventLog& log,
                  const std::vector<std::string>& comments) {
  auto out = OpenOut(path);
  WriteComments(out, comments);
  WriteEventLogTsv(out, log);
}

std::filesystem::path SnapshotDirName(const std::filesystem::path& root,
                                      std::int64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot-%04lld", static_cast<long long>(index));
  return root / buf;
}

std::vector<SnapshotEntry> LoadSnapshotSeries(const std::filesystem::path& dir,
                                              LabelMode mode) {
  Require(std::filesystem::is_directory(dir), ErrorCode::kIo,
          "snapshot directory " + dir.string() + " not found");
  static const std::regex kName(R"(snapshot-(\d+))");
  std::vector<SnapshotEntry> entries;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (!item.is_directory()) continue;
    std::smatch m;
    const std::string name = item.path().filename().string();
    if (!std::regex_match(name, m, kName)) continue;
    SnapshotEntry e;
    e.timestamp = std::stoll(m[1].str());
    e.dir = item.path();
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const SnapshotEntry& a, const SnapshotEntry& b) {
              return a.timestamp < b.timestamp;
            });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    Require(entries[i].timestamp != entries[i - 1].timestamp, ErrorCode::kParse,
            "duplicate snapshot index " + std::to_string(entries[i].timestamp));
  }
  LabelRegistry registry;
  for (auto& e : entries) {
    try {
      e.graph = LoadSanDir(e.dir, registry, mode);
      e.graph->Freeze();
    } catch (const Error& err) {
      e.error = err.what();
    }
  }
  return entries;
}

}  // namespace sanet
