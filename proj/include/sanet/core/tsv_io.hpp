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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "sanet/core/event_log.hpp"
#include "sanet/core/san_graph.hpp"

namespace sanet {

// File formats (UTF-8, LF, '#' starts a comment line):
//   social.tsv      src<TAB>dst[<TAB>day]
//   attributes.tsv  node<TAB>attr_type<TAB>attr_value
//   events.tsv      t<TAB>arrive<TAB>u
//                   t<TAB>alink<TAB>u<TAB>a<TAB>type[<TAB>value]
//                   t<TAB>slink<TAB>u<TAB>v[<TAB>init|first|closure]

enum class LabelMode {
  kAuto,      // numeric when every social label is a plain nonnegative integer
  kNumeric,   // label "17" is social id 17; gaps become isolated nodes
  kInterned,  // ids assigned in order of first appearance
};

// Maps external labels to dense ids. Sharing one registry across a snapshot
// series keeps ids aligned between snapshots.
class LabelRegistry {
 public:
  std::optional<std::uint32_t> FindSocial(const std::string& label) const;
  std::uint32_t InternSocial(const std::string& label);
  std::optional<std::uint32_t> FindAttribute(const std::string& type,
                                             const std::string& value) const;
  std::uint32_t InternAttribute(const std::string& type, const std::string& value);

  std::size_t social_count() const { return social_labels_.size(); }
  std::size_t attribute_count() const { return attr_keys_.size(); }
  const std::string& social_label(std::uint32_t id) const { return social_labels_[id]; }
  const std::pair<std::string, std::string>& attribute_key(std::uint32_t id) const {
    return attr_keys_[id];
  }

 private:
  absl::flat_hash_map<std::string, std::uint32_t> social_;
  std::vector<std::string> social_labels_;
  std::map<std::pair<std::string, std::string>, std::uint32_t> attrs_;
  std::vector<std::pair<std::string, std::string>> attr_keys_;
};

void WriteComments(std::ostream& os, const std::vector<std::string>& lines);

// Rows sorted by (src, dst).
void WriteSocialTsv(std::ostream& os, const SanGraph& g);
// Rows sorted by (attribute id, node) so re-reading preserves attribute ids.
void WriteAttributeTsv(std::ostream& os, const SanGraph& g);
void WriteEventLogTsv(std::ostream& os, const EventLog& log);

// `attributes` may be null. Throws Error(kParse) with a line number on
// malformed input.
SanGraph ReadSanTsv(std::istream& social, std::istream* attributes,
                    LabelRegistry& registry, LabelMode mode = LabelMode::kAuto);
EventLog ReadEventLogTsv(std::istream& is);

// Convenience wrappers over <dir>/social.tsv and <dir>/attributes.tsv.
SanGraph LoadSanDir(const std::filesystem::path& dir, LabelRegistry& registry,
                    LabelMode mode = LabelMode::kAuto);
SanGraph LoadSanDir(const std::filesystem::path& dir);
void SaveSanDir(const std::filesystem::path& dir, const SanGraph& g,
                const std::vector<std::string>& comments = {});
EventLog LoadEventLog(const std::filesystem::path& path);
void SaveEventLog(const std::filesystem::path& path, const EventLog& log,
                  const std::vector<std::string>& comments = {});

struct SnapshotEntry {
  std::int64_t timestamp = 0;
  std::filesystem::path dir;
  std::optional<SanGraph> graph;  // empty when the snapshot failed to load
  std::string error;
};

// Reads every snapshot-<index>/ below `dir` in index order with one shared
// label registry. Malformed snapshots are kept as entries with `error` set.
std::vector<SnapshotEntry> LoadSnapshotSeries(const std::filesystem::path& dir,
                                              LabelMode mode = LabelMode::kAuto);
std::filesystem::path SnapshotDirName(const std::filesystem::path& root,
                                      std::int64_t index);

std::string FormatTime(double t);

}  // namespace sanet
