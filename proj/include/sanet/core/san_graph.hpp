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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "sanet/core/ids.hpp"

namespace sanet {

// Social-attribute network: directed social links between social nodes plus
// undirected links between a social node and an attribute node.
//
// Single writer while building; Freeze() sorts every adjacency list and
// rejects further mutation, after which concurrent readers are safe.
class SanGraph {
 public:
  // School, Major, Employer, City.
  static const std::vector<std::string>& DefaultAttributeTypes();

  SanGraph();
  explicit SanGraph(std::vector<std::string> attribute_types);

  AttrTypeId InternAttributeType(std::string_view name);
  std::optional<AttrTypeId> FindAttributeType(std::string_view name) const;
  std::size_t attribute_type_count() const { return type_names_.size(); }
  const std::string& attribute_type_name(AttrTypeId t) const;
  const std::vector<std::string>& attribute_types() const { return type_names_; }

  SocialId AddSocialNode();
  AttrId AddAttributeNode(AttrTypeId type, std::string value = {});
  void ReserveSocialNodes(std::size_t n);

  // Both return false (and change nothing) when the link already exists.
  // Self links, unknown endpoints and mutation after Freeze() throw.
  bool AddSocialLink(SocialId u, SocialId v);
  bool AddAttributeLink(SocialId u, AttrId a);

  bool HasSocialNode(SocialId u) const { return u.index() < out_.size(); }
  bool HasAttributeNode(AttrId a) const { return a.index() < members_.size(); }
  bool HasSocialLink(SocialId u, SocialId v) const;
  bool HasAttributeLink(SocialId u, AttrId a) const;

  std::size_t social_node_count() const { return out_.size(); }
  std::size_t attribute_node_count() const { return members_.size(); }
  std::size_t social_link_count() const { return social_link_count_; }
  std::size_t attribute_link_count() const { return attribute_link_count_; }

  // Unchecked accessors for hot paths; ids must exist.
  std::span<const SocialId> out(SocialId u) const { return out_[u.index()]; }
  std::span<const SocialId> in(SocialId u) const { return in_[u.index()]; }
  // Union of in- and out-neighbors; a reciprocated pair appears once.
  std::span<const SocialId> neighbors(SocialId u) const { return nbrs_[u.index()]; }
  std::span<const AttrId> attributes(SocialId u) const { return attrs_[u.index()]; }
  std::span<const SocialId> members(AttrId a) const { return members_[a.index()]; }

  std::size_t out_degree(SocialId u) const { return out_[u.index()].size(); }
  std::size_t in_degree(SocialId u) const { return in_[u.index()].size(); }

  AttrTypeId attribute_type(AttrId a) const { return attr_type_[a.index()]; }
  const std::string& attribute_value(AttrId a) const { return attr_value_[a.index()]; }
  // attribute_value(a) when set, otherwise "a<id>".
  std::string AttributeLabel(AttrId a) const;

  void SetSocialLabel(SocialId u, std::string label);
  // The ingested label when present, otherwise the decimal id.
  std::string SocialLabel(SocialId u) const;
  bool has_social_labels() const { return !social_labels_.empty(); }

  void Freeze();
  bool frozen() const { return frozen_; }

  // Throws Error(kInvalidLink) describing the first broken invariant.
  void Validate() const;

  // Same node sets (with attribute types) and same link sets.
  bool StructurallyEqual(const SanGraph& other) const;

  void CheckSocial(SocialId u) const;
  void CheckAttribute(AttrId a) const;

 private:
  static std::uint64_t Key(SocialId u, SocialId v) {
    return (static_cast<std::uint64_t>(u.value) << 32) | v.value;
  }
  void CheckMutable() const;

  std::vector<std::string> type_names_;
  std::vector<std::vector<SocialId>> out_;
  std::vector<std::vector<SocialId>> in_;
  std::vector<std::vector<SocialId>> nbrs_;
  std::vector<std::vector<AttrId>> attrs_;
  std::vector<std::vector<SocialId>> members_;
  std::vector<AttrTypeId> attr_type_;
  std::vector<std::string> attr_value_;
  std::vector<std::string> social_labels_;
  absl::flat_hash_set<std::uint64_t> social_links_;
  std::size_t social_link_count_ = 0;
  std::size_t attribute_link_count_ = 0;
  bool frozen_ = false;
};

}  // namespace sanet
