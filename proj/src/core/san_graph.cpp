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

#include "sanet/core/san_graph.hpp"

#include <algorithm>
#include <string>

#include "sanet/util/error.hpp"

namespace sanet {

const std::vector<std::string>& SanGraph::DefaultAttributeTypes() {
  static const std::vector<std::string> kTypes = {"School", "Major", "Employer",
                                                  "City"};
  return kTypes;
}

SanGraph::SanGraph() : SanGraph(DefaultAttributeTypes()) {}

SanGraph::SanGraph(std::vector<std::string> attribute_types) {
  for (auto& name : attribute_types) InternAttributeType(name);
}

AttrTypeId SanGraph::InternAttributeType(std::string_view name) {
  if (auto found = FindAttributeType(name)) return *found;
  Require(!name.empty(), ErrorCode::kInvalidArgument, "empty attribute type name");
  Require(type_names_.size() < 0xffff, ErrorCode::kInvalidArgument,
          "too many attribute types");
  type_names_.emplace_back(name);
  return AttrTypeId{static_cast<std::uint16_t>(type_names_.size() - 1)};
}

std::optional<AttrTypeId> SanGraph::FindAttributeType(std::string_view name) const {
  for (std::size_t i = 0; i < type_names_.size(); ++i) {
    if (type_names_[i] == name) return AttrTypeId{static_cast<std::uint16_t>(i)};
  }
  return std::nullopt;
}

const std::string& SanGraph::attribute_type_name(AttrTypeId t) const {
  Require(t.index() < type_names_.size(), ErrorCode::kInvalidArgument,
          "unknown attribute type " + std::to_string(t.value));
  return type_names_[t.index()];
}

void SanGraph::CheckMutable() const {
  Require(!frozen_, ErrorCode::kInvalidArgument, "graph is frozen");
}

void SanGraph::CheckSocial(SocialId u) const {
  Require(HasSocialNode(u), ErrorCode::kNodeNotFound,
          "social node " + std::to_string(u.value) + " not found");
}

void SanGraph::CheckAttribute(AttrId a) const {
  Require(HasAttributeNode(a), ErrorCode::kNodeNotFound,
          "attribute node " + std::to_string(a.value) + " not found");
}

SocialId SanGraph::AddSocialNode() {
  CheckMutable();
  Require(out_.size() < 0xffffffffULL, ErrorCode::kResourceLimit,
          "social id space exhausted");
  out_.emplace_back();
  in_.emplace_back();
  nbrs_.emplace_back();
  attrs_.emplace_back();
  if (!social_labels_.empty()) social_labels_.emplace_back();
  return MakeSocial(out_.size() - 1);
}

void SanGraph::ReserveSocialNodes(std::size_t n) {
  out_.reserve(n);
  in_.reserve(n);
  nbrs_.reserve(n);
  attrs_.reserve(n);
}

AttrId SanGraph::AddAttributeNode(AttrTypeId type, std::string value) {
  CheckMutable();
  Require(type.index() < type_names_.size(), ErrorCode::kInvalidArgument,
          "unknown attribute type " + std::to_string(type.value));
  members_.emplace_back();
  attr_type_.push_back(type);
  attr_value_.push_back(std::move(value));
  return MakeAttr(members_.size() - 1);
}

bool SanGraph::AddSocialLink(SocialId u, SocialId v) {
  CheckMutable();
  CheckSocial(u);
  CheckSocial(v);
  Require(u != v, ErrorCode::kInvalidLink,
          "self social link on node " + std::to_string(u.value));
  if (!social_links_.insert(Key(u, v)).second) return false;
  out_[u.index()].push_back(v);
  in_[v.index()].push_back(u);
  if (!social_links_.contains(Key(v, u))) {
    nbrs_[u.index()].push_back(v);
    nbrs_[v.index()].push_back(u);
  }
  ++social_link_count_;
  return true;
}

bool SanGraph::AddAttributeLink(SocialId u, AttrId a) {
  CheckMutable();
  CheckSocial(u);
  CheckAttribute(a);
  if (HasAttributeLink(u, a)) return false;
  attrs_[u.index()].push_back(a);
  members_[a.index()].push_back(u);
  ++attribute_link_count_;
  return true;
}

bool SanGraph::HasSocialLink(SocialId u, SocialId v) const {
  return social_links_.contains(Key(u, v));
}

bool SanGraph::HasAttributeLink(SocialId u, AttrId a) const {
  if (!HasSocialNode(u) || !HasAttributeNode(a)) return false;
  const auto& mine = attrs_[u.index()];
  const auto& theirs = members_[a.index()];
  if (mine.size() <= theirs.size()) {
    if (frozen_) return std::binary_search(mine.begin(), mine.end(), a);
    return std::find(mine.begin(), mine.end(), a) != mine.end();
  }
  if (frozen_) return std::binary_search(theirs.begin(), theirs.end(), u);
  return std::find(theirs.begin(), theirs.end(), u) != theirs.end();
}

std::string SanGraph::AttributeLabel(AttrId a) const {
  const auto& v = attr_value_[a.index()];
  return v.empty() ? "a" + std::to_string(a.value) : v;
}

void SanGraph::SetSocialLabel(SocialId u, std::string label) {
  CheckSocial(u);
  if (social_labels_.empty()) social_labels_.resize(out_.size());
  social_labels_[u.index()] = std::move(label);
}

std::string SanGraph::SocialLabel(SocialId u) const {
  if (u.index() < social_labels_.size() && !social_labels_[u.index()].empty()) {
    return social_labels_[u.index()];
  }
  return std::to_string(u.value);
}

void SanGraph::Freeze() {
  if (frozen_) return;
  auto sort_all = [](auto& lists) {
    for (auto& l : lists) std::sort(l.begin(), l.end());
  };
  sort_all(out_);
  sort_all(in_);
  sort_all(nbrs_);
  sort_all(attrs_);
  sort_all(members_);
  frozen_ = true;
}

void SanGraph::Validate() const {
  auto fail = [](const std::string& msg) { Fail(ErrorCode::kInvalidLink, msg); };
  const std::size_t n = out_.size();
  if (in_.size() != n || nbrs_.size() != n || attrs_.size() != n) {
    fail("adjacency arrays disagree on social node count");
  }
  std::size_t out_total = 0;
  std::size_t in_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const SocialId u = MakeSocial(i);
    auto outs = out_[i];
    std::sort(outs.begin(), outs.end());
    if (std::adjacent_find(outs.begin(), outs.end()) != outs.end()) {
      fail("duplicate social link from " + std::to_string(i));
    }
    for (SocialId v : outs) {
      if (!HasSocialNode(v)) fail("social link to missing node");
      if (v == u) fail("self social link on " + std::to_string(i));
      if (!social_links_.contains(Key(u, v))) fail("link index out of sync");
      const auto& ins = in_[v.index()];
      if (std::find(ins.begin(), ins.end(), u) == ins.end()) {
        fail("in-list missing reverse entry");
      }
    }
    out_total += outs.size();
    in_total += in_[i].size();

    auto nb = nbrs_[i];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      fail("duplicate entry in neighbor union of " + std::to_string(i));
    }
    std::vector<SocialId> expect(outs.begin(), outs.end());
    expect.insert(expect.end(), in_[i].begin(), in_[i].end());
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    if (expect != nb) fail("neighbor union of " + std::to_string(i) + " is stale");

    auto as = attrs_[i];
    std::sort(as.begin(), as.end());
    if (std::adjacent_find(as.begin(), as.end()) != as.end()) {
      fail("duplicate attribute link on " + std::to_string(i));
    }
    for (AttrId a : as) {
      if (!HasAttributeNode(a)) fail("attribute link to missing attribute node");
      const auto& m = members_[a.index()];
      if (std::find(m.begin(), m.end(), u) == m.end()) {
        fail("attribute membership not symmetric");
      }
    }
  }
  if (out_total != social_link_count_ || in_total != social_link_count_ ||
      social_links_.size() != social_link_count_) {
    fail("social link count mismatch");
  }
  std::size_t member_total = 0;
  for (std::size_t a = 0; a < members_.size(); ++a) {
    if (attr_type_[a].index() >= type_names_.size()) fail("attribute with unknown type");
    for (SocialId u : members_[a]) {
      if (!HasSocialNode(u)) fail("attribute member missing");
    }
    member_total += members_[a].size();
  }
  std::size_t attr_total = 0;
  for (const auto& l : attrs_) attr_total += l.size();
  if (member_total != attribute_link_count_ || attr_total != attribute_link_count_) {
    fail("attribute link count mismatch");
  }
}

bool SanGraph::StructurallyEqual(const SanGraph& other) const {
  if (social_node_count() != other.social_node_count() ||
      attribute_node_count() != other.attribute_node_count() ||
      social_link_count_ != other.social_link_count_ ||
      attribute_link_count_ != other.attribute_link_count_) {
    return false;
  }
  for (std::size_t a = 0; a < members_.size(); ++a) {
    if (attribute_type_name(attr_type_[a]) !=
        other.attribute_type_name(other.attr_type_[a])) {
      return false;
    }
  }
  for (std::size_t i = 0; i < out_.size(); ++i) {
    const SocialId u = MakeSocial(i);
    for (SocialId v : out_[i]) {
      if (!other.HasSocialLink(u, v)) return false;
    }
    for (AttrId a : attrs_[i]) {
      if (!other.HasAttributeLink(u, a)) return false;
    }
  }
  return true;
}

}  // namespace sanet
