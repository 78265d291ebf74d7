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
#include <map>
#include <string>
#include <vector>

#include "sanet/core/san_graph.hpp"

namespace sanet {

enum class EventKind : std::uint8_t { kArrive, kAttributeLink, kSocialLink };

// Why a social link was created. Logs ingested from elsewhere carry kUnknown.
enum class LinkCause : std::uint8_t { kUnknown, kInit, kFirst, kClosure };

const char* LinkCauseName(LinkCause cause);
LinkCause ParseLinkCause(const std::string& text);

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::kArrive;
  LinkCause cause = LinkCause::kUnknown;
  std::uint32_t u = 0;       // the social node
  std::uint32_t target = 0;  // social target or attribute id; unused for kArrive

  friend bool operator==(const Event&, const Event&) = default;
};

struct AttributeDecl {
  std::string type;
  std::string value;

  friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

// Time-ordered link-creation events. Attribute nodes are created on their
// first kAttributeLink; `attributes` declares the type of every attribute id
// the log introduces.
struct EventLog {
  std::vector<Event> events;
  std::map<std::uint32_t, AttributeDecl> attributes;

  void Arrive(double t, SocialId u) {
    events.push_back({t, EventKind::kArrive, LinkCause::kUnknown, u.value, 0});
  }
  void AttributeLink(double t, SocialId u, AttrId a) {
    events.push_back({t, EventKind::kAttributeLink, LinkCause::kUnknown, u.value, a.value});
  }
  void SocialLink(double t, SocialId u, SocialId v, LinkCause cause) {
    events.push_back({t, EventKind::kSocialLink, cause, u.value, v.value});
  }
  void Declare(AttrId a, std::string type, std::string value = {}) {
    attributes[a.value] = AttributeDecl{std::move(type), std::move(value)};
  }

  friend bool operator==(const EventLog&, const EventLog&) = default;
};

// Applies one event to `g`. Arrivals must carry the next dense social id and a
// new attribute id must be the next dense attribute id with a declaration.
// Throws Error(kReplay) on anything else.
void ApplyEvent(SanGraph& g, const EventLog& log, const Event& e);

// Replays every event onto `g` (pass an empty graph to rebuild from scratch).
void Replay(SanGraph& g, const EventLog& log);

}  // namespace sanet
