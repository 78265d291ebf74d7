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

#include "sanet/core/event_log.hpp"

#include <string>

#include "sanet/util/error.hpp"

namespace sanet {

const char* LinkCauseName(LinkCause cause) {
  switch (cause) {
    case LinkCause::kUnknown: return "";
    case LinkCause::kInit: return "init";
    case LinkCause::kFirst: return "first";
    case LinkCause::kClosure: return "closure";
  }
  return "";
}

LinkCause ParseLinkCause(const std::string& text) {
  if (text.empty()) return LinkCause::kUnknown;
  if (text == "init") return LinkCause::kInit;
  if (text == "first") return LinkCause::kFirst;
  if (text == "closure") return LinkCause::kClosure;
  Fail(ErrorCode::kParse, "unknown link cause '" + text + "'");
}

void ApplyEvent(SanGraph& g, const EventLog& log, const Event& e) {
  auto fail = [&](const std::string& msg) {
    Fail(ErrorCode::kReplay, "event at t=" + std::to_string(e.time) + ": " + msg);
  };
  switch (e.kind) {
    case EventKind::kArrive: {
      if (e.u != g.social_node_count()) {
        fail("arrival of node " + std::to_string(e.u) + " but next id is " +
             std::to_string(g.social_node_count()));
      }
      g.AddSocialNode();
      return;
    }
    case EventKind::kAttributeLink: {
      if (!g.HasSocialNode(MakeSocial(e.u))) fail("unknown social node " + std::to_string(e.u));
      // Unseen ids are created in order; member-less attribute nodes in
      // between come from their declarations.
      while (e.target >= g.attribute_node_count()) {
        const auto next = static_cast<std::uint32_t>(g.attribute_node_count());
        auto it = log.attributes.find(next);
        if (it == log.attributes.end()) {
          fail("attribute " + std::to_string(next) + " has no declaration");
        }
        g.AddAttributeNode(g.InternAttributeType(it->second.type), it->second.value);
      }
      g.AddAttributeLink(MakeSocial(e.u), MakeAttr(e.target));
      return;
    }
    case EventKind::kSocialLink: {
      if (!g.HasSocialNode(MakeSocial(e.u)) || !g.HasSocialNode(MakeSocial(e.target))) {
        fail("social link with unknown endpoint");
      }
      if (e.u == e.target) fail("self link");
      g.AddSocialLink(MakeSocial(e.u), MakeSocial(e.target));
      return;
    }
  }
}

void Replay(SanGraph& g, const EventLog& log) {
  for (const Event& e : log.events) ApplyEvent(g, log, e);
  // Trailing declared attributes that never gained a member.
  for (auto it = log.attributes.lower_bound(
           static_cast<std::uint32_t>(g.attribute_node_count()));
       it != log.attributes.end() && it->first == g.attribute_node_count(); ++it) {
    g.AddAttributeNode(g.InternAttributeType(it->second.type), it->second.value);
  }
}

}  // namespace sanet
