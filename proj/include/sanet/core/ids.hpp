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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace sanet {

// Dense identifiers assigned at insertion. Social and attribute nodes live in
// separate id spaces.
struct SocialId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(SocialId, SocialId) = default;
};

struct AttrId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(AttrId, AttrId) = default;
};

struct AttrTypeId {
  std::uint16_t value = 0;

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(AttrTypeId, AttrTypeId) = default;
};

constexpr SocialId MakeSocial(std::size_t i) {
  return SocialId{static_cast<std::uint32_t>(i)};
}
constexpr AttrId MakeAttr(std::size_t i) {
  return AttrId{static_cast<std::uint32_t>(i)};
}

}  // namespace sanet

template <>
struct std::hash<sanet::SocialId> {
  std::size_t operator()(sanet::SocialId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

template <>
struct std::hash<sanet::AttrId> {
  std::size_t operator()(sanet::AttrId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
