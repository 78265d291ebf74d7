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

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sanet/core/event_log.hpp"
#include "sanet/core/ops.hpp"
#include "sanet/core/san_graph.hpp"
#include "sanet/core/tsv_io.hpp"
#include "sanet/util/error.hpp"
#include "test_util.hpp"

namespace sanet {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("out and in neighbors follow the definition") {
  SanGraph g;
  const SocialId u = g.AddSocialNode();
  const SocialId v = g.AddSocialNode();
  const SocialId w = g.AddSocialNode();
  CHECK(SocialOutNeighbors(g, u).empty());
  g.AddSocialLink(u, v);
  g.AddSocialLink(w, u);
  CHECK(SocialOutNeighbors(g, u) == std::vector<SocialId>{v});
  CHECK(SocialInNeighbors(g, u) == std::vector<SocialId>{w});
  CHECK(SocialInNeighbors(g, w).empty());
  CHECK(SocialNeighbors(g, u) == std::vector<SocialId>{v, w});
  CHECK(CodeOf([&] { SocialOutNeighbors(g, MakeSocial(9)); }) == ErrorCode::kNodeNotFound);
}

TEST_CASE("neighbor queries match an edge-scan oracle") {
  const SanGraph g = testing::RandomSan(50, 12, 0.08, 0.15, 7);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < 50; ++i) {
    for (SocialId v : g.out(MakeSocial(i))) edges.emplace_back(i, v.index());
  }
  CHECK(edges.size() == g.social_link_count());
  for (std::size_t i = 0; i < 50; ++i) {
    std::set<std::size_t> out, in, all, attrs;
    for (auto [a, b] : edges) {
      if (a == i) out.insert(b), all.insert(b);
      if (b == i) in.insert(a), all.insert(a);
    }
    for (std::size_t j = 0; j < 12; ++j) {
      const auto m = g.members(MakeAttr(j));
      if (std::find(m.begin(), m.end(), MakeSocial(i)) != m.end()) attrs.insert(j);
    }
    auto ids = [](const auto& vec) {
      std::set<std::size_t> s;
      for (auto x : vec) s.insert(x.index());
      return s;
    };
    CHECK(ids(SocialOutNeighbors(g, MakeSocial(i))) == out);
    CHECK(ids(SocialInNeighbors(g, MakeSocial(i))) == in);
    CHECK(ids(SocialNeighbors(g, MakeSocial(i))) == all);
    CHECK(ids(AttributeNeighbors(g, MakeSocial(i))) == attrs);
  }
  CHECK_NOTHROW(g.Validate());
}

TEST_CASE("attribute node neighbors are its members") {
  SanGraph g;
  const SocialId u1 = g.AddSocialNode();
  const SocialId u2 = g.AddSocialNode();
  g.AddSocialNode();
  const AttrId a = g.AddAttributeNode(AttrTypeId{0}, "Stanford");
  g.AddAttributeLink(u1, a);
  g.AddAttributeLink(u2, a);
  CHECK(SocialNeighbors(g, a) == std::vector<SocialId>{u1, u2});
  CHECK(AttributeNeighbors(g, MakeSocial(2)).empty());
}

TEST_CASE("common counts are symmetric intersections") {
  SanGraph g;
  for (int i = 0; i < 4; ++i) g.AddSocialNode();
  for (int j = 0; j < 4; ++j) g.AddAttributeNode(AttrTypeId{0});
  for (int j = 0; j < 3; ++j) {
    g.AddAttributeLink(MakeSocial(0), MakeAttr(j));
    g.AddAttributeLink(MakeSocial(1), MakeAttr(j));
  }
  g.AddAttributeLink(MakeSocial(2), MakeAttr(3));
  CHECK(CommonAttributeCount(g, MakeSocial(0), MakeSocial(1)) == 3);
  CHECK(CommonAttributeCount(g, MakeSocial(0), MakeSocial(2)) == 0);
  // triangle u - w - v
  g.AddSocialLink(MakeSocial(0), MakeSocial(3));
  g.AddSocialLink(MakeSocial(3), MakeSocial(1));
  CHECK(CommonSocialNeighborCount(g, MakeSocial(0), MakeSocial(1)) == 1);
  CHECK(CommonSocialNeighborCount(g, MakeSocial(0), MakeSocial(2)) == 0);

  const SanGraph r = testing::RandomSan(40, 10, 0.1, 0.3, 3);
  for (std::size_t i = 0; i < 40; ++i) {
    for (std::size_t j = 0; j < 40; ++j) {
      const auto a = AttributeNeighbors(r, MakeSocial(i));
      const auto b = AttributeNeighbors(r, MakeSocial(j));
      std::vector<AttrId> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      const std::size_t c = CommonAttributeCount(r, MakeSocial(i), MakeSocial(j));
      CHECK(c == both.size());
      CHECK(c == CommonAttributeCount(r, MakeSocial(j), MakeSocial(i)));
      CHECK(c <= std::min(a.size(), b.size()));
      const auto x = SocialNeighbors(r, MakeSocial(i));
      const auto y = SocialNeighbors(r, MakeSocial(j));
      std::vector<SocialId> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
      CHECK(CommonSocialNeighborCount(r, MakeSocial(i), MakeSocial(j)) == common.size());
    }
  }
}

TEST_CASE("reciprocal links appear once in the neighbor union") {
  SanGraph g;
  const SocialId u = g.AddSocialNode();
  const SocialId v = g.AddSocialNode();
  g.AddSocialLink(u, v);
  g.AddSocialLink(v, u);
  CHECK(g.neighbors(u).size() == 1);
  CHECK(g.neighbors(v).size() == 1);
}

TEST_CASE("mutation rejects invalid links and ignores duplicates") {
  SanGraph g;
  const SocialId u = g.AddSocialNode();
  const SocialId v = g.AddSocialNode();
  const AttrId a = g.AddAttributeNode(AttrTypeId{1});
  CHECK(g.AddSocialLink(u, v));
  CHECK_FALSE(g.AddSocialLink(u, v));
  CHECK(g.AddAttributeLink(u, a));
  CHECK_FALSE(g.AddAttributeLink(u, a));
  CHECK(g.social_link_count() == 1);
  CHECK(g.attribute_link_count() == 1);
  CHECK(CodeOf([&] { g.AddSocialLink(u, u); }) == ErrorCode::kInvalidLink);
  CHECK(CodeOf([&] { g.AddSocialLink(u, MakeSocial(5)); }) == ErrorCode::kNodeNotFound);
  CHECK(CodeOf([&] { g.AddAttributeLink(u, MakeAttr(5)); }) == ErrorCode::kNodeNotFound);
  g.Freeze();
  CHECK(CodeOf([&] { g.AddSocialNode(); }) == ErrorCode::kInvalidArgument);
  CHECK_NOTHROW(g.Validate());
}

TEST_CASE("default attribute types") {
  SanGraph g;
  CHECK(g.attribute_types() ==
        std::vector<std::string>{"School", "Major", "Employer", "City"});
  CHECK(g.InternAttributeType("Major").value == 1);
  CHECK(g.InternAttributeType("Hobby").value == 4);
  CHECK_FALSE(g.FindAttributeType("Nope").has_value());
}

TEST_CASE("subsample keeps or drops whole users") {
  const SanGraph g = testing::RandomSan(200, 20, 0.02, 0.2, 11);
  SanGraph same = SubsampleAttributes(g, 1.0, 5);
  CHECK(same.StructurallyEqual(g));
  SanGraph none = SubsampleAttributes(g, 0.0, 5);
  CHECK(none.attribute_link_count() == 0);
  CHECK(none.social_link_count() == g.social_link_count());
  CHECK(none.attribute_node_count() == g.attribute_node_count());
  CHECK(CodeOf([&] { SubsampleAttributes(g, 1.5, 5); }) == ErrorCode::kInvalidArgument);

  const SanGraph a = SubsampleAttributes(g, 0.5, 9);
  CHECK(a.StructurallyEqual(SubsampleAttributes(g, 0.5, 9)));
  for (std::size_t i = 0; i < 200; ++i) {
    const auto kept = a.attributes(MakeSocial(i)).size();
    CHECK((kept == 0 || kept == g.attributes(MakeSocial(i)).size()));
  }
}

TEST_CASE("subsample retained fraction is binomial") {
  SanGraph g;
  const std::size_t n = 10000;
  g.AddAttributeNode(AttrTypeId{0});
  for (std::size_t i = 0; i < n; ++i) g.AddAttributeLink(g.AddSocialNode(), MakeAttr(0));
  const SanGraph s = SubsampleAttributes(g, 0.5, 2024);
  const double frac = static_cast<double>(s.attribute_link_count()) / n;
  CHECK(std::abs(frac - 0.5) <= testing::Binomial3Sigma(0.5, n));

  const SanGraph per_link = SubsampleAttributes(g, 0.5, 2024, SubsampleMode::kPerLink);
  const double frac_link = static_cast<double>(per_link.attribute_link_count()) / n;
  CHECK(std::abs(frac_link - 0.5) <= testing::Binomial3Sigma(0.5, n));
}

TEST_CASE("diff of identical snapshots is empty") {
  const SanGraph g = testing::RandomSan(30, 5, 0.1, 0.2, 1);
  CHECK(DiffSnapshots(g, g).events.empty());
}

TEST_CASE("one new link gives one social link event") {
  SanGraph g1 = testing::RandomSan(30, 5, 0.1, 0.2, 1);
  SanGraph g2 = g1;
  for (std::size_t v = 1; v < 30; ++v) {
    if (g2.AddSocialLink(MakeSocial(0), MakeSocial(v))) break;
  }
  const EventLog d = DiffSnapshots(g1, g2, 3.0);
  REQUIRE(d.events.size() == 1);
  CHECK(d.events[0].kind == EventKind::kSocialLink);
  CHECK(d.events[0].time == 3.0);
}

TEST_CASE("replaying diffs of a growth sequence rebuilds every snapshot") {
  std::mt19937_64 rng(99);
  SanGraph cur;
  SanGraph replayed;
  for (int step = 0; step < 10; ++step) {
    SanGraph next = cur;
    for (int k = 0; k < 5; ++k) next.AddSocialNode();
    if (rng() % 2 == 0) next.AddAttributeNode(AttrTypeId{static_cast<std::uint16_t>(rng() % 4)});
    if (rng() % 3 == 0) next.AddAttributeNode(AttrTypeId{2});
    for (int k = 0; k < 30; ++k) {
      const auto u = MakeSocial(rng() % next.social_node_count());
      const auto v = MakeSocial(rng() % next.social_node_count());
      if (u != v) next.AddSocialLink(u, v);
      if (next.attribute_node_count() > 0 && k % 3 == 0) {
        next.AddAttributeLink(u, MakeAttr(rng() % next.attribute_node_count()));
      }
    }
    Replay(replayed, DiffSnapshots(cur, next, step));
    CHECK(replayed.StructurallyEqual(next));
    cur = next;
  }
  SanGraph shrunk = testing::RandomSan(5, 1, 0.5, 0.5, 2);
  CHECK(CodeOf([&] { DiffSnapshots(cur, shrunk); }) == ErrorCode::kNonMonotoneSnapshots);
}

TEST_CASE("event log rejects out-of-order arrivals") {
  EventLog log;
  log.Arrive(0, MakeSocial(1));
  SanGraph g;
  CHECK(CodeOf([&] { Replay(g, log); }) == ErrorCode::kReplay);
}

TEST_CASE("tsv round trip preserves structure and labels") {
  SanGraph g = testing::RandomSan(25, 6, 0.1, 0.3, 4);
  std::ostringstream social, attrs, events;
  WriteSocialTsv(social, g);
  WriteAttributeTsv(attrs, g);
  std::istringstream si(social.str()), ai(attrs.str());
  LabelRegistry reg;
  const SanGraph back = ReadSanTsv(si, &ai, reg, LabelMode::kNumeric);
  CHECK(back.social_link_count() == g.social_link_count());
  CHECK(back.attribute_link_count() == g.attribute_link_count());

  EventLog log = DiffSnapshots(SanGraph{}, g, 1.5);
  WriteEventLogTsv(events, log);
  std::istringstream ei(events.str());
  const EventLog parsed = ReadEventLogTsv(ei);
  CHECK(parsed == log);
}

TEST_CASE("tsv parser reports the offending line") {
  std::istringstream social("# header\n1\t2\nbroken\n");
  LabelRegistry reg;
  try {
    ReadSanTsv(social, nullptr, reg);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("string labels are interned") {
  std::istringstream social("alice\tbob\nbob\tcarol\n");
  std::istringstream attrs("alice\tSchool\tStanford\ncarol\tSchool\tStanford\n");
  LabelRegistry reg;
  const SanGraph g = ReadSanTsv(social, &attrs, reg);
  CHECK(g.social_node_count() == 3);
  CHECK(g.attribute_node_count() == 1);
  CHECK(g.members(MakeAttr(0)).size() == 2);
  CHECK(g.SocialLabel(MakeSocial(2)) == "carol");
}

TEST_CASE("snapshot series loads in index order") {
  const auto root = std::filesystem::temp_directory_path() / "sanet_core_series";
  std::filesystem::remove_all(root);
  SanGraph g = testing::RandomSan(10, 2, 0.2, 0.5, 8);
  SaveSanDir(SnapshotDirName(root, 10), g);
  g.AddSocialLink(MakeSocial(0), MakeSocial(9));
  SaveSanDir(SnapshotDirName(root, 2), testing::RandomSan(10, 2, 0.1, 0.5, 8));
  const auto series = LoadSnapshotSeries(root);
  REQUIRE(series.size() == 2);
  CHECK(series[0].timestamp == 2);
  CHECK(series[1].timestamp == 10);
  CHECK(series[1].graph.has_value());
  std::filesystem::remove_all(root);
}

}  // namespace
}  // namespace sanet
