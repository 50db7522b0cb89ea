// Copyright 2026 The omegaset Authors
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


#include <gtest/gtest.h>

#include <functional>

#include "omegaset/error.hpp"
#include "omegaset/sheaf.hpp"
#include "omegaset/topos.hpp"
#include "pool.hpp"
#include "test_util.hpp"

namespace omegaset {
namespace {

using testing::chain3;
using testing::diamond;
using testing::two;

// Every presheaf with at most `max_count` sections per element, as raw
// Hasse-edge maps, composites checked by from_covers.
std::vector<Presheaf> all_presheaves(const AlgebraPtr& h, std::size_t max_count) {
  const auto edges = h->cover_pairs();  // (lower, upper)
  std::vector<Presheaf> out;
  std::vector<std::size_t> counts(h->size(), 0);
  while (true) {
    std::vector<std::vector<std::string>> names(h->size());
    for (Elem p : h->elements()) {
      for (std::size_t i = 0; i < counts[p.index]; ++i) names[p.index].push_back(std::to_string(i));
    }
    // Odometer over all maps on every edge.
    std::vector<std::vector<std::size_t>> maps;
    bool possible = true;
    for (const auto& [lo, hi] : edges) {
      maps.emplace_back(counts[hi.index], 0);
      possible = possible && (counts[hi.index] == 0 || counts[lo.index] > 0);
    }
    while (possible) {
      Presheaf::CoverMaps covers;
      for (std::size_t e = 0; e < edges.size(); ++e) covers[{edges[e].second, edges[e].first}] = maps[e];
      try {
        out.push_back(Presheaf::from_covers(h, names, covers));
      } catch (const InvalidPresheaf&) {
      }
      std::size_t e = 0;
      for (; e < edges.size(); ++e) {
        const std::size_t base = counts[edges[e].first.index];
        std::size_t i = 0;
        while (i < maps[e].size() && ++maps[e][i] == base) maps[e][i++] = 0;
        if (i < maps[e].size()) break;
      }
      if (e == edges.size()) break;
    }
    std::size_t pos = 0;
    while (pos < counts.size() && ++counts[pos] > max_count) counts[pos++] = 0;
    if (pos == counts.size()) break;
  }
  return out;
}

TEST(Sheaf, PresheafValidation) {
  auto d = diamond();
  const Elem mu = d->at("mu"), a = d->at("a"), b = d->at("b"), m = d->top();
  std::vector<std::vector<std::string>> names(4);
  names[mu.index] = {"u", "v"};
  names[a.index] = {"x"};
  names[b.index] = {"y"};
  names[m.index] = {"g"};
  Presheaf::CoverMaps covers{{{m, a}, {0}}, {{m, b}, {0}}, {{a, mu}, {0}}, {{b, mu}, {1}}};
  EXPECT_THROW(Presheaf::from_covers(d, names, covers), InvalidPresheaf);
  covers[{b, mu}] = {0};
  const Presheaf p = Presheaf::from_covers(d, names, covers);
  EXPECT_TRUE(validate_presheaf(p).empty());
  covers.erase({m, b});
  EXPECT_THROW(Presheaf::from_covers(d, names, covers), InvalidPresheaf);
}

TEST(Sheaf, MatchingFamilies) {
  auto c = chain3();
  const Presheaf one = terminal_presheaf(c);
  const Presheaf hp = representable(c, c->at("p"));
  for (Elem p : c->elements()) {
    const auto fams = matching_families(one, Sieve::maximal(*c, p));
    ASSERT_EQ(fams.size(), one.count(p));
    for (const auto& f : fams) EXPECT_EQ(amalgamate(one, f).size(), 1u);
  }
  // The empty sieve covers mu: one empty family, and a sheaf has exactly one
  // section there.
  const Sieve empty{c->bottom(), ElemSet{}};
  EXPECT_TRUE(territory_topology(*c).covers(empty));
  EXPECT_EQ(matching_families(hp, empty).size(), 1u);
  EXPECT_EQ(amalgamate(hp, matching_families(hp, empty).front()).size(), 1u);
}

TEST(Sheaf, SeparatedNonSheafOnDiamond) {
  auto d = diamond();
  const Elem mu = d->at("mu"), a = d->at("a"), b = d->at("b"), m = d->top();
  std::vector<std::vector<std::string>> names(4);
  names[mu.index] = {"*"};
  names[a.index] = {"x"};
  names[b.index] = {"y"};
  const Presheaf p = Presheaf::from_covers(d, names, {{{a, mu}, {0}}, {{b, mu}, {0}}});
  const Topology j = territory_topology(*d);
  EXPECT_TRUE(is_separated(p, j));
  const SheafCheck s = check_sheaf(p, j);
  ASSERT_FALSE(s.ok);
  EXPECT_EQ(s.witness->family.sieve.at, m);
  EXPECT_EQ(s.witness->amalgamations, 0u);
}

TEST(Sheaf, DoubledPointIsNotASheaf) {
  auto d = diamond();
  const Presheaf p = doubled_point(d);
  const SheafCheck s = check_sheaf(p, territory_topology(*d));
  ASSERT_FALSE(s.ok);
  EXPECT_EQ(s.witness->family.sieve.at, d->top());
  EXPECT_EQ(s.witness->amalgamations, 2u);
}

TEST(Sheaf, RepresentablesAreSheaves) {
  for (const auto& named : tools::enumerate_algebras(6)) {
    const Topology j = territory_topology(*named.algebra);
    for (Elem p : named.algebra->elements()) {
      EXPECT_TRUE(is_sheaf(representable(named.algebra, p), j)) << named.name;
    }
    EXPECT_TRUE(is_sheaf(terminal_presheaf(named.algebra), j));
    EXPECT_FALSE(is_sheaf(empty_presheaf(named.algebra), j));
  }
}

TEST(Sheaf, CheckAgreesWithOracle) {
  for (const AlgebraPtr& h : {two(), chain3(), diamond()}) {
    const Topology j = territory_topology(*h);
    const auto all = all_presheaves(h, h->size() == 4 ? 2 : 3);
    ASSERT_FALSE(all.empty());
    std::size_t sheaves = 0;
    for (const Presheaf& p : all) {
      EXPECT_TRUE(validate_presheaf(p).empty());
      const bool oracle = testing::is_sheaf_oracle(p);
      EXPECT_EQ(is_sheaf(p, j), oracle);
      sheaves += oracle;
    }
    EXPECT_GT(sheaves, 0u);
  }
}

TEST(Sheaf, TerminalCorrespondence) {
  auto c = chain3();
  const TSetPresheaf f = tset_to_presheaf(terminal(c));
  for (Elem p : c->elements()) EXPECT_EQ(f.presheaf.count(p), 1u);
  EXPECT_TRUE(isomorphic(f.presheaf, terminal_presheaf(c)));
  EXPECT_TRUE(find_tset_isomorphism(presheaf_to_tset(terminal_presheaf(c)), terminal(c)));
}

TEST(Sheaf, RepresentableToTSet) {
  auto c = chain3();
  for (Elem p : c->elements()) {
    const TSet t = presheaf_to_tset(representable(c, p));
    std::vector<std::string> names;
    std::vector<Elem> below = c->down(p).elements();
    for (Elem q : below) names.push_back(c->name(q));
    const TSet expected(c, names, [&](std::size_t x, std::size_t y) {
      return c->meet(below[x], below[y]);
    });
    EXPECT_TRUE(find_tset_isomorphism(t, expected).has_value()) << c->name(p);
  }
}

TEST(Sheaf, EmptyCarrierHasNoSheaf) {
  auto c = chain3();
  EXPECT_THROW(tset_to_presheaf(TSet(c, {}, std::vector<Elem>{})), PostulateRequired);
  EXPECT_THROW(presheaf_to_tset(empty_presheaf(c)), NotASheaf);
}

TEST(Sheaf, CompletedChainExample) {
  auto c = chain3();
  const TSet lone(c, {"x"}, std::vector<Elem>{c->at("p")});
  const TSetPresheaf f = tset_to_presheaf(singleton_completion(lone));
  EXPECT_EQ(f.presheaf.count(c->at("mu")), 1u);
  EXPECT_EQ(f.presheaf.count(c->at("p")), 1u);
  EXPECT_EQ(f.presheaf.count(c->at("M")), 0u);
  EXPECT_THROW(tset_to_presheaf(lone), PostulateRequired);
}

TEST(Sheaf, Sheafify) {
  auto c = chain3();
  const Topology j = territory_topology(*c);
  for (Elem p : c->elements()) {
    const Presheaf hp = representable(c, p);
    EXPECT_TRUE(isomorphic(sheafify(hp, j), hp));
  }
  // The unreal atom: sheafification supplies the missing mu-section.
  const TSet lone(c, {"x"}, std::vector<Elem>{c->at("p")});
  EXPECT_TRUE(isomorphic(sheafify(associated_presheaf(lone), j),
                         tset_to_presheaf(singleton_completion(lone)).presheaf));
}

TEST(Sheaf, SheafifyProperties) {
  for (const AlgebraPtr& h : {two(), chain3(), diamond()}) {
    const Topology j = territory_topology(*h);
    for (const Presheaf& p : all_presheaves(h, 2)) {
      const Presheaf s = sheafify(p, j);
      EXPECT_TRUE(testing::is_sheaf_oracle(s));
      if (testing::is_sheaf_oracle(p)) {
        EXPECT_TRUE(isomorphic(s, p));
      }
    }
  }
}

// Separated postulate-satisfying T-sets give sheaves, and the two
// translations are inverse up to isomorphism.
TEST(Sheaf, EquivalenceOverPool) {
  for (const auto& named : tools::enumerate_algebras(4)) {
    const Topology j = territory_topology(*named.algebra);
    for (const TSet& t : tools::enumerate_tsets(named.algebra, 3, {})) {
      const Presheaf f = tset_to_presheaf(t).presheaf;
      EXPECT_TRUE(testing::is_sheaf_oracle(f)) << named.name;
      EXPECT_TRUE(find_tset_isomorphism(presheaf_to_tset(f), t).has_value()) << named.name;
    }
    for (const Presheaf& s : tools::enumerate_sheaves(named.algebra, j, 4)) {
      EXPECT_TRUE(isomorphic(tset_to_presheaf(presheaf_to_tset(s)).presheaf, s)) << named.name;
    }
  }
}

}  // namespace
}  // namespace omegaset
