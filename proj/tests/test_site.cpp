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

#include <algorithm>

#include "omegaset/error.hpp"
#include "omegaset/site.hpp"
#include "pool.hpp"
#include "test_util.hpp"

namespace omegaset {
namespace {

ElemSet set_of(const Lattice& l, std::initializer_list<const char*> names) {
  ElemSet s;
  for (const char* n : names) s.insert(l.at(n));
  return s;
}

TEST(Site, Territories) {
  const HeytingAlgebra c = algebras::chain3();
  const auto at_mu = territories(c, c.at("mu"));
  EXPECT_NE(std::find(at_mu.begin(), at_mu.end(), ElemSet{}), at_mu.end());
  EXPECT_NE(std::find(at_mu.begin(), at_mu.end(), set_of(c, {"mu"})), at_mu.end());
  EXPECT_EQ(territories(c, c.at("p")),
            (std::vector<ElemSet>{set_of(c, {"p"}), set_of(c, {"mu", "p"})}));

  const HeytingAlgebra d = algebras::diamond();
  const auto at_top = territories(d, d.top());
  EXPECT_NE(std::find(at_top.begin(), at_top.end(), set_of(d, {"a", "b"})), at_top.end());
}

TEST(Site, PullbackSieve) {
  const HeytingAlgebra c = algebras::chain3();
  const Elem p = c.at("p"), mu = c.at("mu"), m = c.top();
  const Sieve down_p = Sieve::maximal(c, p);
  EXPECT_EQ(pullback_sieve(c, down_p, mu).members, c.down(mu));
  const Sieve s{m, set_of(c, {"mu", "p"})};
  EXPECT_EQ(pullback_sieve(c, s, p).members, c.down(p));
  EXPECT_TRUE(pullback_sieve(c, Sieve{m, ElemSet{}}, p).members.empty());
  EXPECT_THROW(pullback_sieve(c, down_p, m), NotBelow);
}

TEST(Site, TerritoryTopologyMatchesDefinition) {
  for (const auto& named : tools::enumerate_algebras(6)) {
    const HeytingAlgebra& h = *named.algebra;
    const Topology j = territory_topology(h);
    EXPECT_TRUE(validate_topology(h, j).empty()) << named.name;
    EXPECT_TRUE(validate_basis(h, territory_basis(h)).empty()) << named.name;
    for (Elem p : h.elements()) {
      auto expected = testing::covering_sieves_oracle(h, p);
      std::sort(expected.begin(), expected.end(),
                [](ElemSet a, ElemSet b) { return a.bits() < b.bits(); });
      EXPECT_EQ(j.covering(p), expected) << named.name << " at " << h.name(p);
      for (const Sieve& s : sieves_on(h, p)) {
        EXPECT_EQ(j.covers(s), h.envelope(s.members) == p);
      }
    }
  }
}

TEST(Site, MaximalBasisGivesTrivialTopology) {
  const HeytingAlgebra h = algebras::diamond();
  Coverage basis(h.size());
  for (Elem p : h.elements()) basis[p.index] = {ElemSet::single(p)};
  const Topology j = topology_from_basis(h, basis);
  EXPECT_TRUE(validate_topology(h, j).empty());
  for (Elem p : h.elements()) {
    EXPECT_EQ(j.covering(p), (std::vector<ElemSet>{h.down(p)}));
  }
}

// Territories of the pentagon mu < a < b < M, mu < c < M are not stable:
// {a, c} covers M, but its meets with b are {a, mu}, which only cover a.
TEST(Site, PentagonBasisIsInvalid) {
  const Lattice n5 = Lattice::build(algebras::pentagon_spec());
  const Coverage basis = territory_basis(n5);
  const auto violations = validate_basis(n5, basis);
  ASSERT_FALSE(violations.empty());
  EXPECT_TRUE(std::any_of(violations.begin(), violations.end(),
                          [](const BasisViolation& v) { return v.condition == "stability"; }));
  EXPECT_THROW(topology_from_basis(n5, basis), BasisInvalid);
}

TEST(Site, Closure) {
  const HeytingAlgebra c = algebras::chain3();
  const Topology j = territory_topology(c);
  const Elem p = c.at("p"), m = c.top();
  EXPECT_TRUE(is_closed(c, Sieve::maximal(c, p), j));

  const Sieve mu_at_p{p, set_of(c, {"mu"})};
  EXPECT_TRUE(is_closed(c, mu_at_p, j));
  EXPECT_EQ(closure(c, mu_at_p, j), mu_at_p);

  const Sieve below_p{m, set_of(c, {"mu", "p"})};
  EXPECT_TRUE(is_closed(c, below_p, j));
  EXPECT_EQ(closure(c, below_p, j).members, c.down(p));

  // The empty sieve covers mu, so its closure contains mu.
  EXPECT_FALSE(is_closed(c, Sieve{m, ElemSet{}}, j));
  EXPECT_EQ(closure(c, Sieve{m, ElemSet{}}, j).members, c.down(c.bottom()));
}

// Closed sieves are exactly the principal downsets, and closure of S is
// the downset of its envelope.
TEST(Site, ClosedSievesArePrincipal) {
  for (const auto& named : tools::enumerate_algebras(6)) {
    const HeytingAlgebra& h = *named.algebra;
    const Topology j = territory_topology(h);
    for (Elem p : h.elements()) {
      std::vector<std::uint64_t> got, expected;
      for (const Sieve& s : closed_sieves(h, j, p)) got.push_back(s.members.bits());
      for (Elem s : h.down(p).elements()) expected.push_back(h.down(s).bits());
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(got, expected) << named.name;
      for (const Sieve& s : sieves_on(h, p)) {
        EXPECT_EQ(closure(h, s, j).members, h.down(h.envelope(s.members)));
      }
    }
  }
}

}  // namespace
}  // namespace omegaset
