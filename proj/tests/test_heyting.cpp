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

#include "omegaset/error.hpp"
#include "omegaset/heyting.hpp"
#include "pool.hpp"
#include "test_util.hpp"

namespace omegaset {
namespace {

using testing::oracle_for;

PosetSpec spec(std::vector<std::string> names,
               std::vector<std::pair<std::string, std::string>> covers) {
  return PosetSpec{std::move(names), std::move(covers)};
}

TEST(Heyting, TwoElementChainIsBoolean) {
  const HeytingAlgebra h = algebras::two();
  EXPECT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.is_boolean());
  EXPECT_EQ(h.negate(h.bottom()), h.top());
  EXPECT_EQ(h.negate(h.top()), h.bottom());
}

TEST(Heyting, Chain3IsValidNotBoolean) {
  const HeytingAlgebra h = algebras::chain3();
  const Elem mu = h.at("mu"), p = h.at("p"), m = h.at("M");
  EXPECT_FALSE(h.is_boolean());
  EXPECT_EQ(h.implies(p, p), m);
  EXPECT_EQ(h.implies(m, p), p);
  EXPECT_EQ(h.implies(p, mu), mu);
  EXPECT_EQ(h.negate(p), mu);
  EXPECT_EQ(h.negate(h.negate(p)), m);
  EXPECT_NE(h.negate(h.negate(p)), p);
}

TEST(Heyting, DiamondIsBoolean) {
  const HeytingAlgebra h = algebras::diamond();
  EXPECT_TRUE(h.is_boolean());
  EXPECT_EQ(h.negate(h.at("a")), h.at("b"));
  EXPECT_EQ(h.envelope(ElemSet::single(h.at("a")) | ElemSet::single(h.at("b"))), h.top());
}

TEST(Heyting, Envelope) {
  const HeytingAlgebra h = algebras::chain3();
  EXPECT_EQ(h.envelope(ElemSet{}), h.bottom());
  EXPECT_EQ(h.envelope(ElemSet::single(h.at("mu")) | ElemSet::single(h.at("p"))), h.at("p"));
  EXPECT_EQ(h.envelope(h.all()), h.top());
}

TEST(Heyting, PentagonIsNotDistributive) {
  EXPECT_THROW(HeytingAlgebra::build(algebras::pentagon_spec()), NotDistributive);
  // The pentagon is still a lattice.
  EXPECT_NO_THROW(Lattice::build(algebras::pentagon_spec()));
}

TEST(Heyting, StructuralErrors) {
  EXPECT_THROW(HeytingAlgebra::build(spec({"a", "b"}, {{"a", "b"}, {"b", "a"}})), CycleError);
  EXPECT_THROW(HeytingAlgebra::build(spec({"a", "b", "M"}, {{"a", "M"}, {"b", "M"}})), NoBound);
  EXPECT_THROW(HeytingAlgebra::build(spec({"mu", "mu"}, {})), InvalidInput);
  EXPECT_THROW(HeytingAlgebra::build(spec({"mu", "M"}, {{"mu", "X"}})), InvalidInput);
  EXPECT_THROW(HeytingAlgebra::build(spec({"mu", ""}, {{"mu", ""}})), InvalidInput);
}

TEST(Heyting, RedundantCoversAreAccepted) {
  const HeytingAlgebra h =
      HeytingAlgebra::build(spec({"mu", "p", "M"}, {{"mu", "p"}, {"p", "M"}, {"mu", "M"}}));
  EXPECT_EQ(h.size(), 3u);
  EXPECT_TRUE(h.leq(h.at("mu"), h.at("M")));
}

TEST(Heyting, LargeAlgebraIsSampled) {
  const HeytingAlgebra big = algebras::chain(8);
  EXPECT_EQ(big.validity().mode, ValidityReport::Mode::kSampled);
  EXPECT_EQ(big.validity().subsets_checked, 10000u);
  EXPECT_EQ(big.validity().seed, ValidationOptions{}.seed);
  const HeytingAlgebra small = algebras::chain(6);
  EXPECT_EQ(small.validity().mode, ValidityReport::Mode::kExhaustive);
  EXPECT_EQ(small.validity().subsets_checked, 64u);
}

// Every operation against the brute-force order oracle, on every algebra of
// at most 6 elements.
TEST(Heyting, OperationsMatchOracle) {
  for (const auto& named : tools::enumerate_algebras(6)) {
    const HeytingAlgebra& h = *named.algebra;
    const auto o = oracle_for(h);
    for (Elem p : h.elements()) {
      for (Elem q : h.elements()) {
        EXPECT_EQ(h.leq(p, q), o.le[p.index][q.index]) << named.name;
        EXPECT_EQ(h.meet(p, q).index, *o.glb({p.index, q.index})) << named.name;
        EXPECT_EQ(h.join(p, q).index, *o.lub({p.index, q.index})) << named.name;
        EXPECT_EQ(h.implies(p, q).index, *o.implies(p.index, q.index)) << named.name;
      }
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.size()); ++bits) {
      std::vector<std::size_t> members;
      for (Elem e : ElemSet(bits).elements()) members.push_back(e.index);
      const std::size_t expected = members.empty() ? h.bottom().index : *o.lub(members);
      EXPECT_EQ(h.envelope(ElemSet(bits)).index, expected) << named.name;
    }
  }
}

// Adjunction, noncontradiction, p ≤ ¬¬p and the frame law, exhaustively.
TEST(Heyting, LawsHoldExhaustively) {
  for (const auto& named : tools::enumerate_algebras(6)) {
    const HeytingAlgebra& h = *named.algebra;
    for (Elem p : h.elements()) {
      EXPECT_EQ(h.meet(p, h.negate(p)), h.bottom());
      EXPECT_TRUE(h.leq(p, h.negate(h.negate(p))));
      for (Elem q : h.elements()) {
        for (Elem t : h.elements()) {
          EXPECT_EQ(h.leq(h.meet(p, t), q), h.leq(t, h.implies(p, q))) << named.name;
        }
      }
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.size()); ++bits) {
      for (Elem b : h.elements()) {
        ElemSet meets;
        for (Elem a : ElemSet(bits).elements()) meets.insert(h.meet(a, b));
        EXPECT_EQ(h.meet(h.envelope(ElemSet(bits)), b), h.envelope(meets)) << named.name;
      }
    }
  }
}

TEST(Heyting, BooleanIffDoubleNegationIsIdentity) {
  for (const auto& named : tools::enumerate_algebras(6)) {
    const HeytingAlgebra& h = *named.algebra;
    bool oracle = true;
    for (Elem p : h.elements()) oracle = oracle && h.implies(h.implies(p, h.bottom()), h.bottom()) == p;
    EXPECT_EQ(h.is_boolean(), oracle) << named.name;
  }
}

}  // namespace
}  // namespace omegaset
