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
#include "omegaset/sheaf.hpp"
#include "omegaset/topos.hpp"
#include "pool.hpp"
#include "test_util.hpp"

namespace omegaset {
namespace {

using testing::chain3;
using testing::diamond;
using testing::two;

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

bool same_up_to_indiscernibility(const TSet& b, const TRelation& x, const TRelation& y) {
  for (std::size_t i = 0; i < x.map.size(); ++i) {
    if (!indiscernible(b, x(i), y(i))) return false;
  }
  return true;
}

// A set over the two-element algebra: n global points and the zero.
Presheaf finite_set(const AlgebraPtr& h, std::size_t n) {
  std::vector<std::vector<std::string>> names(2);
  names[h->bottom().index] = {"*"};
  for (std::size_t i = 0; i < n; ++i) names[h->top().index].push_back("x" + std::to_string(i));
  return Presheaf::from_covers(h, names, {{{h->top(), h->bottom()}, std::vector<std::size_t>(n, 0)}});
}

TEST(ToposTSet, Terminal) {
  auto c = chain3();
  const Topology j = territory_topology(*c);
  for (const TSet& a : tools::enumerate_tsets(c, 3, {})) {
    EXPECT_EQ(hom_set(a, terminal(c)).size(), 1u);
    EXPECT_EQ(hom_set(a, terminal(c)).front(), to_terminal(a));
  }
  EXPECT_EQ(enumerate_subsheaves(terminal_presheaf(c), j).size(), 3u);
}

TEST(ToposTSet, Product) {
  auto c = chain3();
  const TSet one = terminal(c);
  const auto pool = tools::enumerate_tsets(c, 2, {});
  for (const TSet& a : pool) {
    const TSetCone p = product(a, one);
    EXPECT_EQ(p.object.size(), a.size() * one.size());
    EXPECT_TRUE(is_relation(p.object, a, p.first));
    EXPECT_TRUE(is_relation(p.object, one, p.second));
    EXPECT_TRUE(find_tset_isomorphism(separated_cone(p).object, a).has_value());
    for (const TSet& b : pool) {
      const TSetCone cone = separated_cone(product(a, b));
      const CheckResult r = check_tset_cone("product", a, b, cone, pool,
                                            [](const TSet&, const TRelation&, const TRelation&) {
                                              return true;
                                            });
      EXPECT_TRUE(r.pass) << r.witness;
    }
  }
}

TEST(ToposTSet, Graph) {
  auto c = chain3();
  const TSet one = terminal(c);
  const auto pool = tools::enumerate_tsets(c, 2, {});
  for (const TSet& a : pool) {
    EXPECT_TRUE(find_tset_isomorphism(graph(a, a, identity_relation(a)).object, a).has_value());
    EXPECT_TRUE(find_tset_isomorphism(graph(a, one, to_terminal(a)).object, a).has_value());
    for (const TSet& b : pool) {
      for (const TRelation& rho : hom_set(a, b)) {
        const TSetCone g = graph(a, b, rho);
        const CheckResult r = check_tset_cone(
            "graph", a, b, g, pool, [&](const TSet&, const TRelation& u, const TRelation& v) {
              return same_up_to_indiscernibility(b, compose(rho, u), v);
            });
        EXPECT_TRUE(r.pass) << r.witness;
        // The pullback of (rho, id) is the graph again.
        const TSetCone pb = separated_cone(pullback(a, b, b, rho, identity_relation(b)));
        EXPECT_TRUE(find_tset_isomorphism(pb.object, g.object).has_value());
      }
    }
  }
}

TEST(ToposTSet, PullbackOverTerminalIsProduct) {
  auto c = chain3();
  const TSet one = terminal(c);
  const auto pool = tools::enumerate_tsets(c, 2, {});
  for (const TSet& a : pool) {
    for (const TSet& b : pool) {
      const TSetCone pb = separated_cone(pullback(a, b, one, to_terminal(a), to_terminal(b)));
      const TSetCone pr = separated_cone(product(a, b));
      EXPECT_TRUE(find_tset_isomorphism(pb.object, pr.object).has_value());
    }
  }
}

// Two disjoint global points of C: their pullback is the initial object,
// a single element of existence mu.
TEST(ToposTSet, DisjointSubobjectsPullBackToInitial) {
  auto h = two();
  const Elem mu = h->bottom(), m = h->top();
  const TSet cset(h, {"x", "y", "z"}, [&](std::size_t x, std::size_t y) {
    return x == y ? (x == 2 ? mu : m) : mu;
  });
  const TSet u(h, {"x", "z"}, std::vector<Elem>{m, mu, mu, mu});
  const TSet v(h, {"y", "z"}, std::vector<Elem>{m, mu, mu, mu});
  const TRelation iu{{0, 2}}, iv{{1, 2}};
  ASSERT_TRUE(is_relation(u, cset, iu));
  ASSERT_TRUE(is_relation(v, cset, iv));
  const TSetCone pb = pullback(u, v, cset, iu, iv);
  ASSERT_EQ(pb.object.size(), 1u);
  EXPECT_EQ(pb.object.existence(0), mu);
}

TEST(ToposPresheaf, ExponentialUnits) {
  for (const AlgebraPtr& h : {two(), chain3()}) {
    const Topology j = territory_topology(*h);
    const Presheaf one = terminal_presheaf(h);
    for (const Presheaf& y : tools::enumerate_sheaves(h, j, 3)) {
      EXPECT_TRUE(isomorphic(exponential(one, y).object, y));
      EXPECT_TRUE(isomorphic(exponential(y, one).object, one));
    }
  }
}

TEST(ToposPresheaf, SetExponential) {
  auto h = two();
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      const Exponential e = exponential(finite_set(h, n), finite_set(h, m));
      EXPECT_EQ(e.object.count(h->top()), power(m, n));
      EXPECT_EQ(e.object.count(h->bottom()), 1u);
      EXPECT_EQ(enumerate_nats(finite_set(h, n), finite_set(h, m)).size(), power(m, n));
    }
  }
}

TEST(ToposPresheaf, ProductAndPullbackCounts) {
  auto c = chain3();
  const Topology j = territory_topology(*c);
  const auto sheaves = tools::enumerate_sheaves(c, j, 3);
  for (const Presheaf& a : sheaves) {
    for (const Presheaf& b : sheaves) {
      const Cone p = product(a, b);
      for (Elem e : c->elements()) EXPECT_EQ(p.object.count(e), a.count(e) * b.count(e));
      EXPECT_TRUE(is_natural(p.object, a, p.first));
      EXPECT_TRUE(is_natural(p.object, b, p.second));
      EXPECT_TRUE(testing::is_sheaf_oracle(p.object));
    }
  }
}

TEST(ToposPresheaf, OmegaCounts) {
  auto c = chain3();
  const Omega o = omega(c, territory_topology(*c));
  EXPECT_EQ(o.object.count(c->at("mu")), 1u);
  EXPECT_EQ(o.object.count(c->at("p")), 2u);
  EXPECT_EQ(o.object.count(c->at("M")), 3u);
  EXPECT_TRUE(testing::is_sheaf_oracle(o.object));

  auto t = two();
  const Omega ot = omega(t, territory_topology(*t));
  ASSERT_EQ(ot.sieves[t->top().index].size(), 2u);
  std::vector<std::uint64_t> got;
  for (const Sieve& s : ot.sieves[t->top().index]) got.push_back(s.members.bits());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::uint64_t>{t->down(t->bottom()).bits(), t->down(t->top()).bits()}));
}

TEST(ToposPresheaf, Classify) {
  auto c = chain3();
  const Topology j = territory_topology(*c);
  const Omega o = omega(c, j);
  const Presheaf one = terminal_presheaf(c);

  // The whole object is classified by truth.
  for (const Presheaf& a : tools::enumerate_sheaves(c, j, 3)) {
    std::vector<std::vector<std::size_t>> all(c->size());
    for (Elem p : c->elements()) {
      for (std::size_t s = 0; s < a.count(p); ++s) all[p.index].push_back(s);
    }
    const NatTransform phi = classify(make_subobject(a, all), o);
    for (Elem p : c->elements()) {
      for (std::size_t s = 0; s < a.count(p); ++s) EXPECT_EQ(phi(p, s), o.truth(p, 0));
    }
  }

  auto subterminal = [&](Elem top) {
    std::vector<std::vector<std::size_t>> members(c->size());
    for (Elem q : c->down(top).elements()) members[q.index] = {0};
    return classify(make_subobject(one, members), o);
  };
  const NatTransform hp = subterminal(c->at("p"));
  EXPECT_EQ(o.sieves[c->top().index][hp(c->top(), 0)].members, c->down(c->at("p")));
  const NatTransform hmu = subterminal(c->bottom());
  EXPECT_EQ(o.sieves[c->at("p").index][hmu(c->at("p"), 0)].members, c->down(c->bottom()));

  // The empty sub-presheaf is not closed: the empty sieve covers mu.
  EXPECT_THROW(classify(make_subobject(one, std::vector<std::vector<std::size_t>>(3)), o),
               NotSubobject);
}

TEST(ToposPresheaf, AxiomsOnTerminalPool) {
  auto c = chain3();
  const auto results = check_topos_axioms({terminal_presheaf(c)}, {"1"}, territory_topology(*c));
  EXPECT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.check << " " << r.instance << " " << r.witness;
}

// Over the two-element algebra, hom counts are those of finite sets.
TEST(ToposPresheaf, TwoElementPoolIsSets) {
  auto h = two();
  const Topology j = territory_topology(*h);
  const auto pool = tools::enumerate_sheaves(h, j, 3);
  ASSERT_EQ(pool.size(), 3u);  // sets of size 0, 1, 2
  for (const Presheaf& x : pool) {
    for (const Presheaf& y : pool) {
      EXPECT_EQ(enumerate_nats(x, y).size(), power(y.count(h->top()), x.count(h->top())));
    }
  }
  std::vector<std::string> names = {"A", "B", "C"};
  for (const auto& r : check_topos_axioms(pool, names, j)) {
    EXPECT_TRUE(r.pass) << r.check << " " << r.instance << " " << r.witness;
  }
}

TEST(ToposPresheaf, Exposition) {
  auto h = two();
  const ExpositionReport r2 = exposition_counterexample(h, 2);
  EXPECT_EQ(r2.mediating_maps, power(4, 8));
  EXPECT_TRUE(r2.refuted);
  EXPECT_EQ(r2.graph_mediators, 1u);
  EXPECT_TRUE(r2.graph_universal);
  EXPECT_TRUE(all_pass(r2.results));

  const ExpositionReport r1 = exposition_counterexample(h, 1);
  EXPECT_EQ(r1.mediating_maps, 1u);
  EXPECT_FALSE(r1.refuted);
  EXPECT_EQ(r1.graph_mediators, 1u);
}

TEST(ToposPresheaf, SG) {
  auto c = chain3();
  const Topology j = territory_topology(*c);
  const Omega o = omega(c, j);
  const Presheaf one = terminal_presheaf(c);
  EXPECT_EQ(enumerate_nats(one, o.object).size(), 3u);
  const SGReport r = sg_check({one, o.object}, {"1", "Omega"}, j);
  EXPECT_TRUE(r.ok);
  EXPECT_GE(r.pairs_checked, 3u);  // the three global truth values, pairwise

  auto d = diamond();
  const Topology jd = territory_topology(*d);
  const SGReport bad = sg_check({terminal_presheaf(d), doubled_point(d)}, {"1", "D"}, jd);
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(is_sheaf(doubled_point(d), jd));
}

}  // namespace
}  // namespace omegaset
