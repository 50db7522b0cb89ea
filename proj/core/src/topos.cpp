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

#include "omegaset/topos.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "omegaset/error.hpp"

namespace omegaset {

namespace {

bool same_up_to_indiscernibility(const TSet& t, const TRelation& a, const TRelation& b) {
  for (std::size_t x = 0; x < a.map.size(); ++x) {
    if (a(x) != b(x) && !indiscernible(t, a(x), b(x))) return false;
  }
  return true;
}

std::string render_relation(const TSet& source, const TSet& target, const TRelation& r) {
  std::string out;
  for (std::size_t x = 0; x < r.map.size(); ++x) {
    if (x) out += ", ";
    out += source.name(x) + "->" + target.name(r(x));
  }
  return "{" + out + "}";
}

std::string render_nat(const Presheaf& source, const Presheaf& target, const NatTransform& n) {
  const HeytingAlgebra& h = source.algebra();
  std::string out;
  for (Elem p : h.ascending()) {
    for (std::size_t s = 0; s < source.count(p); ++s) {
      if (!out.empty()) out += ", ";
      out += source.section_name(p, s) + "->" + target.section_name(p, n(p, s));
    }
  }
  return "{" + out + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// T-sets.

TSet terminal(AlgebraPtr algebra) {
  const HeytingAlgebra& h = *algebra;
  return TSet(algebra, h.names(),
              [&](std::size_t p, std::size_t q) { return h.meet(Elem(p), Elem(q)); });
}

TRelation to_terminal(const TSet& a) {
  TRelation r;
  for (std::size_t x = 0; x < a.size(); ++x) r.map.push_back(a.existence(x).index);
  return r;
}

namespace {

TSetCone pair_cone(const TSet& a, const TSet& b,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const HeytingAlgebra& h = a.algebra();
  std::vector<std::string> names;
  TSetCone cone{TSet(a.algebra_ptr(), {}, std::vector<Elem>{}), {}, {}};
  // The legs localise each component to the pair's existence Ea ∧ Eb.
  auto leg = [&](const TSet& t, std::size_t x, Elem e) {
    return t.existence(x) == e ? x : localise_element(t, x, e);
  };
  for (const auto& [x, y] : pairs) {
    names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    const Elem e = h.meet(a.existence(x), b.existence(y));
    cone.first.map.push_back(leg(a, x, e));
    cone.second.map.push_back(leg(b, y, e));
  }
  cone.object = TSet(a.algebra_ptr(), std::move(names), [&](std::size_t i, std::size_t j) {
    return h.meet(a.id(pairs[i].first, pairs[j].first), b.id(pairs[i].second, pairs[j].second));
  });
  return cone;
}

}  // namespace

TSetCone product(const TSet& a, const TSet& b) {
  if (a.algebra().names() != b.algebra().names()) {
    throw InvalidInput("product of T-sets over different algebras");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) pairs.emplace_back(x, y);
  }
  return pair_cone(a, b, pairs);
}

TSetCone graph(const TSet& a, const TSet& b, const TRelation& rho) {
  if (auto report = validate_relation(a, b, rho); !report.ok()) {
    throw InvalidInput("graph of an invalid relation: " + report.violations.front().rule);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < a.size(); ++x) pairs.emplace_back(x, rho(x));
  return pair_cone(a, b, pairs);
}

TSetCone pullback(const TSet& a, const TSet& b, const TSet& c, const TRelation& f,
                  const TRelation& g) {
  const HeytingAlgebra& h = a.algebra();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      const Elem d = h.meet(c.id(f(x), g(y)), h.meet(a.existence(x), b.existence(y)));
      const std::pair pair{localise_element(a, x, d), localise_element(b, y, d)};
      if (seen.insert(pair).second) pairs.push_back(pair);
    }
  }
  return pair_cone(a, b, pairs);
}

TSetCone separated_cone(const TSetCone& cone) {
  SeparatedQuotient q = separated_quotient(cone.object);
  TSetCone out{std::move(q.quotient), {}, {}};
  for (const auto& members : q.members) {
    out.first.map.push_back(cone.first(members.front()));
    out.second.map.push_back(cone.second(members.front()));
  }
  return out;
}

CheckResult check_tset_cone(const std::string& check, const TSet& a, const TSet& b,
                            const TSetCone& cone, const std::vector<TSet>& pool,
                            const std::function<bool(const TSet&, const TRelation&,
                                                     const TRelation&)>& commutes,
                            const EnumerationGuard& guard) {
  CheckResult result{check, "", true, ""};
  for (std::size_t w = 0; w < pool.size() && result.pass; ++w) {
    const TSet& ws = pool[w];
    const auto us = hom_set(ws, a, guard);
    const auto vs = hom_set(ws, b, guard);
    const auto ms = hom_set(ws, cone.object, guard);
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (!commutes(ws, u, v)) continue;
        std::size_t count = 0;
        for (const auto& m : ms) {
          if (same_up_to_indiscernibility(a, compose(cone.first, m), u) &&
              same_up_to_indiscernibility(b, compose(cone.second, m), v)) {
            ++count;
          }
        }
        if (count != 1) {
          result.pass = false;
          result.witness = "W=pool[" + std::to_string(w) + "] u=" + render_relation(ws, a, u) +
                           " v=" + render_relation(ws, b, v) +
                           " mediators=" + std::to_string(count);
          return result;
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Presheaves.

namespace {

// Sections of a presheaf built from tuples, with index lookup per element.
struct Indexed {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> items;
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index;
};

Cone pair_presheaf(const Presheaf& a, const Presheaf& b, const Indexed& sections) {
  const HeytingAlgebra& h = a.algebra();
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names(h.size());
  Cone cone{Presheaf(a.algebra_ptr(), std::vector<std::size_t>(h.size(), 0),
                     [](Elem, Elem, std::size_t) { return std::size_t{0}; }),
            {},
            {}};
  cone.first.components.resize(h.size());
  cone.second.components.resize(h.size());
  for (Elem p : h.elements()) {
    counts.push_back(sections.items[p.index].size());
    for (const auto& [x, y] : sections.items[p.index]) {
      names[p.index].push_back("(" + a.section_name(p, x) + "," + b.section_name(p, y) + ")");
      cone.first.components[p.index].push_back(x);
      cone.second.components[p.index].push_back(y);
    }
  }
  cone.object = Presheaf(
      a.algebra_ptr(), counts,
      [&](Elem p, Elem q, std::size_t s) {
        const auto [x, y] = sections.items[p.index][s];
        return sections.index[q.index].at({a.restrict(p, q, x), b.restrict(p, q, y)});
      },
      names);
  return cone;
}

Indexed make_indexed(const HeytingAlgebra& h) {
  Indexed out;
  out.items.resize(h.size());
  out.index.resize(h.size());
  return out;
}

void add_item(Indexed& ix, Elem p, std::size_t x, std::size_t y) {
  ix.index[p.index].emplace(std::pair{x, y}, ix.items[p.index].size());
  ix.items[p.index].emplace_back(x, y);
}

}  // namespace

Cone product(const Presheaf& a, const Presheaf& b) {
  const HeytingAlgebra& h = a.algebra();
  Indexed ix = make_indexed(h);
  for (Elem p : h.elements()) {
    for (std::size_t x = 0; x < a.count(p); ++x) {
      for (std::size_t y = 0; y < b.count(p); ++y) add_item(ix, p, x, y);
    }
  }
  return pair_presheaf(a, b, ix);
}

Cone pullback(const Presheaf& x, const Presheaf& y, const Presheaf& z, const NatTransform& f,
              const NatTransform& g) {
  if (!is_natural(x, z, f) || !is_natural(y, z, g)) {
    throw InvalidInput("pullback of non-natural arrows");
  }
  const HeytingAlgebra& h = x.algebra();
  Indexed ix = make_indexed(h);
  for (Elem p : h.elements()) {
    for (std::size_t s = 0; s < x.count(p); ++s) {
      for (std::size_t t = 0; t < y.count(p); ++t) {
        if (f(p, s) == g(p, t)) add_item(ix, p, s, t);
      }
    }
  }
  return pair_presheaf(x, y, ix);
}

NatTransform product_map(const Presheaf& a, const Presheaf& b, const Presheaf& c,
                         const Presheaf& d, const NatTransform& u, const NatTransform& v) {
  const HeytingAlgebra& h = a.algebra();
  NatTransform out;
  out.components.resize(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t x = 0; x < a.count(p); ++x) {
      for (std::size_t y = 0; y < b.count(p); ++y) {
        out.components[p.index].push_back(u(p, x) * d.count(p) + v(p, y));
      }
    }
  }
  (void)c;
  return out;
}

namespace {

// h_p × X: X(r) for r ≤ p, empty elsewhere.
Presheaf restricted_to_down(const Presheaf& x, Elem p) {
  const HeytingAlgebra& h = x.algebra();
  std::vector<std::size_t> counts;
  for (Elem r : h.elements()) counts.push_back(h.leq(r, p) ? x.count(r) : 0);
  return Presheaf(x.algebra_ptr(), counts,
                  [&](Elem r, Elem q, std::size_t s) { return x.restrict(r, q, s); });
}

NatTransform truncate(const HeytingAlgebra& h, const NatTransform& theta, Elem q) {
  NatTransform out = theta;
  for (Elem r : h.elements()) {
    if (!h.leq(r, q)) out.components[r.index].clear();
  }
  return out;
}

}  // namespace

Exponential exponential(const Presheaf& x, const Presheaf& y, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = x.algebra();
  std::vector<std::vector<NatTransform>> transformations(h.size());
  std::vector<std::map<NatTransform, std::size_t>> index(h.size());
  for (Elem p : h.elements()) {
    transformations[p.index] = enumerate_nats(restricted_to_down(x, p), y, guard);
    for (std::size_t i = 0; i < transformations[p.index].size(); ++i) {
      index[p.index].emplace(transformations[p.index][i], i);
    }
  }
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names(h.size());
  for (Elem p : h.elements()) {
    counts.push_back(transformations[p.index].size());
    for (std::size_t i = 0; i < counts.back(); ++i) {
      names[p.index].push_back("^" + h.name(p) + "#" + std::to_string(i));
    }
  }
  Presheaf object(
      x.algebra_ptr(), counts,
      [&](Elem p, Elem q, std::size_t s) {
        return index[q.index].at(truncate(h, transformations[p.index][s], q));
      },
      names);
  Cone domain = product(object, x);
  NatTransform eval;
  eval.components.resize(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t t = 0; t < object.count(p); ++t) {
      for (std::size_t s = 0; s < x.count(p); ++s) {
        eval.components[p.index].push_back(transformations[p.index][t](p, s));
      }
    }
  }
  return Exponential{std::move(object), std::move(transformations), std::move(domain),
                     std::move(eval)};
}

NatTransform transpose(const Exponential& e, const Presheaf& z, const Presheaf& x,
                       const NatTransform& k) {
  const HeytingAlgebra& h = z.algebra();
  NatTransform out;
  out.components.resize(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t s = 0; s < z.count(p); ++s) {
      NatTransform theta;
      theta.components.resize(h.size());
      for (Elem r : h.elements()) {
        if (!h.leq(r, p)) continue;
        const std::size_t zr = z.restrict(p, r, s);
        for (std::size_t xs = 0; xs < x.count(r); ++xs) {
          theta.components[r.index].push_back(k(r, zr * x.count(r) + xs));
        }
      }
      const auto& candidates = e.transformations[p.index];
      const auto it = std::find(candidates.begin(), candidates.end(), theta);
      if (it == candidates.end()) throw InvalidInput("transpose of a non-natural arrow");
      out.components[p.index].push_back(static_cast<std::size_t>(it - candidates.begin()));
    }
  }
  return out;
}

NatTransform untranspose(const Exponential& e, const Presheaf& z, const Presheaf& x,
                         const NatTransform& g) {
  const HeytingAlgebra& h = z.algebra();
  NatTransform out;
  out.components.resize(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t s = 0; s < z.count(p); ++s) {
      for (std::size_t xs = 0; xs < x.count(p); ++xs) {
        out.components[p.index].push_back(e.transformations[p.index][g(p, s)](p, xs));
      }
    }
  }
  return out;
}

Omega omega(AlgebraPtr algebra, const Topology& j) {
  const HeytingAlgebra& h = *algebra;
  Omega out{empty_presheaf(algebra), {}, std::vector<std::vector<Sieve>>(h.size())};
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names(h.size());
  out.truth.components.resize(h.size());
  for (Elem p : h.elements()) {
    out.sieves[p.index] = closed_sieves(h, j, p);
    counts.push_back(out.sieves[p.index].size());
    for (const Sieve& s : out.sieves[p.index]) names[p.index].push_back(format_set(h, s.members));
    const auto top = std::find(out.sieves[p.index].begin(), out.sieves[p.index].end(),
                               Sieve::maximal(h, p));
    out.truth.components[p.index].push_back(
        static_cast<std::size_t>(top - out.sieves[p.index].begin()));
  }
  const auto& sieves = out.sieves;
  out.object = Presheaf(
      algebra, counts,
      [&](Elem p, Elem q, std::size_t s) {
        const Sieve pulled = pullback_sieve(h, sieves[p.index][s], q);
        const auto it = std::find(sieves[q.index].begin(), sieves[q.index].end(), pulled);
        if (it == sieves[q.index].end()) {
          throw InvalidInput("pullback of a closed sieve is not closed");
        }
        return static_cast<std::size_t>(it - sieves[q.index].begin());
      },
      names);
  return out;
}

SubobjectInclusion make_subobject(const Presheaf& parent,
                                  const std::vector<std::vector<std::size_t>>& members) {
  const HeytingAlgebra& h = parent.algebra();
  if (members.size() != h.size()) throw NotSubobject("selection has the wrong shape");
  std::vector<std::map<std::size_t, std::size_t>> index(h.size());
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t s : members[p.index]) {
      if (s >= parent.count(p)) throw NotSubobject("selected section out of range");
      if (!index[p.index].emplace(s, index[p.index].size()).second) {
        throw NotSubobject("section selected twice");
      }
      names[p.index].push_back(parent.section_name(p, s));
    }
    counts.push_back(members[p.index].size());
  }
  for (Elem p : h.elements()) {
    for (Elem q : h.down(p).elements()) {
      for (std::size_t s : members[p.index]) {
        if (!index[q.index].count(parent.restrict(p, q, s))) {
          throw NotSubobject("selection not closed under restriction " + h.name(p) + " > " +
                             h.name(q));
        }
      }
    }
  }
  Presheaf sub(
      parent.algebra_ptr(), counts,
      [&](Elem p, Elem q, std::size_t s) {
        return index[q.index].at(parent.restrict(p, q, members[p.index][s]));
      },
      names);
  return {std::move(sub), parent, NatTransform{members}};
}

std::vector<SubobjectInclusion> enumerate_subsheaves(const Presheaf& a, const Topology& j,
                                                     const EnumerationGuard& guard) {
  const HeytingAlgebra& h = a.algebra();
  std::vector<std::pair<Elem, std::size_t>> slots;
  for (Elem p : h.ascending()) {
    for (std::size_t s = 0; s < a.count(p); ++s) slots.emplace_back(p, s);
  }
  if (slots.size() >= 63 || (std::uint64_t{1} << slots.size()) > guard.limit) {
    throw SizeGuard("subobject enumeration exceeds the enumeration guard");
  }
  std::vector<SubobjectInclusion> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> chosen(h.size());
    for (Elem p : h.elements()) chosen[p.index].assign(a.count(p), false);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) chosen[slots[i].first.index][slots[i].second] = true;
    }
    bool closed = true;
    for (std::size_t i = 0; i < slots.size() && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      const auto [p, s] = slots[i];
      for (Elem q : h.down(p).elements()) {
        if (!chosen[q.index][a.restrict(p, q, s)]) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<std::vector<std::size_t>> members(h.size());
    for (Elem p : h.elements()) {
      for (std::size_t s = 0; s < a.count(p); ++s) {
        if (chosen[p.index][s]) members[p.index].push_back(s);
      }
    }
    SubobjectInclusion inc = make_subobject(a, members);
    if (is_sheaf(inc.sub, j)) out.push_back(std::move(inc));
  }
  return out;
}

NatTransform classify(const SubobjectInclusion& inc, const Omega& om) {
  const Presheaf& a = inc.parent;
  const HeytingAlgebra& h = a.algebra();
  if (!is_natural(inc.sub, a, inc.inclusion)) throw NotSubobject("inclusion is not natural");
  std::vector<std::vector<bool>> in_image(h.size());
  for (Elem p : h.elements()) {
    in_image[p.index].assign(a.count(p), false);
    for (std::size_t s = 0; s < inc.sub.count(p); ++s) {
      auto&& slot = in_image[p.index][inc.inclusion(p, s)];
      if (slot) throw NotSubobject("inclusion is not injective at " + h.name(p));
      slot = true;
    }
  }
  NatTransform phi;
  phi.components.resize(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t x = 0; x < a.count(p); ++x) {
      Sieve s{p, ElemSet{}};
      for (Elem q : h.down(p).elements()) {
        if (in_image[q.index][a.restrict(p, q, x)]) s.members.insert(q);
      }
      const auto& candidates = om.sieves[p.index];
      const auto it = std::find(candidates.begin(), candidates.end(), s);
      if (it == candidates.end()) {
        throw NotSubobject("classifying sieve " + format_set(h, s.members) + " at " + h.name(p) +
                           " is not closed");
      }
      phi.components[p.index].push_back(static_cast<std::size_t>(it - candidates.begin()));
    }
  }
  return phi;
}

std::vector<std::vector<std::size_t>> truth_preimage(const Presheaf& a, const Omega& om,
                                                     const NatTransform& theta) {
  const HeytingAlgebra& h = a.algebra();
  std::vector<std::vector<std::size_t>> out(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t s = 0; s < a.count(p); ++s) {
      if (theta(p, s) == om.truth(p, 0)) out[p.index].push_back(s);
    }
  }
  return out;
}

namespace {

// Hom(W, P) → target pairs via the legs must be injective and hit exactly
// `expected` pairs; with the legs landing in the cones this is a bijection.
CheckResult check_cone_bijection(const std::string& check, const std::string& instance,
                                 const Cone& cone, const std::vector<Presheaf>& pool,
                                 const std::function<std::uint64_t(const Presheaf&)>& cones,
                                 const EnumerationGuard& guard) {
  CheckResult result{check, instance, true, ""};
  for (std::size_t w = 0; w < pool.size(); ++w) {
    const auto ms = enumerate_nats(pool[w], cone.object, guard);
    std::set<std::pair<NatTransform, NatTransform>> images;
    for (const auto& m : ms) {
      if (!images.emplace(compose(cone.first, m), compose(cone.second, m)).second) {
        result.pass = false;
        result.witness = "W=pool[" + std::to_string(w) + "] two mediators share legs, one is " +
                         render_nat(pool[w], cone.object, m);
        return result;
      }
    }
    const std::uint64_t expected = cones(pool[w]);
    if (images.size() != expected) {
      result.pass = false;
      result.witness = "W=pool[" + std::to_string(w) + "] cones=" + std::to_string(expected) +
                       " mediated=" + std::to_string(images.size());
      return result;
    }
  }
  return result;
}

}  // namespace

CheckResult check_product(const std::string& instance, const Presheaf& a, const Presheaf& b,
                          const Cone& cone, const std::vector<Presheaf>& pool,
                          const EnumerationGuard& guard) {
  return check_cone_bijection(
      "topos.product", instance, cone, pool,
      [&](const Presheaf& w) {
        return static_cast<std::uint64_t>(enumerate_nats(w, a, guard).size()) *
               enumerate_nats(w, b, guard).size();
      },
      guard);
}

CheckResult check_pullback(const std::string& instance, const Presheaf& x, const Presheaf& y,
                           const Presheaf& z, const NatTransform& f, const NatTransform& g,
                           const Cone& cone, const std::vector<Presheaf>& pool,
                           const EnumerationGuard& guard) {
  (void)z;
  return check_cone_bijection(
      "topos.pullback", instance, cone, pool,
      [&](const Presheaf& w) {
        const auto us = enumerate_nats(w, x, guard);
        const auto vs = enumerate_nats(w, y, guard);
        std::uint64_t n = 0;
        for (const auto& u : us) {
          const NatTransform fu = compose(f, u);
          for (const auto& v : vs) n += compose(g, v) == fu;
        }
        return n;
      },
      guard);
}

CheckResult check_exponential(const std::string& instance, const Presheaf& x, const Presheaf& y,
                              const Exponential& e, const std::vector<Presheaf>& pool,
                              const Topology& j, const EnumerationGuard& guard) {
  CheckResult result{"topos.exponential", instance, true, ""};
  auto fail = [&](std::string why) {
    result.pass = false;
    result.witness = std::move(why);
    return result;
  };
  if (!is_sheaf(e.object, j)) return fail("Y^X is not a sheaf");
  if (!is_natural(e.eval_domain.object, y, e.eval)) return fail("evaluation is not natural");
  for (std::size_t w = 0; w < pool.size(); ++w) {
    const Presheaf& z = pool[w];
    const std::string at = "Z=pool[" + std::to_string(w) + "] ";
    const Cone zx = product(z, x);
    const auto ks = enumerate_nats(zx.object, y, guard);
    const auto gs = enumerate_nats(z, e.object, guard);
    if (ks.size() != gs.size()) {
      return fail(at + "|Hom(ZxX,Y)|=" + std::to_string(ks.size()) +
                  " |Hom(Z,Y^X)|=" + std::to_string(gs.size()));
    }
    std::vector<NatTransform> transposed;
    for (const auto& k : ks) {
      NatTransform t = transpose(e, z, x, k);
      if (!is_natural(z, e.object, t)) return fail(at + "transpose is not natural");
      if (untranspose(e, z, x, t) != k) return fail(at + "untranspose(transpose(k)) != k");
      transposed.push_back(std::move(t));
    }
    for (const auto& g : gs) {
      const NatTransform k = untranspose(e, z, x, g);
      if (!is_natural(zx.object, y, k)) return fail(at + "untranspose is not natural");
      // ev ∘ (g × id) computed through the evaluation arrow agrees.
      const NatTransform via_eval =
          compose(e.eval, product_map(z, x, e.object, x, g, identity_nat(x)));
      if (via_eval != k) return fail(at + "ev o (g x id) disagrees with untranspose");
      if (transpose(e, z, x, k) != g) return fail(at + "transpose(untranspose(g)) != g");
    }
    // Naturality in Z: transpose(k ∘ (u × id)) = transpose(k) ∘ u.
    for (std::size_t v = 0; v < pool.size(); ++v) {
      const Presheaf& z2 = pool[v];
      const Cone z2x = product(z2, x);
      for (const auto& u : enumerate_nats(z2, z, guard)) {
        const NatTransform ux = product_map(z2, x, z, x, u, identity_nat(x));
        for (std::size_t i = 0; i < ks.size(); ++i) {
          if (transpose(e, z2, x, compose(ks[i], ux)) != compose(transposed[i], u)) {
            return fail(at + "Z'=pool[" + std::to_string(v) + "] transpose is not natural in Z");
          }
        }
      }
    }
  }
  return result;
}

CheckResult check_classifier(const std::string& instance, const Presheaf& a, const Omega& om,
                             const Topology& j, const EnumerationGuard& guard) {
  CheckResult result{"topos.classifier", instance, true, ""};
  const auto subs = enumerate_subsheaves(a, j, guard);
  const auto homs = enumerate_nats(a, om.object, guard);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& members = subs[i].inclusion.components;
    NatTransform phi;
    try {
      phi = classify(subs[i], om);
    } catch (const NotSubobject& e) {
      result.pass = false;
      result.witness = "sub[" + std::to_string(i) + "] " + e.what();
      return result;
    }
    if (!is_natural(a, om.object, phi)) {
      result.pass = false;
      result.witness = "sub[" + std::to_string(i) + "] classifying map is not natural";
      return result;
    }
    if (truth_preimage(a, om, phi) != members) {
      result.pass = false;
      result.witness = "sub[" + std::to_string(i) + "] truth square is not a pullback";
      return result;
    }
    std::size_t count = 0;
    for (const auto& theta : homs) count += truth_preimage(a, om, theta) == members;
    if (count != 1) {
      result.pass = false;
      result.witness = "sub[" + std::to_string(i) + "] classifying arrows=" + std::to_string(count);
      return result;
    }
  }
  if (subs.size() != homs.size()) {
    result.pass = false;
    result.witness = "|Sub(A)|=" + std::to_string(subs.size()) +
                     " |Hom(A,Omega)|=" + std::to_string(homs.size());
  }
  return result;
}

CheckResults check_topos_axioms(const std::vector<Presheaf>& pool,
                                const std::vector<std::string>& names, const Topology& j,
                                const EnumerationGuard& guard) {
  CheckResults out;
  if (pool.empty()) return out;
  const AlgebraPtr& alg = pool.front().algebra_ptr();
  const HeytingAlgebra& h = *alg;
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "pool[" + std::to_string(i) + "]"; };

  const Presheaf one = terminal_presheaf(alg);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CheckResult r{"topos.sheaf", name(i), true, ""};
    if (auto c = check_sheaf(pool[i], j); !c) {
      r.pass = false;
      r.witness = "matching family on a covering sieve of " + h.name(c.witness->family.sieve.at) +
                  " has " + std::to_string(c.witness->amalgamations) + " amalgamations";
    }
    out.push_back(r);
  }
  {
    CheckResult r{"topos.terminal", "1", is_sheaf(one, j), ""};
    for (std::size_t i = 0; i < pool.size() && r.pass; ++i) {
      const std::size_t n = enumerate_nats(pool[i], one, guard).size();
      if (n != 1) {
        r.pass = false;
        r.witness = "|Hom(" + name(i) + ",1)|=" + std::to_string(n);
      }
    }
    out.push_back(r);
  }
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < pool.size(); ++b) {
      const std::string inst = name(a) + "x" + name(b);
      const Cone cone = product(pool[a], pool[b]);
      CheckResult r = check_product(inst, pool[a], pool[b], cone, pool, guard);
      if (r.pass && !is_sheaf(cone.object, j)) {
        r.pass = false;
        r.witness = "product is not a sheaf";
      }
      out.push_back(r);
    }
  }
  for (std::size_t c = 0; c < pool.size(); ++c) {
    for (std::size_t a = 0; a < pool.size(); ++a) {
      const auto fs = enumerate_nats(pool[a], pool[c], guard);
      for (std::size_t b = a; b < pool.size(); ++b) {
        const auto gs = enumerate_nats(pool[b], pool[c], guard);
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
          for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            const std::string inst = name(a) + "-f" + std::to_string(fi) + "->" + name(c) +
                                     "<-g" + std::to_string(gi) + "-" + name(b);
            const Cone cone = pullback(pool[a], pool[b], pool[c], fs[fi], gs[gi]);
            CheckResult r = check_pullback(inst, pool[a], pool[b], pool[c], fs[fi], gs[gi], cone,
                                           pool, guard);
            if (r.pass && !is_sheaf(cone.object, j)) {
              r.pass = false;
              r.witness = "pullback is not a sheaf";
            }
            out.push_back(r);
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < pool.size(); ++x) {
    for (std::size_t y = 0; y < pool.size(); ++y) {
      const Exponential e = exponential(pool[x], pool[y], guard);
      out.push_back(check_exponential(name(y) + "^" + name(x), pool[x], pool[y], e, pool, j, guard));
    }
  }
  const Omega om = omega(alg, j);
  {
    CheckResult r{"topos.omega", "Omega", true, ""};
    for (Elem p : h.elements()) {
      std::vector<ElemSet> expected;
      for (Elem s : h.down(p).elements()) expected.push_back(h.down(s));
      std::vector<ElemSet> got;
      for (const Sieve& s : om.sieves[p.index]) got.push_back(s.members);
      auto key = [](ElemSet e) { return e.bits(); };
      std::sort(expected.begin(), expected.end(), [&](ElemSet l, ElemSet r2) { return key(l) < key(r2); });
      std::sort(got.begin(), got.end(), [&](ElemSet l, ElemSet r2) { return key(l) < key(r2); });
      if (expected != got) {
        r.pass = false;
        r.witness = "closed sieves at " + h.name(p) + " differ from principal downsets";
        break;
      }
    }
    if (r.pass && !is_sheaf(om.object, j)) {
      r.pass = false;
      r.witness = "Omega is not a sheaf";
    }
    if (r.pass && !is_natural(one, om.object, om.truth)) {
      r.pass = false;
      r.witness = "truth is not natural";
    }
    out.push_back(r);
  }
  for (std::size_t a = 0; a < pool.size(); ++a) {
    out.push_back(check_classifier(name(a), pool[a], om, j, guard));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample and SG.

namespace {

// A set with n points over the two-element algebra, as a sheaf.
Presheaf set_sheaf(const AlgebraPtr& algebra, std::size_t n) {
  const HeytingAlgebra& h = *algebra;
  std::vector<std::size_t> counts(h.size(), 1);
  std::vector<std::vector<std::string>> names(h.size(), std::vector<std::string>{"*"});
  counts[h.top().index] = n;
  names[h.top().index].clear();
  for (std::size_t i = 0; i < n; ++i) names[h.top().index].push_back("x" + std::to_string(i + 1));
  return Presheaf(algebra, counts, [](Elem, Elem, std::size_t) { return std::size_t{0}; }, names);
}

std::uint64_t count_mediators(const Presheaf& w, const Cone& target, const NatTransform& u,
                              const NatTransform& v, const EnumerationGuard& guard,
                              std::vector<NatTransform>* samples = nullptr,
                              std::size_t max_samples = 0) {
  std::uint64_t n = 0;
  for_each_nat(
      w, target.object,
      [&](const NatTransform& m) {
        if (compose(target.first, m) == u && compose(target.second, m) == v) {
          ++n;
          if (samples && samples->size() < max_samples) samples->push_back(m);
        }
        return true;
      },
      guard,
      [&](Elem p, std::size_t s, std::size_t t) {
        return target.first(p, t) == u(p, s) && target.second(p, t) == v(p, s);
      });
  return n;
}

}  // namespace

ExpositionReport exposition_counterexample(AlgebraPtr algebra, std::size_t points,
                                           const EnumerationGuard& guard) {
  const HeytingAlgebra& h = *algebra;
  if (h.size() != 2) throw InvalidInput("the exposition counterexample runs over two elements");
  if (points == 0) throw InvalidInput("the exposition counterexample needs a nonempty set");
  ExpositionReport report;
  report.points = points;

  const Presheaf x = set_sheaf(algebra, points);
  const NatTransform f = identity_nat(x);
  const Cone xx = product(x, x);
  const Cone x3 = product(xx.object, x);
  const NatTransform pi1 = compose(xx.first, x3.first);
  const NatTransform f_pi1 = compose(f, pi1);

  // Both expositions are (X³, π1, f∘π1); an arrow between them must
  // commute with both legs.
  Cone exposition{x3.object, pi1, f_pi1};
  std::vector<NatTransform> samples;
  report.mediating_maps = count_mediators(x3.object, exposition, pi1, f_pi1, guard, &samples, 3);
  for (const auto& m : samples) report.sample_maps.push_back(render_nat(x3.object, x3.object, m));
  report.refuted = report.mediating_maps >= 2;

  const Cone gamma = pullback(x, x, x, f, identity_nat(x));
  report.graph_mediators = count_mediators(x3.object, gamma, pi1, f_pi1, guard);

  const std::vector<Presheaf> pool{terminal_presheaf(algebra), x, xx.object, x3.object};
  const std::string inst = "X=" + std::to_string(points);
  const CheckResult universal =
      check_pullback(inst, x, x, x, f, identity_nat(x), gamma, pool, guard);
  report.graph_universal = universal.pass;

  report.results.push_back({"exposition.mediators", inst,
                            points >= 2 ? report.refuted : report.mediating_maps == 1,
                            "count=" + std::to_string(report.mediating_maps)});
  report.results.push_back({"exposition.graph_mediation", inst, report.graph_mediators == 1,
                            "count=" + std::to_string(report.graph_mediators)});
  CheckResult g = universal;
  g.check = "exposition.graph_universality";
  report.results.push_back(g);
  return report;
}

SGReport sg_check(const std::vector<Presheaf>& pool, const std::vector<std::string>& names,
                  const Topology& j, const EnumerationGuard& guard) {
  SGReport report;
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "pool[" + std::to_string(i) + "]"; };
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < pool.size(); ++b) {
      const Presheaf& x = pool[a];
      const Presheaf& y = pool[b];
      const HeytingAlgebra& h = x.algebra();
      const auto homs = enumerate_nats(x, y, guard);
      CheckResult r{"sg.separation", name(a) + "=>" + name(b), true, ""};
      for (std::size_t f = 0; f < homs.size() && r.pass; ++f) {
        for (std::size_t g = f + 1; g < homs.size() && r.pass; ++g) {
          ++report.pairs_checked;
          bool separated = false;
          for (Elem s : h.ascending()) {
            for (std::size_t sec = 0; sec < x.count(s) && !separated; ++sec) {
              const std::size_t fy = homs[f](s, sec);
              const std::size_t gy = homs[g](s, sec);
              Sieve agree{s, ElemSet{}};
              for (Elem q : h.down(s).elements()) {
                if (y.restrict(s, q, fy) == y.restrict(s, q, gy)) agree.members.insert(q);
              }
              separated = !j.covers(agree);
            }
            if (separated) break;
          }
          if (!separated) {
            r.pass = false;
            r.witness = "f=" + render_nat(x, y, homs[f]) + " g=" + render_nat(x, y, homs[g]) +
                        " agree locally everywhere";
          }
        }
      }
      report.ok = report.ok && r.pass;
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

NatTransform relation_to_nat(const TSetPresheaf& source, const TSetPresheaf& target,
                             const TRelation& rho) {
  const Presheaf& p = source.presheaf;
  const HeytingAlgebra& h = p.algebra();
  NatTransform out;
  out.components.resize(h.size());
  for (Elem e : h.elements()) out.components[e.index].assign(p.count(e), 0);
  std::vector<std::vector<bool>> done(h.size());
  for (Elem e : h.elements()) done[e.index].assign(p.count(e), false);
  for (std::size_t x = 0; x < source.section_of.size(); ++x) {
    const auto [e, s] = source.section_of[x];
    if (done[e.index][s]) continue;
    done[e.index][s] = true;
    const auto [te, ts] = target.section_of[rho(x)];
    if (te != e) throw InvalidInput("relation does not preserve existence");
    out.components[e.index][s] = ts;
  }
  return out;
}

Presheaf doubled_point(AlgebraPtr diamond) {
  const HeytingAlgebra& h = *diamond;
  const auto a = h.find("a");
  const auto b = h.find("b");
  if (h.size() != 4 || !a || !b || h.is_boolean() == false) {
    throw InvalidInput("doubled point needs the diamond algebra");
  }
  std::vector<std::size_t> counts(h.size(), 1);
  counts[h.top().index] = 2;
  std::vector<std::vector<std::string>> names(h.size());
  names[h.bottom().index] = {"*"};
  names[a->index] = {"x"};
  names[b->index] = {"y"};
  names[h.top().index] = {"g1", "g2"};
  return Presheaf(diamond, counts, [](Elem, Elem, std::size_t) { return std::size_t{0}; },
                  names);
}

}  // namespace omegaset
