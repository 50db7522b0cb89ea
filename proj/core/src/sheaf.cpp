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

#include "omegaset/sheaf.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "omegaset/error.hpp"

namespace omegaset {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Members of a sieve in ascending order.
std::vector<Elem> ascending_members(const Lattice& l, ElemSet members) {
  std::vector<Elem> out;
  for (Elem e : l.ascending()) {
    if (members.contains(e)) out.push_back(e);
  }
  return out;
}

template <typename Visit>
void for_each_family(const Presheaf& p, const Sieve& s, Visit&& visit) {
  const HeytingAlgebra& h = p.algebra();
  const auto members = ascending_members(h, s.members);
  MatchingFamily m{s, std::vector<std::size_t>(h.size(), kUnset)};
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == members.size()) {
      visit(m);
      return;
    }
    const Elem q = members[i];
    for (std::size_t x = 0; x < p.count(q); ++x) {
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const Elem r = members[k];
        if (h.leq(r, q)) ok = p.restrict(q, r, x) == m.choice[r.index];
      }
      if (!ok) continue;
      m.choice[q.index] = x;
      extend(i + 1);
    }
    m.choice[q.index] = kUnset;
  };
  extend(0);
}

}  // namespace

std::vector<MatchingFamily> matching_families(const Presheaf& p, const Sieve& s) {
  std::vector<MatchingFamily> out;
  for_each_family(p, s, [&](const MatchingFamily& m) { out.push_back(m); });
  return out;
}

std::vector<std::size_t> amalgamate(const Presheaf& p, const MatchingFamily& m) {
  std::vector<std::size_t> out;
  const Elem at = m.sieve.at;
  for (std::size_t x = 0; x < p.count(at); ++x) {
    bool ok = true;
    for (Elem q : m.sieve.members.elements()) {
      if (p.restrict(at, q, x) != m.at(q)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

namespace {

SheafCheck check_amalgamations(const Presheaf& p, const Topology& j, bool require_existence) {
  const HeytingAlgebra& h = p.algebra();
  SheafCheck result;
  for (Elem at : h.ascending()) {
    for (ElemSet members : j.covering(at)) {
      for_each_family(p, {at, members}, [&](const MatchingFamily& m) {
        if (!result.ok) return;
        const std::size_t n = amalgamate(p, m).size();
        if (n > 1 || (require_existence && n == 0)) {
          result.ok = false;
          result.witness = SheafWitness{m, n};
        }
      });
      if (!result.ok) return result;
    }
  }
  return result;
}

}  // namespace

SheafCheck check_separated(const Presheaf& p, const Topology& j) {
  return check_amalgamations(p, j, false);
}

SheafCheck check_sheaf(const Presheaf& p, const Topology& j) {
  return check_amalgamations(p, j, true);
}

Presheaf plus_construction(const Presheaf& p, const Topology& j, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = p.algebra();
  const std::size_t n = h.size();

  struct Entry {
    ElemSet sieve;
    std::vector<std::size_t> choice;
  };
  std::vector<std::vector<Entry>> entries(n);
  std::vector<std::map<std::pair<std::uint64_t, std::vector<std::size_t>>, std::size_t>> lookup(n);
  std::uint64_t total = 0;
  for (Elem at : h.elements()) {
    for (ElemSet members : j.covering(at)) {
      for_each_family(p, {at, members}, [&](const MatchingFamily& m) {
        if (++total > guard.limit) {
          throw SizeGuard("plus construction exceeds the enumeration guard");
        }
        lookup[at.index].emplace(std::pair{members.bits(), m.choice}, entries[at.index].size());
        entries[at.index].push_back({members, m.choice});
      });
    }
  }

  // Families at p are equivalent iff the sieve on which they agree covers p.
  std::vector<std::vector<std::size_t>> class_of(n);
  std::vector<std::size_t> counts(n, 0);
  for (Elem at : h.elements()) {
    const auto& es = entries[at.index];
    std::vector<std::size_t> parent(es.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    for (std::size_t a = 0; a < es.size(); ++a) {
      for (std::size_t b = a + 1; b < es.size(); ++b) {
        ElemSet agree;
        for (Elem q : (es[a].sieve & es[b].sieve).elements()) {
          if (es[a].choice[q.index] == es[b].choice[q.index]) agree.insert(q);
        }
        if (j.covers({at, agree})) parent[root(b)] = root(a);
      }
    }
    std::map<std::size_t, std::size_t> numbering;
    class_of[at.index].resize(es.size());
    for (std::size_t a = 0; a < es.size(); ++a) {
      auto [it, fresh] = numbering.emplace(root(a), numbering.size());
      class_of[at.index][a] = it->second;
    }
    counts[at.index] = numbering.size();
  }

  // Representative entry of each class, for restriction.
  std::vector<std::vector<std::size_t>> rep(n);
  for (Elem at : h.elements()) {
    rep[at.index].assign(counts[at.index], kUnset);
    for (std::size_t a = 0; a < entries[at.index].size(); ++a) {
      auto& r = rep[at.index][class_of[at.index][a]];
      if (r == kUnset) r = a;
    }
  }

  return Presheaf(p.algebra_ptr(), counts, [&](Elem at, Elem q, std::size_t cls) {
    const Entry& e = entries[at.index][rep[at.index][cls]];
    const ElemSet pulled = e.sieve & h.down(q);
    std::vector<std::size_t> choice(n, kUnset);
    for (Elem r : pulled.elements()) choice[r.index] = e.choice[r.index];
    const auto it = lookup[q.index].find({pulled.bits(), choice});
    if (it == lookup[q.index].end()) {
      throw InvalidPresheaf("restricted family is missing; topology is not stable");
    }
    return class_of[q.index][it->second];
  });
}

Presheaf sheafify(const Presheaf& p, const Topology& j, const EnumerationGuard& guard) {
  return plus_construction(plus_construction(p, j, guard), j, guard);
}

TSetPresheaf tset_to_presheaf(const TSet& t, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = t.algebra();
  if (auto report = satisfies_postulate(t, guard); !report.satisfied) {
    throw PostulateRequired("T-set has " + std::to_string(report.unreal.size()) +
                            " unreal atom(s)");
  }
  const SeparatedQuotient q = separated_quotient(t);
  const TSet& sep = q.quotient;
  const auto loc = localisation_table(sep);

  std::vector<std::size_t> counts(h.size(), 0);
  std::vector<std::pair<Elem, std::size_t>> class_section(sep.size());
  std::vector<std::vector<std::size_t>> class_at(h.size());
  std::vector<std::vector<std::string>> names(h.size());
  for (std::size_t c = 0; c < sep.size(); ++c) {
    const Elem e = sep.existence(c);
    class_section[c] = {e, counts[e.index]++};
    class_at[e.index].push_back(c);
    names[e.index].push_back(sep.name(c));
  }

  TSetPresheaf out{
      Presheaf(
          t.algebra_ptr(), counts,
          [&](Elem p, Elem r, std::size_t s) {
            const std::size_t c = class_at[p.index][s];
            const auto& localised = loc[c * h.size() + r.index];
            if (!localised) throw PostulateRequired("missing localisation");
            return class_section[*localised].second;
          },
          names),
      {},
      {}};
  for (const auto& members : q.members) {
    if (members.size() > 1) out.merged.push_back(members);
  }
  for (std::size_t x = 0; x < t.size(); ++x) out.section_of.push_back(class_section[q.classes[x]]);
  return out;
}

TSet presheaf_to_tset(const Presheaf& p) {
  const HeytingAlgebra& h = p.algebra();
  const Topology j = territory_topology(h);
  if (auto check = check_sheaf(p, j); !check) {
    throw NotASheaf("presheaf fails the sheaf condition on a covering sieve of " +
                    h.name(check.witness->family.sieve.at));
  }
  std::vector<std::pair<Elem, std::size_t>> carrier;
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (Elem e : h.ascending()) {
    for (std::size_t s = 0; s < p.count(e); ++s) {
      carrier.emplace_back(e, s);
      names.push_back(p.section_name(e, s));
      ++seen[p.section_name(e, s)];
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (seen[names[i]] > 1) names[i] += "@" + h.name(carrier[i].first);
  }
  return TSet(p.algebra_ptr(), std::move(names), [&](std::size_t a, std::size_t b) {
    const auto [pa, sa] = carrier[a];
    const auto [pb, sb] = carrier[b];
    ElemSet agree;
    for (Elem r : h.down(h.meet(pa, pb)).elements()) {
      if (p.restrict(pa, r, sa) == p.restrict(pb, r, sb)) agree.insert(r);
    }
    return h.envelope(agree);
  });
}

Presheaf associated_presheaf(const TSet& t) {
  const HeytingAlgebra& h = t.algebra();
  // classes[p]: representatives of the classes at p, and class_of[p][x].
  std::vector<std::vector<std::size_t>> reps(h.size());
  std::vector<std::vector<std::size_t>> class_of(h.size(), std::vector<std::size_t>(t.size(), kUnset));
  std::vector<std::vector<std::string>> names(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (!h.leq(p, t.existence(x))) continue;
      std::size_t c = reps[p.index].size();
      for (std::size_t k = 0; k < reps[p.index].size(); ++k) {
        if (h.leq(p, t.id(reps[p.index][k], x))) {
          c = k;
          break;
        }
      }
      if (c == reps[p.index].size()) {
        reps[p.index].push_back(x);
        names[p.index].push_back(t.name(x));
      }
      class_of[p.index][x] = c;
    }
  }
  std::vector<std::size_t> counts;
  for (const auto& r : reps) counts.push_back(r.size());
  return Presheaf(
      t.algebra_ptr(), counts,
      [&](Elem p, Elem q, std::size_t s) { return class_of[q.index][reps[p.index][s]]; }, names);
}

}  // namespace omegaset
