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

#include "omegaset/site.hpp"

#include <algorithm>
#include <set>

#include "omegaset/error.hpp"

namespace omegaset {

namespace {

// All subsets of `s`, in increasing bitmask order.
std::vector<ElemSet> subsets_of(ElemSet s) {
  std::vector<ElemSet> out;
  const std::uint64_t bits = s.bits();
  std::uint64_t sub = 0;
  do {
    out.emplace_back(sub);
    sub = (sub - bits) & bits;
  } while (sub != 0);
  return out;
}

bool contains_set(const std::vector<ElemSet>& sorted, ElemSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

}  // namespace

std::string format_set(const Lattice& l, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.elements()) {
    if (!first) out += ",";
    out += l.name(e);
    first = false;
  }
  return out + "}";
}

bool is_sieve(const Lattice& l, const Sieve& s) {
  return s.members.subset_of(l.down(s.at)) && l.is_down_closed(s.members);
}

std::vector<Sieve> sieves_on(const Lattice& l, Elem p) {
  std::vector<Sieve> out;
  for (ElemSet sub : subsets_of(l.down(p))) {
    if (l.is_down_closed(sub)) out.push_back({p, sub});
  }
  return out;
}

Sieve pullback_sieve(const Lattice& l, const Sieve& s, Elem r) {
  if (!l.leq(r, s.at)) {
    throw NotBelow("cannot pull a sieve on " + l.name(s.at) + " back along " + l.name(r));
  }
  return {r, s.members & l.down(r)};
}

std::vector<ElemSet> territories(const Lattice& l, Elem p) {
  std::vector<ElemSet> out;
  for (ElemSet sub : subsets_of(l.all())) {
    if (l.envelope(sub) == p) out.push_back(sub);
  }
  return out;
}

Coverage territory_basis(const Lattice& l) {
  Coverage k;
  for (Elem p : l.elements()) k.push_back(territories(l, p));
  return k;
}

Topology::Topology(const Lattice& l, Coverage covering) : covering_(std::move(covering)) {
  if (covering_.size() != l.size()) throw InvalidInput("topology must assign sieves to every element");
  for (auto& js : covering_) {
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
  }
}

bool Topology::covers(const Sieve& s) const {
  return contains_set(covering_[s.at.index], s.members);
}

std::vector<TopologyViolation> validate_topology(const Lattice& l, const Topology& j) {
  std::vector<TopologyViolation> out;
  for (Elem p : l.elements()) {
    if (!j.covers(Sieve::maximal(l, p))) {
      out.push_back({"maximality", p, l.down(p), "maximal sieve does not cover"});
    }
    for (ElemSet s : j.covering(p)) {
      if (!is_sieve(l, {p, s})) {
        out.push_back({"sieve", p, s, "covering family is not a sieve"});
        continue;
      }
      for (Elem r : l.down(p).elements()) {
        if (!j.covers(pullback_sieve(l, {p, s}, r))) {
          out.push_back({"stability", p, s, "pullback along " + l.name(r) + " does not cover"});
        }
      }
      for (const Sieve& r : sieves_on(l, p)) {
        bool locally_covering = true;
        for (Elem q : s.elements()) {
          if (!j.covers(pullback_sieve(l, r, q))) {
            locally_covering = false;
            break;
          }
        }
        if (locally_covering && !j.covers(r)) {
          out.push_back({"transitivity", p, r.members,
                         "locally covering on " + format_set(l, s) + " but not covering"});
        }
      }
    }
  }
  return out;
}

std::vector<BasisViolation> validate_basis(const Lattice& l, const Coverage& basis) {
  std::vector<BasisViolation> out;
  if (basis.size() != l.size()) {
    throw InvalidInput("basis must assign families to every element");
  }
  std::vector<std::vector<ElemSet>> sorted = basis;
  for (auto& k : sorted) std::sort(k.begin(), k.end());

  for (Elem p : l.elements()) {
    if (!contains_set(sorted[p.index], ElemSet::single(p))) {
      out.push_back({"identity", p, ElemSet::single(p), "{1_p} is not a basic cover"});
    }
    for (ElemSet theta : basis[p.index]) {
      if (!theta.subset_of(l.down(p))) {
        out.push_back({"shape", p, theta, "family contains elements not below " + l.name(p)});
        continue;
      }
      for (Elem r : l.down(p).elements()) {
        ElemSet pulled;
        for (Elem q : theta.elements()) pulled.insert(l.meet(q, r));
        if (!contains_set(sorted[r.index], pulled)) {
          out.push_back({"stability", p, theta,
                         "pullback along " + l.name(r) + " gives " + format_set(l, pulled) +
                             " which is not a basic cover of " + l.name(r)});
        }
      }
      // All unions ∪_{q ∈ Θ} Θ_q over choices Θ_q ∈ K(q), deduplicated.
      std::set<ElemSet> unions{ElemSet{}};
      for (Elem q : theta.elements()) {
        std::set<ElemSet> next;
        for (ElemSet u : unions) {
          for (ElemSet tq : basis[q.index]) next.insert(u | tq);
        }
        unions = std::move(next);
      }
      for (ElemSet u : unions) {
        if (!contains_set(sorted[p.index], u)) {
          out.push_back({"transitivity", p, theta,
                         "composite family " + format_set(l, u) + " is not a basic cover"});
          break;
        }
      }
    }
  }
  return out;
}

Topology topology_from_basis(const Lattice& l, const Coverage& basis) {
  auto violations = validate_basis(l, basis);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw BasisInvalid(v.condition + " fails at " + l.name(v.at) + " for " +
                       format_set(l, v.family) + ": " + v.detail);
  }
  Coverage j(l.size());
  for (Elem p : l.elements()) {
    for (const Sieve& s : sieves_on(l, p)) {
      for (ElemSet theta : basis[p.index]) {
        if (theta.subset_of(s.members)) {
          j[p.index].push_back(s.members);
          break;
        }
      }
    }
  }
  return Topology(l, std::move(j));
}

Topology territory_topology(const Lattice& l) { return topology_from_basis(l, territory_basis(l)); }

bool is_closed(const Lattice& l, const Sieve& s, const Topology& j) {
  for (Elem r : l.down(s.at).elements()) {
    if (!s.contains(r) && j.covers(pullback_sieve(l, s, r))) return false;
  }
  return true;
}

Sieve closure(const Lattice& l, const Sieve& s, const Topology& j) {
  Sieve current = s;
  while (true) {
    Sieve next = current;
    for (Elem r : l.down(s.at).elements()) {
      if (j.covers(pullback_sieve(l, current, r))) next.members.insert(r);
    }
    if (next == current) return current;
    current = next;
  }
}

std::vector<Sieve> closed_sieves(const Lattice& l, const Topology& j, Elem p) {
  std::vector<Sieve> out;
  for (const Sieve& s : sieves_on(l, p)) {
    if (is_closed(l, s, j)) out.push_back(s);
  }
  return out;
}

}  // namespace omegaset
