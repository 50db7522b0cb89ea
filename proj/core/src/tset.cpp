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

#include "omegaset/tset.hpp"

#include <algorithm>
#include <set>

#include "omegaset/error.hpp"
#include "util.hpp"

namespace omegaset {

TSet::TSet(AlgebraPtr algebra, std::vector<std::string> names, std::vector<Elem> id)
    : algebra_(std::move(algebra)), names_(std::move(names)), id_(std::move(id)) {
  if (!algebra_) throw InvalidInput("T-set without an algebra");
  if (id_.size() != names_.size() * names_.size()) {
    throw InvalidInput("identity table must be |A| x |A|");
  }
  for (Elem e : id_) {
    if (e.index >= algebra_->size()) throw InvalidInput("identity value outside the algebra");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InvalidInput("duplicate carrier element '" + n + "'");
  }
}

TSet::TSet(AlgebraPtr algebra, std::vector<std::string> names,
           const std::function<Elem(std::size_t, std::size_t)>& id)
    : TSet(algebra, names, [&] {
        std::vector<Elem> table(names.size() * names.size());
        for (std::size_t x = 0; x < names.size(); ++x) {
          for (std::size_t y = 0; y < names.size(); ++y) table[x * names.size() + y] = id(x, y);
        }
        return table;
      }()) {}

std::optional<std::size_t> TSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

TSetReport validate_tset(const TSet& t, bool require_separated) {
  const HeytingAlgebra& h = t.algebra();
  TSetReport report;
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t.id(x, y) != t.id(y, x) && x < y) {
        report.violations.push_back({"symmetry", {x, y}, "Id(x,y) != Id(y,x)"});
      }
      if (!h.leq(t.id(x, y), h.meet(t.existence(x), t.existence(y)))) {
        report.violations.push_back({"existence-bound", {x, y}, "Id(x,y) > Ee x ∧ Ee y"});
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (!h.leq(h.meet(t.id(x, y), t.id(y, z)), t.id(x, z))) {
          report.violations.push_back(
              {"transitivity", {x, y, z}, "Id(x,y) ∧ Id(y,z) > Id(x,z)"});
        }
      }
    }
  }
  if (require_separated) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (indiscernible(t, x, y)) {
          report.violations.push_back({"separated", {x, y}, "distinct indiscernible elements"});
        }
      }
    }
  }
  return report;
}

bool indiscernible(const TSet& t, std::size_t x, std::size_t y) {
  return t.id(x, y) == t.existence(x) && t.id(x, y) == t.existence(y);
}

bool is_separated(const TSet& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = x + 1; y < t.size(); ++y) {
      if (indiscernible(t, x, y)) return false;
    }
  }
  return true;
}

namespace {

AtomCheck check_atom_impl(const TSet& t, const AtomMap& a, bool with_a2) {
  const HeytingAlgebra& h = t.algebra();
  if (a.values.size() != t.size()) throw InvalidInput("atom map must cover the whole carrier");
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (!h.leq(h.meet(a(x), t.id(x, y)), a(y))) {
        return {false, Violation{"A1", {x, y}, "a(x) ∧ Id(x,y) > a(y)"}};
      }
      if (with_a2 && !h.leq(h.meet(a(x), a(y)), t.id(x, y))) {
        return {false, Violation{"A2", {x, y}, "a(x) ∧ a(y) > Id(x,y)"}};
      }
    }
  }
  return {};
}

}  // namespace

AtomCheck check_atom(const TSet& t, const AtomMap& a) { return check_atom_impl(t, a, true); }

AtomCheck check_subobject_map(const TSet& t, const AtomMap& a) {
  return check_atom_impl(t, a, false);
}

AtomMap atom_of(const TSet& t, std::size_t x) {
  AtomMap a;
  a.values.reserve(t.size());
  for (std::size_t y = 0; y < t.size(); ++y) a.values.push_back(t.id(x, y));
  return a;
}

Elem atom_existence(const TSet& t, const AtomMap& a) {
  ElemSet values;
  for (Elem v : a.values) values.insert(v);
  return t.algebra().envelope(values);
}

namespace {

bool is_witness(const TSet& t, const AtomMap& a, std::size_t x) {
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (a(y) != t.id(x, y)) return false;
  }
  return true;
}

std::optional<std::size_t> lowest_witness(const TSet& t, const AtomMap& a) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (is_witness(t, a, x)) return x;
  }
  return std::nullopt;
}

std::string describe(const TSet& t, const AtomMap& a) {
  std::string s = "<";
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (i) s += ",";
    s += t.algebra().name(a.values[i]);
  }
  return s + ">";
}

}  // namespace

std::vector<std::size_t> real_witnesses(const TSet& t, const AtomMap& a) {
  if (auto c = check_atom(t, a); !c) {
    throw NotAtom(c.witness->rule + " fails at (" + t.name(c.witness->witness[0]) + ", " +
                  t.name(c.witness->witness[1]) + ")");
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (is_witness(t, a, x)) out.push_back(x);
  }
  return out;
}

std::vector<AtomMap> enumerate_atoms(const TSet& t, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = t.algebra();
  const std::size_t n = t.size();
  std::vector<AtomMap> out;
  std::uint64_t nodes = 0;
  AtomMap current;
  current.values.resize(n);
  // Backtracking visits exactly the maps passing A1/A2 on every prefix, in
  // lexicographic order.
  std::function<void(std::size_t)> extend = [&](std::size_t x) {
    if (++nodes > guard.limit) {
      throw SizeGuard("atom search over " + std::to_string(n) + " elements exceeds the enumeration guard");
    }
    if (x == n) {
      out.push_back(current);
      return;
    }
    for (Elem v : h.down(t.existence(x)).elements()) {
      bool ok = true;
      for (std::size_t y = 0; y < x && ok; ++y) {
        const Elem w = current(y);
        ok = h.leq(h.meet(v, t.id(x, y)), w) && h.leq(h.meet(w, t.id(y, x)), v) &&
             h.leq(h.meet(v, w), t.id(x, y));
      }
      if (!ok) continue;
      current.values[x] = v;
      extend(x + 1);
    }
  };
  extend(0);
  return out;
}

PostulateReport satisfies_postulate(const TSet& t, const EnumerationGuard& guard) {
  PostulateReport report;
  for (AtomMap& a : enumerate_atoms(t, guard)) {
    if (!lowest_witness(t, a)) {
      report.satisfied = false;
      report.unreal.push_back(std::move(a));
    }
  }
  return report;
}

AtomMap localise_atom(const TSet& t, const AtomMap& a, Elem p) {
  AtomMap out = a;
  for (Elem& v : out.values) v = t.algebra().meet(v, p);
  return out;
}

std::size_t localise_element(const TSet& t, std::size_t x, Elem p) {
  const AtomMap target = localise_atom(t, atom_of(t, x), p);
  if (auto w = lowest_witness(t, target)) return *w;
  throw PostulateRequired("localisation of '" + t.name(x) + "' at " + t.algebra().name(p) +
                          " is the unreal atom " + describe(t, target));
}

std::vector<std::optional<std::size_t>> localisation_table(const TSet& t) {
  const HeytingAlgebra& h = t.algebra();
  std::vector<std::optional<std::size_t>> table(t.size() * h.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    const AtomMap a = atom_of(t, x);
    for (Elem p : h.elements()) {
      table[x * h.size() + p.index] = lowest_witness(t, localise_atom(t, a, p));
    }
  }
  return table;
}

bool compatible(const TSet& t, std::size_t x, std::size_t y) {
  return localise_element(t, x, t.existence(y)) == localise_element(t, y, t.existence(x));
}

bool element_leq(const TSet& t, std::size_t x, std::size_t y) {
  return t.existence(x) == t.id(x, y);
}

FamilyEnvelope family_envelope(const TSet& t, std::span<const std::size_t> family) {
  const HeytingAlgebra& h = t.algebra();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!compatible(t, family[i], family[j])) {
        throw NotCompatible("'" + t.name(family[i]) + "' and '" + t.name(family[j]) +
                            "' are not compatible");
      }
    }
  }
  AtomMap pi;
  pi.values.assign(t.size(), h.bottom());
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t b : family) pi.values[x] = h.join(pi.values[x], t.id(b, x));
  }
  auto w = lowest_witness(t, pi);
  if (!w) throw PostulateRequired("family envelope " + describe(t, pi) + " is unreal");
  return {std::move(pi), *w};
}

TSet singleton_completion(const TSet& t, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = t.algebra();
  const std::vector<AtomMap> atoms = enumerate_atoms(t, guard);
  std::vector<std::string> names;
  std::set<std::string> used;
  for (const AtomMap& a : atoms) {
    std::string name;
    if (auto w = lowest_witness(t, a)) {
      name = t.name(*w);
    } else {
      name = describe(t, a);
    }
    while (!used.insert(name).second) name += "'";
    names.push_back(std::move(name));
  }
  return TSet(t.algebra_ptr(), std::move(names), [&](std::size_t i, std::size_t j) {
    Elem acc = h.bottom();
    for (std::size_t x = 0; x < t.size(); ++x) {
      acc = h.join(acc, h.meet(atoms[i](x), atoms[j](x)));
    }
    return acc;
  });
}

SeparatedQuotient separated_quotient(const TSet& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> classes(n);
  std::vector<std::size_t> reps;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t c = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (indiscernible(t, reps[k], x)) {
        c = k;
        break;
      }
    }
    if (c == reps.size()) {
      reps.push_back(x);
      members.emplace_back();
    }
    classes[x] = c;
    members[c].push_back(x);
  }
  std::vector<std::string> names;
  for (std::size_t r : reps) names.push_back(t.name(r));
  TSet quotient(t.algebra_ptr(), std::move(names),
                [&](std::size_t i, std::size_t j) { return t.id(reps[i], reps[j]); });
  return {std::move(quotient), std::move(classes), std::move(members)};
}

std::optional<std::vector<std::size_t>> find_tset_isomorphism(const TSet& a, const TSet& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || a.existence(x) != b.existence(y)) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) ok = a.id(z, x) == b.id(map[z], y);
      if (!ok) continue;
      used[y] = true;
      map[x] = y;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (extend(0)) return map;
  return std::nullopt;
}

namespace {

std::size_t localise_cached(const TSet& t, const std::vector<std::optional<std::size_t>>& table,
                            std::size_t x, Elem p) {
  const auto& v = table[x * t.algebra().size() + p.index];
  if (!v) {
    throw PostulateRequired("'" + t.name(x) + "' has no localisation at " +
                            t.algebra().name(p));
  }
  return *v;
}

}  // namespace

TSetReport validate_relation(const TSet& source, const TSet& target, const TRelation& rel) {
  if (source.algebra_ptr() != target.algebra_ptr() &&
      source.algebra().names() != target.algebra().names()) {
    throw InvalidInput("relation between T-sets over different algebras");
  }
  if (rel.map.size() != source.size()) throw InvalidInput("relation must map every element");
  for (std::size_t y : rel.map) {
    if (y >= target.size()) throw InvalidInput("relation maps outside the target");
  }
  const HeytingAlgebra& h = source.algebra();
  const auto loc_a = localisation_table(source);
  const auto loc_b = localisation_table(target);
  TSetReport report;
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (target.existence(rel(x)) != source.existence(x)) {
      report.violations.push_back({"existence", {x}, "Ee ρ(x) != Ee x"});
    }
  }
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (Elem p : h.elements()) {
      const std::size_t lhs = rel(localise_cached(source, loc_a, x, p));
      const std::size_t rhs = localise_cached(target, loc_b, rel(x), p);
      if (!indiscernible(target, lhs, rhs)) {
        report.violations.push_back(
            {"localisation", {x}, "ρ(x ↾ " + h.name(p) + ") != ρ(x) ↾ " + h.name(p)});
      }
    }
  }
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (std::size_t y = 0; y < source.size(); ++y) {
      if (!h.leq(source.id(x, y), target.id(rel(x), rel(y)))) {
        report.violations.push_back({"identity", {x, y}, "Id(x,y) > Id(ρx,ρy)"});
      }
      const bool compat_src = localise_cached(source, loc_a, x, source.existence(y)) ==
                              localise_cached(source, loc_a, y, source.existence(x));
      if (compat_src) {
        const std::size_t u = localise_cached(target, loc_b, rel(x), target.existence(rel(y)));
        const std::size_t v = localise_cached(target, loc_b, rel(y), target.existence(rel(x)));
        if (!indiscernible(target, u, v)) {
          report.violations.push_back({"compatibility", {x, y}, "x ‡ y but not ρx ‡ ρy"});
        }
      }
    }
  }
  return report;
}

std::vector<TRelation> hom_set(const TSet& source, const TSet& target,
                               const EnumerationGuard& guard) {
  if (detail::saturating_pow(target.size(), source.size()) > guard.limit) {
    throw SizeGuard("|B|^|A| exceeds the enumeration guard");
  }
  const HeytingAlgebra& h = source.algebra();
  const auto loc_a = localisation_table(source);
  const auto loc_b = localisation_table(target);
  std::vector<TRelation> out;
  TRelation current;
  current.map.resize(source.size());
  const std::size_t n = source.size();
  std::function<void(std::size_t)> extend = [&](std::size_t x) {
    if (x == n) {
      // Existence is enforced while extending; check localisation here.
      for (std::size_t a = 0; a < n; ++a) {
        for (Elem p : h.elements()) {
          const std::size_t lhs = current(localise_cached(source, loc_a, a, p));
          const std::size_t rhs = localise_cached(target, loc_b, current(a), p);
          if (!indiscernible(target, lhs, rhs)) return;
        }
      }
      out.push_back(current);
      return;
    }
    for (std::size_t y = 0; y < target.size(); ++y) {
      if (target.existence(y) != source.existence(x)) continue;
      current.map[x] = y;
      extend(x + 1);
    }
  };
  extend(0);
  return out;
}

TRelation compose(const TRelation& g, const TRelation& f) {
  TRelation out;
  out.map.reserve(f.map.size());
  for (std::size_t x : f.map) out.map.push_back(g(x));
  return out;
}

TRelation identity_relation(const TSet& t) {
  TRelation r;
  for (std::size_t x = 0; x < t.size(); ++x) r.map.push_back(x);
  return r;
}

}  // namespace omegaset
