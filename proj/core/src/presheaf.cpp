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

#include "omegaset/presheaf.hpp"

#include <algorithm>
#include <numeric>

#include "omegaset/error.hpp"

namespace omegaset {

namespace {

std::vector<std::vector<std::string>> canonical_names(const HeytingAlgebra& h,
                                                      const std::vector<std::size_t>& counts) {
  std::vector<std::vector<std::string>> names(h.size());
  for (Elem p : h.elements()) {
    for (std::size_t i = 0; i < counts[p.index]; ++i) {
      names[p.index].push_back(h.name(p) + "#" + std::to_string(i));
    }
  }
  return names;
}

}  // namespace

Presheaf::Presheaf(AlgebraPtr algebra, std::vector<std::size_t> counts, const RestrictFn& restrict,
                   std::vector<std::vector<std::string>> names)
    : algebra_(std::move(algebra)) {
  if (!algebra_) throw InvalidInput("presheaf without an algebra");
  const HeytingAlgebra& h = *algebra_;
  if (counts.size() != h.size()) throw InvalidInput("section counts must cover every element");
  names_ = names.empty() ? canonical_names(h, counts) : std::move(names);
  if (names_.size() != h.size()) throw InvalidInput("section names must cover every element");
  for (Elem p : h.elements()) {
    if (names_[p.index].size() != counts[p.index]) {
      throw InvalidInput("section names disagree with counts at " + h.name(p));
    }
  }
  restrict_.resize(h.size() * h.size());
  for (Elem p : h.elements()) {
    for (Elem q : h.down(p).elements()) {
      auto& map = restrict_[p.index * h.size() + q.index];
      map.reserve(counts[p.index]);
      for (std::size_t s = 0; s < counts[p.index]; ++s) {
        const std::size_t t = restrict(p, q, s);
        if (t >= counts[q.index]) {
          throw InvalidPresheaf("restriction " + h.name(p) + ">" + h.name(q) +
                                " leaves the section set");
        }
        map.push_back(t);
      }
    }
  }
}

Presheaf Presheaf::from_covers(AlgebraPtr algebra, std::vector<std::vector<std::string>> names,
                               const CoverMaps& covers) {
  const HeytingAlgebra& h = *algebra;
  if (names.size() != h.size()) throw InvalidInput("section names must cover every element");
  const auto cover_pairs = h.cover_pairs();
  for (const auto& [key, map] : covers) {
    const auto [p, q] = key;
    if (std::find(cover_pairs.begin(), cover_pairs.end(), std::pair{q, p}) == cover_pairs.end()) {
      throw InvalidPresheaf(h.name(p) + ">" + h.name(q) + " is not a Hasse edge");
    }
    if (map.size() != names[p.index].size()) {
      throw InvalidPresheaf("restriction " + h.name(p) + ">" + h.name(q) +
                            " must map every section");
    }
    for (std::size_t t : map) {
      if (t >= names[q.index].size()) {
        throw InvalidPresheaf("restriction " + h.name(p) + ">" + h.name(q) +
                              " leaves the section set");
      }
    }
  }
  for (auto [q, p] : cover_pairs) {
    if (!names[p.index].empty() && !covers.contains({p, q})) {
      throw InvalidPresheaf("missing restriction " + h.name(p) + ">" + h.name(q));
    }
  }

  // full[p][q], filled for p in ascending order through any lower cover.
  const std::size_t n = h.size();
  std::vector<std::vector<std::size_t>> full(n * n);
  auto cover_map = [&](Elem p, Elem c) -> std::vector<std::size_t> {
    auto it = covers.find({p, c});
    return it == covers.end() ? std::vector<std::size_t>{} : it->second;
  };
  for (Elem p : h.ascending()) {
    std::vector<std::size_t> id(names[p.index].size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    full[p.index * n + p.index] = id;
    for (Elem q : h.down(p).minus(ElemSet::single(p)).elements()) {
      std::optional<std::vector<std::size_t>> result;
      for (auto [c, top] : cover_pairs) {
        if (top != p || !h.leq(q, c)) continue;
        const auto first = cover_map(p, c);
        const auto& second = full[c.index * n + q.index];
        std::vector<std::size_t> composite;
        for (std::size_t s : first) composite.push_back(second[s]);
        if (!result) {
          result = std::move(composite);
        } else if (*result != composite) {
          throw InvalidPresheaf("restrictions " + h.name(p) + ">" + h.name(q) +
                                " along different paths disagree");
        }
      }
      full[p.index * n + q.index] = result.value_or(std::vector<std::size_t>{});
    }
  }
  std::vector<std::size_t> counts;
  for (const auto& ns : names) counts.push_back(ns.size());
  return Presheaf(
      std::move(algebra), std::move(counts),
      [&](Elem p, Elem q, std::size_t s) { return full[p.index * n + q.index][s]; },
      std::move(names));
}

std::size_t Presheaf::total_sections() const {
  std::size_t total = 0;
  for (const auto& ns : names_) total += ns.size();
  return total;
}

std::optional<std::size_t> Presheaf::find_section(Elem p, const std::string& name) const {
  const auto& ns = names_[p.index];
  auto it = std::find(ns.begin(), ns.end(), name);
  if (it == ns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ns.begin());
}

Presheaf Presheaf::with_canonical_names() const {
  std::vector<std::size_t> counts;
  for (const auto& ns : names_) counts.push_back(ns.size());
  return Presheaf(algebra_, counts,
                  [this](Elem p, Elem q, std::size_t s) { return restrict(p, q, s); });
}

std::vector<std::string> validate_presheaf(const Presheaf& p) {
  const HeytingAlgebra& h = p.algebra();
  std::vector<std::string> problems;
  for (Elem a : h.elements()) {
    for (std::size_t s = 0; s < p.count(a); ++s) {
      if (p.restrict(a, a, s) != s) {
        problems.push_back("restriction " + h.name(a) + ">" + h.name(a) + " is not the identity");
        break;
      }
    }
    for (Elem b : h.down(a).elements()) {
      for (Elem c : h.down(b).elements()) {
        for (std::size_t s = 0; s < p.count(a); ++s) {
          if (p.restrict(b, c, p.restrict(a, b, s)) != p.restrict(a, c, s)) {
            problems.push_back("composite " + h.name(a) + ">" + h.name(b) + ">" + h.name(c) +
                               " differs from " + h.name(a) + ">" + h.name(c));
            break;
          }
        }
      }
    }
  }
  return problems;
}

Presheaf representable(AlgebraPtr algebra, Elem p) {
  std::vector<std::size_t> counts(algebra->size(), 0);
  for (Elem r : algebra->down(p).elements()) counts[r.index] = 1;
  return Presheaf(std::move(algebra), counts, [](Elem, Elem, std::size_t) { return 0; });
}

Presheaf terminal_presheaf(AlgebraPtr algebra) {
  std::vector<std::size_t> counts(algebra->size(), 1);
  return Presheaf(std::move(algebra), counts, [](Elem, Elem, std::size_t) { return 0; });
}

Presheaf empty_presheaf(AlgebraPtr algebra) {
  std::vector<std::size_t> counts(algebra->size(), 0);
  return Presheaf(std::move(algebra), counts, [](Elem, Elem, std::size_t) { return 0; });
}

bool is_natural(const Presheaf& source, const Presheaf& target, const NatTransform& alpha) {
  const HeytingAlgebra& h = source.algebra();
  if (alpha.components.size() != h.size()) return false;
  for (Elem p : h.elements()) {
    if (alpha.components[p.index].size() != source.count(p)) return false;
    for (std::size_t s = 0; s < source.count(p); ++s) {
      if (alpha(p, s) >= target.count(p)) return false;
    }
  }
  for (Elem p : h.elements()) {
    for (Elem q : h.down(p).elements()) {
      for (std::size_t s = 0; s < source.count(p); ++s) {
        if (alpha(q, source.restrict(p, q, s)) != target.restrict(p, q, alpha(p, s))) {
          return false;
        }
      }
    }
  }
  return true;
}

NatTransform compose(const NatTransform& beta, const NatTransform& alpha) {
  NatTransform out;
  out.components.resize(alpha.components.size());
  for (std::size_t p = 0; p < alpha.components.size(); ++p) {
    for (std::size_t s : alpha.components[p]) out.components[p].push_back(beta.components[p][s]);
  }
  return out;
}

NatTransform identity_nat(const Presheaf& p) {
  NatTransform out;
  out.components.resize(p.algebra().size());
  for (Elem e : p.algebra().elements()) {
    out.components[e.index].resize(p.count(e));
    std::iota(out.components[e.index].begin(), out.components[e.index].end(), std::size_t{0});
  }
  return out;
}

namespace {

struct Slot {
  Elem p;
  std::size_t s;
};

// Sections of `source` in ascending element order, so every restriction of a
// slot is assigned before the slot itself.
std::vector<Slot> slots_of(const Presheaf& source) {
  std::vector<Slot> slots;
  for (Elem p : source.algebra().ascending()) {
    for (std::size_t s = 0; s < source.count(p); ++s) slots.push_back({p, s});
  }
  return slots;
}

std::vector<std::vector<Elem>> lower_covers(const HeytingAlgebra& h) {
  std::vector<std::vector<Elem>> out(h.size());
  for (auto [q, p] : h.cover_pairs()) out[p.index].push_back(q);
  return out;
}

}  // namespace

std::uint64_t for_each_nat(const Presheaf& source, const Presheaf& target,
                           const std::function<bool(const NatTransform&)>& visit,
                           const EnumerationGuard& guard, const ImageFilter& allowed) {
  const HeytingAlgebra& h = source.algebra();
  const auto slots = slots_of(source);
  const auto lower = lower_covers(h);
  NatTransform alpha;
  alpha.components.resize(h.size());
  for (Elem p : h.elements()) alpha.components[p.index].assign(source.count(p), 0);

  std::uint64_t visited = 0;
  std::uint64_t nodes = 0;
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) return;
    if (++nodes > guard.limit) {
      throw SizeGuard("natural transformation search exceeds the enumeration guard");
    }
    if (i == slots.size()) {
      ++visited;
      if (!visit(alpha)) stop = true;
      return;
    }
    const auto [p, s] = slots[i];
    for (std::size_t t = 0; t < target.count(p) && !stop; ++t) {
      if (allowed && !allowed(p, s, t)) continue;
      // Naturality along Hasse edges implies it along every q ≤ p.
      bool ok = true;
      for (Elem q : lower[p.index]) {
        if (alpha(q, source.restrict(p, q, s)) != target.restrict(p, q, t)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      alpha.components[p.index][s] = t;
      extend(i + 1);
    }
  };
  extend(0);
  return visited;
}

std::vector<NatTransform> enumerate_nats(const Presheaf& source, const Presheaf& target,
                                         const EnumerationGuard& guard) {
  std::vector<NatTransform> out;
  for_each_nat(
      source, target,
      [&](const NatTransform& a) {
        out.push_back(a);
        return true;
      },
      guard);
  return out;
}

std::optional<NatTransform> find_presheaf_isomorphism(const Presheaf& a, const Presheaf& b) {
  const HeytingAlgebra& h = a.algebra();
  if (h.names() != b.algebra().names()) return std::nullopt;
  for (Elem p : h.elements()) {
    if (a.count(p) != b.count(p)) return std::nullopt;
  }
  const auto slots = slots_of(a);
  const auto lower = lower_covers(h);
  NatTransform alpha;
  alpha.components.resize(h.size());
  std::vector<std::vector<bool>> used(h.size());
  for (Elem p : h.elements()) {
    alpha.components[p.index].assign(a.count(p), 0);
    used[p.index].assign(b.count(p), false);
  }
  // Level-wise bijections; naturality on Hasse edges as in for_each_nat.
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == slots.size()) return true;
    const auto [p, s] = slots[i];
    for (std::size_t t = 0; t < b.count(p); ++t) {
      if (used[p.index][t]) continue;
      bool ok = true;
      for (Elem q : lower[p.index]) {
        if (alpha(q, a.restrict(p, q, s)) != b.restrict(p, q, t)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[p.index][t] = true;
      alpha.components[p.index][s] = t;
      if (extend(i + 1)) return true;
      used[p.index][t] = false;
    }
    return false;
  };
  if (extend(0)) return alpha;
  return std::nullopt;
}

}  // namespace omegaset
