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

#include "omegaset/heyting.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "omegaset/error.hpp"

namespace omegaset {

namespace {

constexpr std::size_t kMaxElements = 64;

// Greatest element of `candidates` w.r.t. the order given by `down`, if any.
std::optional<Elem> greatest(ElemSet candidates, const std::vector<ElemSet>& down) {
  for (Elem g : candidates.elements()) {
    if (candidates.subset_of(down[g.index])) return g;
  }
  return std::nullopt;
}

std::optional<Elem> least(ElemSet candidates, const std::vector<ElemSet>& up) {
  for (Elem l : candidates.elements()) {
    if (candidates.subset_of(up[l.index])) return l;
  }
  return std::nullopt;
}

}  // namespace

Lattice Lattice::build(const PosetSpec& spec) {
  const std::size_t n = spec.elements.size();
  if (n == 0) throw InvalidInput("poset has no elements");
  if (n > kMaxElements) throw InvalidInput("poset has more than 64 elements");

  Lattice l;
  l.names_ = spec.elements;
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (l.names_[i].empty()) throw InvalidInput("empty element name");
    if (!index.emplace(l.names_[i], i).second) {
      throw InvalidInput("duplicate element name '" + l.names_[i] + "'");
    }
  }

  l.down_.assign(n, ElemSet{});
  for (std::uint32_t i = 0; i < n; ++i) l.down_[i].insert(Elem(i));
  for (const auto& [lo, hi] : spec.covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw InvalidInput("cover (" + lo + ", " + hi + ") names an unknown element");
    }
    if (a->second == b->second) throw CycleError("self-cover on '" + lo + "'");
    l.down_[b->second].insert(Elem(a->second));
  }
  // Transitive closure: p in down[q] and q in down[r] implies p in down[r].
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t r = 0; r < n; ++r) {
      if (l.down_[r].contains(Elem(k))) l.down_[r] = l.down_[r] | l.down_[k];
    }
  }
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = p + 1; q < n; ++q) {
      if (l.down_[p].contains(Elem(q)) && l.down_[q].contains(Elem(p))) {
        throw CycleError("order is not antisymmetric: '" + l.names_[p] + "' and '" +
                         l.names_[q] + "' lie below each other");
      }
    }
  }
  l.up_.assign(n, ElemSet{});
  for (std::uint32_t q = 0; q < n; ++q) {
    for (Elem p : l.down_[q].elements()) l.up_[p.index].insert(Elem(q));
  }

  const ElemSet all = l.all();
  auto bottom = least(all, l.up_);
  auto top = greatest(all, l.down_);
  if (!bottom) throw NoBound("no least element (empty join has no value)");
  if (!top) throw NoBound("no greatest element");
  l.bottom_ = *bottom;
  l.top_ = *top;

  l.meet_.resize(n * n);
  l.join_.resize(n * n);
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      auto m = greatest(l.down_[p] & l.down_[q], l.down_);
      auto j = least(l.up_[p] & l.up_[q], l.up_);
      if (!m) throw NoBound("'" + l.names_[p] + "' and '" + l.names_[q] + "' have no meet");
      if (!j) throw NoBound("'" + l.names_[p] + "' and '" + l.names_[q] + "' have no join");
      l.meet_[p * n + q] = *m;
      l.join_[p * n + q] = *j;
    }
  }

  l.ascending_ = l.elements();
  std::stable_sort(l.ascending_.begin(), l.ascending_.end(), [&](Elem a, Elem b) {
    return l.down_[a.index].size() < l.down_[b.index].size();
  });
  return l;
}

Elem Lattice::envelope(ElemSet s) const {
  Elem acc = bottom_;
  for (Elem e : s.elements()) acc = join(acc, e);
  return acc;
}

ElemSet Lattice::down_closure(ElemSet s) const {
  ElemSet out;
  for (Elem e : s.elements()) out = out | down_[e.index];
  return out;
}

std::optional<Elem> Lattice::find(const std::string& name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Elem(i);
  }
  return std::nullopt;
}

Elem Lattice::at(const std::string& name) const {
  if (auto e = find(name)) return *e;
  throw InvalidInput("unknown algebra element '" + name + "'");
}

std::vector<std::pair<Elem, Elem>> Lattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem p : elements()) {
    const ElemSet strictly_below = down_[p.index].minus(ElemSet::single(p));
    for (Elem q : strictly_below.elements()) {
      // q is covered by p if nothing lies strictly between them.
      const ElemSet between = strictly_below & up_[q.index];
      if (between == ElemSet::single(q)) out.emplace_back(q, p);
    }
  }
  return out;
}

PosetSpec Lattice::to_spec() const {
  PosetSpec spec;
  spec.elements = names_;
  for (auto [lo, hi] : cover_pairs()) spec.covers.emplace_back(name(lo), name(hi));
  return spec;
}

std::optional<FrameViolation> find_frame_violation(const Lattice& l,
                                                   const ValidationOptions& opts,
                                                   std::uint64_t* checked) {
  const std::size_t n = l.size();
  auto check = [&](ElemSet a, Elem b) -> bool {
    Elem rhs = l.bottom();
    for (Elem x : a.elements()) rhs = l.join(rhs, l.meet(x, b));
    return l.meet(l.envelope(a), b) == rhs;
  };
  std::uint64_t count = 0;
  if (n <= opts.exhaustive_limit) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      ++count;
      for (Elem b : l.elements()) {
        if (!check(ElemSet(bits), b)) {
          if (checked) *checked = count;
          return FrameViolation{ElemSet(bits), b};
        }
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t mask = l.all().bits();
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      ++count;
      const ElemSet a(rng() & mask);
      const Elem b(pick(rng));
      if (!check(a, b)) {
        if (checked) *checked = count;
        return FrameViolation{a, b};
      }
    }
  }
  if (checked) *checked = count;
  return std::nullopt;
}

HeytingAlgebra HeytingAlgebra::build(const PosetSpec& spec, const ValidationOptions& opts) {
  HeytingAlgebra h;
  static_cast<Lattice&>(h) = Lattice::build(spec);

  std::uint64_t checked = 0;
  if (auto v = find_frame_violation(h, opts, &checked)) {
    std::string subset = "{";
    for (Elem e : v->subset.elements()) {
      subset += (subset.size() > 1 ? "," : "") + h.name(e);
    }
    throw NotDistributive("frame law fails for A = " + subset + "}, b = " + h.name(v->b));
  }
  h.validity_.mode = spec.elements.size() <= opts.exhaustive_limit
                         ? ValidityReport::Mode::kExhaustive
                         : ValidityReport::Mode::kSampled;
  h.validity_.subsets_checked = checked;
  h.validity_.seed = h.validity_.mode == ValidityReport::Mode::kSampled ? opts.seed : 0;

  const std::size_t n = h.size();
  h.implies_.resize(n * n);
  for (Elem p : h.elements()) {
    for (Elem q : h.elements()) {
      ElemSet ts;
      for (Elem t : h.elements()) {
        if (h.leq(h.meet(p, t), q)) ts.insert(t);
      }
      h.implies_[p.index * n + q.index] = h.envelope(ts);
    }
  }
  return h;
}

bool HeytingAlgebra::is_boolean() const {
  for (Elem p : elements()) {
    if (negate(negate(p)) != p) return false;
  }
  return true;
}

namespace algebras {

HeytingAlgebra two() { return HeytingAlgebra::build({{"mu", "M"}, {{"mu", "M"}}}); }

HeytingAlgebra chain3() {
  return HeytingAlgebra::build({{"mu", "p", "M"}, {{"mu", "p"}, {"p", "M"}}});
}

HeytingAlgebra chain(std::size_t n) {
  if (n < 2) throw InvalidInput("a chain needs at least two elements");
  PosetSpec spec;
  spec.elements.push_back("mu");
  for (std::size_t i = 1; i + 1 < n; ++i) spec.elements.push_back("p" + std::to_string(i));
  spec.elements.push_back("M");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    spec.covers.emplace_back(spec.elements[i], spec.elements[i + 1]);
  }
  return HeytingAlgebra::build(spec);
}

HeytingAlgebra diamond() {
  return HeytingAlgebra::build(
      {{"mu", "a", "b", "M"}, {{"mu", "a"}, {"mu", "b"}, {"a", "M"}, {"b", "M"}}});
}

PosetSpec pentagon_spec() {
  return {{"mu", "a", "b", "c", "M"},
          {{"mu", "a"}, {"a", "b"}, {"b", "M"}, {"mu", "c"}, {"c", "M"}}};
}

}  // namespace algebras

}  // namespace omegaset
