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

#ifndef OMEGASET_TSET_HPP_
#define OMEGASET_TSET_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegaset/heyting.hpp"

namespace omegaset {

using AlgebraPtr = std::shared_ptr<const HeytingAlgebra>;

/// Upper bound on brute-force enumerations (candidate maps, hom-sets).
struct EnumerationGuard {
  std::uint64_t limit = 1'000'000;
};

/// A set A with an algebra-valued identity Id: A × A → T.
///
/// The constructor only checks shapes; the symmetry/transitivity laws are
/// reported by `validate_tset`, so malformed tables can still be inspected.
/// The empty carrier is legal.
class TSet {
 public:
  TSet(AlgebraPtr algebra, std::vector<std::string> names, std::vector<Elem> id);
  TSet(AlgebraPtr algebra, std::vector<std::string> names,
       const std::function<Elem(std::size_t, std::size_t)>& id);

  const HeytingAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  Elem id(std::size_t x, std::size_t y) const { return id_[x * size() + y]; }
  /// Ee x = Id(x, x).
  Elem existence(std::size_t x) const { return id(x, x); }

  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::string> names_;
  std::vector<Elem> id_;
};

/// A map carrier → T, candidate singleton of a T-set.
struct AtomMap {
  std::vector<Elem> values;

  Elem operator()(std::size_t x) const { return values[x]; }
  friend bool operator==(const AtomMap&, const AtomMap&) = default;
  friend auto operator<=>(const AtomMap&, const AtomMap&) = default;
};

/// One violated law with the carrier elements witnessing it.
struct Violation {
  std::string rule;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct TSetReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks symmetry, transitivity and Id(x,y) ≤ Ee x ∧ Ee y. With
/// `require_separated`, distinct indiscernible elements are rejected too.
TSetReport validate_tset(const TSet& t, bool require_separated = false);

inline Elem existence(const TSet& t, std::size_t x) { return t.existence(x); }

/// Id(x,y) = Ee x = Ee y.
bool indiscernible(const TSet& t, std::size_t x, std::size_t y);
bool is_separated(const TSet& t);

struct AtomCheck {
  bool ok = true;
  std::optional<Violation> witness;
  explicit operator bool() const { return ok; }
};

/// A1: a(x) ∧ Id(x,y) ≤ a(y) and A2: a(x) ∧ a(y) ≤ Id(x,y) for all pairs.
AtomCheck check_atom(const TSet& t, const AtomMap& a);
inline bool is_atom(const TSet& t, const AtomMap& a) { return check_atom(t, a).ok; }
/// A1 alone: `a` describes a subobject of t rather than a singleton.
AtomCheck check_subobject_map(const TSet& t, const AtomMap& a);
inline bool is_subobject_map(const TSet& t, const AtomMap& a) {
  return check_subobject_map(t, a).ok;
}

/// The real atom Id(x, ·).
AtomMap atom_of(const TSet& t, std::size_t x);
/// Σ of the atom's values; the existence degree of the element it denotes.
Elem atom_existence(const TSet& t, const AtomMap& a);

/// All x with a = Id(x, ·), in carrier order. Throws NotAtom.
std::vector<std::size_t> real_witnesses(const TSet& t, const AtomMap& a);

/// Every atom of t, in lexicographic order of value indices. Throws SizeGuard
/// when the pruned search visits more than `guard.limit` partial maps.
std::vector<AtomMap> enumerate_atoms(const TSet& t, const EnumerationGuard& guard = {});

struct PostulateReport {
  bool satisfied = true;
  std::vector<AtomMap> unreal;
};

/// Every atom is real. The empty carrier fails: its empty atom has no witness.
PostulateReport satisfies_postulate(const TSet& t, const EnumerationGuard& guard = {});

/// (a ↾ p)(y) = a(y) ∧ p.
AtomMap localise_atom(const TSet& t, const AtomMap& a, Elem p);

/// The lowest-index witness of Id(x, ·) ∧ p. Throws PostulateRequired.
std::size_t localise_element(const TSet& t, std::size_t x, Elem p);

/// Table of x ↾ p for every (x, p), indexed x * |T| + p; entries are empty
/// where the localised atom is unreal.
std::vector<std::optional<std::size_t>> localisation_table(const TSet& t);

/// x ‡ y iff x ↾ Ee y and y ↾ Ee x denote the same element. Throws
/// PostulateRequired.
bool compatible(const TSet& t, std::size_t x, std::size_t y);
/// x ≤ y iff Ee x = Id(x, y).
bool element_leq(const TSet& t, std::size_t x, std::size_t y);

struct FamilyEnvelope {
  AtomMap atom;           // π(x) = Σ{Id(b, x) | b ∈ B}
  std::size_t witness;    // ε, the real synthesis of B
};

/// Envelope of a pairwise compatible family. Throws NotCompatible (naming the
/// offending pair) or PostulateRequired.
FamilyEnvelope family_envelope(const TSet& t, std::span<const std::size_t> family);

/// The T-set of all atoms of t, with Id(a,b) = Σ{a(x) ∧ b(x)}. Throws
/// SizeGuard.
TSet singleton_completion(const TSet& t, const EnumerationGuard& guard = {});

/// Quotient by indiscernibility. `classes[x]` gives the class of x; class
/// representatives are the lowest-index members.
struct SeparatedQuotient {
  TSet quotient;
  std::vector<std::size_t> classes;
  std::vector<std::vector<std::size_t>> members;
};
SeparatedQuotient separated_quotient(const TSet& t);

/// An Id-preserving bijection a → b, if one exists.
std::optional<std::vector<std::size_t>> find_tset_isomorphism(const TSet& a, const TSet& b);

/// A carrier map between T-sets over one algebra.
struct TRelation {
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  friend bool operator==(const TRelation&, const TRelation&) = default;
};

/// Checks Ee ρ(a) = Ee a and ρ(a ↾ p) = ρ(a) ↾ p (defining conditions), then
/// Id_A(a,b) ≤ Id_B(ρa, ρb) and preservation of ‡ (consequences, checked not
/// assumed). Elements of B are compared up to indiscernibility.
TSetReport validate_relation(const TSet& source, const TSet& target, const TRelation& rel);
inline bool is_relation(const TSet& source, const TSet& target, const TRelation& rel) {
  return validate_relation(source, target, rel).ok();
}

/// Every valid relation source → target, in lexicographic order of maps.
/// Throws SizeGuard when |target|^|source| exceeds the guard.
std::vector<TRelation> hom_set(const TSet& source, const TSet& target,
                               const EnumerationGuard& guard = {});

TRelation compose(const TRelation& g, const TRelation& f);
TRelation identity_relation(const TSet& t);

}  // namespace omegaset

#endif  // OMEGASET_TSET_HPP_
