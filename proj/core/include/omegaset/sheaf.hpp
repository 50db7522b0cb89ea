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

#ifndef OMEGASET_SHEAF_HPP_
#define OMEGASET_SHEAF_HPP_

#include <optional>
#include <vector>

#include "omegaset/presheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/tset.hpp"

namespace omegaset {

/// A choice of section x_q ∈ P(q) for every q in a sieve, compatible under
/// restriction. `choice` is indexed by element; entries outside the sieve
/// are unused.
struct MatchingFamily {
  Sieve sieve;
  std::vector<std::size_t> choice;

  std::size_t at(Elem q) const { return choice[q.index]; }
};

/// All matching families of P over S.
std::vector<MatchingFamily> matching_families(const Presheaf& p, const Sieve& s);
/// All x ∈ P(S.at) whose restrictions reproduce the family.
std::vector<std::size_t> amalgamate(const Presheaf& p, const MatchingFamily& m);

struct SheafWitness {
  MatchingFamily family;
  std::size_t amalgamations = 0;
};

struct SheafCheck {
  bool ok = true;
  std::optional<SheafWitness> witness;  // first failing (p, S, family)
  explicit operator bool() const { return ok; }
};

/// Every matching family over every covering sieve has at most one
/// amalgamation.
SheafCheck check_separated(const Presheaf& p, const Topology& j);
/// ... and exactly one.
SheafCheck check_sheaf(const Presheaf& p, const Topology& j);
inline bool is_separated(const Presheaf& p, const Topology& j) { return check_separated(p, j).ok; }
inline bool is_sheaf(const Presheaf& p, const Topology& j) { return check_sheaf(p, j).ok; }

/// One plus-construction step: matching families over covering sieves,
/// identified when they agree on a covering sieve. Throws SizeGuard if more
/// than `guard.limit` families arise.
Presheaf plus_construction(const Presheaf& p, const Topology& j, const EnumerationGuard& guard = {});
/// P⁺⁺.
Presheaf sheafify(const Presheaf& p, const Topology& j, const EnumerationGuard& guard = {});

struct TSetPresheaf {
  Presheaf presheaf;
  /// Classes of indiscernible elements merged by the quotient (only classes
  /// with more than one member).
  std::vector<std::vector<std::size_t>> merged;
  /// Carrier element → (Ee x, section index).
  std::vector<std::pair<Elem, std::size_t>> section_of;
};

/// F_A(p) = {x | Ee x = p} modulo indiscernibility, restricting by
/// localisation. Throws PostulateRequired.
TSetPresheaf tset_to_presheaf(const TSet& t, const EnumerationGuard& guard = {});

/// Carrier = all sections; Id(x, y) = Σ{r ≤ Ee x ∧ Ee y | x|r = y|r}. Throws
/// NotASheaf unless P is a sheaf for the territory topology.
TSet presheaf_to_tset(const Presheaf& p);

/// The presheaf of an arbitrary (quasi-)T-set: P(p) = {x | p ≤ Ee x} modulo
/// p ≤ Id(x, y), restriction by re-grading. Needs no postulate.
Presheaf associated_presheaf(const TSet& t);

}  // namespace omegaset

#endif  // OMEGASET_SHEAF_HPP_
