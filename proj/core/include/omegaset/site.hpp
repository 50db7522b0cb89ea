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

#ifndef OMEGASET_SITE_HPP_
#define OMEGASET_SITE_HPP_

#include <string>
#include <vector>

#include "omegaset/heyting.hpp"

namespace omegaset {

/// A sieve on p in the poset site: a downward closed subset of ↓p. In a
/// poset an arrow q → p is determined by q, so members are plain elements.
struct Sieve {
  Elem at;
  ElemSet members;

  static Sieve maximal(const Lattice& l, Elem p) { return {p, l.down(p)}; }
  bool contains(Elem q) const { return members.contains(q); }
  friend bool operator==(const Sieve&, const Sieve&) = default;
};

/// Checks that `s.members` is a downward closed subset of ↓s.at.
bool is_sieve(const Lattice& l, const Sieve& s);

/// Every sieve on p, ordered by member bitmask.
std::vector<Sieve> sieves_on(const Lattice& l, Elem p);

/// {q ≤ r | q ∈ S}. Throws NotBelow when r ≰ S.at.
Sieve pullback_sieve(const Lattice& l, const Sieve& s, Elem r);

/// A family of subsets per element: either a basis K or, once generated, the
/// covering sieves J(p) of a topology.
using Coverage = std::vector<std::vector<ElemSet>>;

/// Θ ⊆ T with ΣΘ = p, in bitmask order.
std::vector<ElemSet> territories(const Lattice& l, Elem p);
Coverage territory_basis(const Lattice& l);

/// A Grothendieck topology on the poset: J(p) stored as sorted bitmasks.
class Topology {
 public:
  Topology(const Lattice& l, Coverage covering);

  bool covers(const Sieve& s) const;
  const std::vector<ElemSet>& covering(Elem p) const { return covering_[p.index]; }
  const Coverage& coverage() const { return covering_; }

 private:
  Coverage covering_;
};

struct TopologyViolation {
  std::string axiom;  // "maximality" | "stability" | "transitivity"
  Elem at;
  ElemSet sieve;
  std::string detail;
};

/// Checks maximality, stability and transitivity (over arrows of a covering
/// sieve) exhaustively.
std::vector<TopologyViolation> validate_topology(const Lattice& l, const Topology& j);

struct BasisViolation {
  std::string condition;  // "identity" | "stability" | "transitivity"
  Elem at;
  ElemSet family;
  std::string detail;
};
std::vector<BasisViolation> validate_basis(const Lattice& l, const Coverage& basis);

/// J(p) = sieves on p containing some member of K(p). Throws BasisInvalid
/// if the basis fails its three conditions; never repairs a basis.
Topology topology_from_basis(const Lattice& l, const Coverage& basis);

/// The topology generated by territories: S covers p iff ΣS = p.
Topology territory_topology(const Lattice& l);

/// S is closed iff for every r ≤ p, r*S ∈ J(r) implies r ∈ S.
bool is_closed(const Lattice& l, const Sieve& s, const Topology& j);
/// Least closed sieve containing S (fixpoint of the one-step rule
/// S ↦ {r ≤ p | r*S ∈ J(r)}).
Sieve closure(const Lattice& l, const Sieve& s, const Topology& j);
/// All closed sieves on p, by brute force over sieves_on.
std::vector<Sieve> closed_sieves(const Lattice& l, const Topology& j, Elem p);

std::string format_set(const Lattice& l, ElemSet s);

}  // namespace omegaset

#endif  // OMEGASET_SITE_HPP_
