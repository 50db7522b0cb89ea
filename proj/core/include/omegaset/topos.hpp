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

#ifndef OMEGASET_TOPOS_HPP_
#define OMEGASET_TOPOS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omegaset/presheaf.hpp"
#include "omegaset/report.hpp"
#include "omegaset/sheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/tset.hpp"

namespace omegaset {

// ---------------------------------------------------------------------------
// T-set level constructions.

/// Carrier T, Id(p, q) = p ∧ q.
TSet terminal(AlgebraPtr algebra);
/// x ↦ Ee x, the unique relation into `terminal`.
TRelation to_terminal(const TSet& a);

/// An object with two legs.
struct TSetCone {
  TSet object;
  TRelation first;
  TRelation second;
};

/// All pairs, Id((a,b),(a',b')) = Id(a,a') ∧ Id(b,b'); the legs send (a,b) to a and b
/// localised to Ee a ∧ Ee b (PostulateRequired when unreal). Not separated in
/// general: (a,b) is indiscernible from that localised pair.
TSetCone product(const TSet& a, const TSet& b);

/// Γ_ρ = {(x, ρx)} with Id_A(a,b) ∧ Id_B(ρa, ρb); legs to A and B.
TSetCone graph(const TSet& a, const TSet& b, const TRelation& rho);

/// Pairs (a ↾ d, b ↾ d) with d = Id_C(f a, g b), deduplicated; legs to A and B.
TSetCone pullback(const TSet& a, const TSet& b, const TSet& c, const TRelation& f,
                  const TRelation& g);

/// The cone with its object quotiented by indiscernibility; legs follow the
/// class representatives.
TSetCone separated_cone(const TSetCone& cone);

/// For every W in the pool and every pair (u: W → A, v: W → B) accepted by
/// `commutes`, counts mediators m: W → cone.object with first∘m = u and
/// second∘m = v. Passes iff every count is exactly one.
CheckResult check_tset_cone(const std::string& check, const TSet& a, const TSet& b,
                            const TSetCone& cone, const std::vector<TSet>& pool,
                            const std::function<bool(const TSet&, const TRelation&,
                                                     const TRelation&)>& commutes,
                            const EnumerationGuard& guard = {});

// ---------------------------------------------------------------------------
// Presheaf level constructions.

struct Cone {
  Presheaf object;
  NatTransform first;
  NatTransform second;
};

/// Pointwise product; the pair (a, b) at p has index a * |B(p)| + b.
Cone product(const Presheaf& a, const Presheaf& b);
/// Pointwise {(x, y) | f x = g y}.
Cone pullback(const Presheaf& x, const Presheaf& y, const Presheaf& z, const NatTransform& f,
              const NatTransform& g);

/// Arrows u × v: A × B → C × D between products built by `product`.
NatTransform product_map(const Presheaf& a, const Presheaf& b, const Presheaf& c,
                         const Presheaf& d, const NatTransform& u, const NatTransform& v);

/// Y^X with Y^X(p) = Nat(h_p × X, Y).
struct Exponential {
  Presheaf object;
  /// transformations[p][s]: the natural family (θ_r : X(r) → Y(r))_{r ≤ p}.
  std::vector<std::vector<NatTransform>> transformations;
  /// Y^X × X, and ev: Y^X × X → Y.
  Cone eval_domain;
  NatTransform eval;
};
Exponential exponential(const Presheaf& x, const Presheaf& y, const EnumerationGuard& guard = {});

/// k: Z × X → Y ↦ k̂: Z → Y^X.
NatTransform transpose(const Exponential& e, const Presheaf& z, const Presheaf& x,
                       const NatTransform& k);
/// g: Z → Y^X ↦ ev ∘ (g × id): Z × X → Y.
NatTransform untranspose(const Exponential& e, const Presheaf& z, const Presheaf& x,
                         const NatTransform& g);

/// Ω(p) = closed sieves on p, restriction = sieve pullback, true_p = ↓p.
struct Omega {
  Presheaf object;
  NatTransform truth;  // 1 → Ω
  std::vector<std::vector<Sieve>> sieves;
};
Omega omega(AlgebraPtr algebra, const Topology& j);

struct SubobjectInclusion {
  Presheaf sub;
  Presheaf parent;
  NatTransform inclusion;
};

/// The sub-presheaf selected by `members[p]` (sorted section indices). Throws
/// NotSubobject unless the selection is closed under restriction.
SubobjectInclusion make_subobject(const Presheaf& parent,
                                  const std::vector<std::vector<std::size_t>>& members);
/// Every sub-presheaf of A that is a sheaf, by brute force over subsets.
std::vector<SubobjectInclusion> enumerate_subsheaves(const Presheaf& a, const Topology& j,
                                                     const EnumerationGuard& guard = {});

/// φ_p(x) = {q ≤ p | x|q ∈ B(q)}. Throws NotSubobject when the inclusion is
/// not a natural injection or some φ_p(x) is not a closed sieve.
NatTransform classify(const SubobjectInclusion& inc, const Omega& omega);
/// Sections of A sent to truth by θ, per element.
std::vector<std::vector<std::size_t>> truth_preimage(const Presheaf& a, const Omega& omega,
                                                     const NatTransform& theta);

/// Universal-property checks; each verifies existence and uniqueness.
CheckResult check_product(const std::string& instance, const Presheaf& a, const Presheaf& b,
                          const Cone& cone, const std::vector<Presheaf>& pool,
                          const EnumerationGuard& guard = {});
CheckResult check_pullback(const std::string& instance, const Presheaf& x, const Presheaf& y,
                           const Presheaf& z, const NatTransform& f, const NatTransform& g,
                           const Cone& cone, const std::vector<Presheaf>& pool,
                           const EnumerationGuard& guard = {});
/// Hom(Z × X, Y) ≅ Hom(Z, Y^X) by cardinality, both round trips, and
/// naturality in Z along every u: Z' → Z with Z' from the pool.
CheckResult check_exponential(const std::string& instance, const Presheaf& x, const Presheaf& y,
                              const Exponential& e, const std::vector<Presheaf>& pool,
                              const Topology& j, const EnumerationGuard& guard = {});
/// For every subsheaf of A: φ natural, the truth square a pullback, φ the
/// unique such arrow; plus |Sub(A)| = |Hom(A, Ω)|.
CheckResult check_classifier(const std::string& instance, const Presheaf& a, const Omega& omega,
                             const Topology& j, const EnumerationGuard& guard = {});

/// Terminal, products, pullbacks, exponentials, Ω and classification over a
/// pool of sheaves on one algebra, in a fixed order.
CheckResults check_topos_axioms(const std::vector<Presheaf>& pool,
                                const std::vector<std::string>& names, const Topology& j,
                                const EnumerationGuard& guard = {});

// ---------------------------------------------------------------------------
// The exposition counterexample and SG.

struct ExpositionReport {
  std::size_t points = 0;                 // |X|
  std::uint64_t mediating_maps = 0;       // h: X³ → X³ with π1∘h = π1, fπ1∘h = fπ1
  std::uint64_t graph_mediators = 0;      // X³ → Γ_f, expected 1
  bool graph_universal = false;           // unique mediation for every cone in the pool
  bool refuted = false;                   // mediating_maps ≥ 2
  std::vector<std::string> sample_maps;   // a few mediating maps, rendered
  CheckResults results;
};

/// Over the two-element algebra with X a set of `points` elements and
/// f = id_X: counts the arrows between two copies of the exposition
/// (X³, π1, f∘π1), and checks unique mediation into the graph Γ_f.
ExpositionReport exposition_counterexample(AlgebraPtr algebra, std::size_t points = 2,
                                           const EnumerationGuard& guard = {});

struct SGReport {
  bool ok = true;
  std::uint64_t pairs_checked = 0;
  CheckResults results;
};

/// For every f ≠ g: X ⇉ Y in the pool, finds s and x ∈ X(s) (the arrow
/// h_s → X, with h_s ↪ 1) such that f x and g x are not locally equal, i.e.
/// do not agree on any covering sieve of s.
SGReport sg_check(const std::vector<Presheaf>& pool, const std::vector<std::string>& names,
                  const Topology& j, const EnumerationGuard& guard = {});

/// The natural transformation induced by a relation between postulate
/// satisfying T-sets on their presheaves.
NatTransform relation_to_nat(const TSetPresheaf& source, const TSetPresheaf& target,
                             const TRelation& rho);

/// Two global sections agreeing on the cover {a, b} of M in the diamond.
Presheaf doubled_point(AlgebraPtr diamond);

}  // namespace omegaset

#endif  // OMEGASET_TOPOS_HPP_
