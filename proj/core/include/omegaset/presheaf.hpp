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

#ifndef OMEGASET_PRESHEAF_HPP_
#define OMEGASET_PRESHEAF_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegaset/heyting.hpp"
#include "omegaset/tset.hpp"

namespace omegaset {

/// A presheaf on the poset T: a finite set of sections over every p and a
/// restriction map sections(p) → sections(q) for every q ≤ p.
///
/// Sections are identified by index. Each section also carries a name; the
/// default is the canonical "<p>#<i>".
class Presheaf {
 public:
  using RestrictFn = std::function<std::size_t(Elem p, Elem q, std::size_t s)>;
  /// Restriction maps along Hasse edges, keyed by (p, q) with q covered by p.
  using CoverMaps = std::map<std::pair<Elem, Elem>, std::vector<std::size_t>>;

  /// Builds the full restriction table from `restrict`, called for q ≤ p.
  /// Checks ranges only; see `validate_presheaf` for functoriality.
  Presheaf(AlgebraPtr algebra, std::vector<std::size_t> counts, const RestrictFn& restrict,
           std::vector<std::vector<std::string>> names = {});

  /// Derives composites from the Hasse-edge maps. Throws InvalidPresheaf if
  /// two paths give different composites or a map is missing.
  static Presheaf from_covers(AlgebraPtr algebra, std::vector<std::vector<std::string>> names,
                              const CoverMaps& covers);

  const HeytingAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  std::size_t count(Elem p) const { return names_[p.index].size(); }
  std::size_t total_sections() const;
  std::size_t restrict(Elem p, Elem q, std::size_t s) const {
    return restrict_[p.index * algebra_->size() + q.index][s];
  }
  const std::vector<std::size_t>& restriction_map(Elem p, Elem q) const {
    return restrict_[p.index * algebra_->size() + q.index];
  }

  const std::string& section_name(Elem p, std::size_t s) const { return names_[p.index][s]; }
  const std::vector<std::vector<std::string>>& section_names() const { return names_; }
  std::optional<std::size_t> find_section(Elem p, const std::string& name) const;

  /// A copy with canonical "<p>#<i>" names.
  Presheaf with_canonical_names() const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::size_t>> restrict_;
};

/// Identity and composition laws; empty when P is a functor.
std::vector<std::string> validate_presheaf(const Presheaf& p);

/// h_p: one section over every r ≤ p, none elsewhere.
Presheaf representable(AlgebraPtr algebra, Elem p);
/// 1: one section everywhere.
Presheaf terminal_presheaf(AlgebraPtr algebra);
/// No sections anywhere.
Presheaf empty_presheaf(AlgebraPtr algebra);

/// A natural transformation; components[p][s] is the image of section s.
struct NatTransform {
  std::vector<std::vector<std::size_t>> components;

  std::size_t operator()(Elem p, std::size_t s) const { return components[p.index][s]; }
  friend bool operator==(const NatTransform&, const NatTransform&) = default;
  friend auto operator<=>(const NatTransform&, const NatTransform&) = default;
};

bool is_natural(const Presheaf& source, const Presheaf& target, const NatTransform& alpha);
NatTransform compose(const NatTransform& beta, const NatTransform& alpha);
NatTransform identity_nat(const Presheaf& p);

/// Optional restriction on candidate images: allowed(p, s, image).
using ImageFilter = std::function<bool(Elem, std::size_t, std::size_t)>;

/// Calls `visit` for every natural transformation source → target (stop by
/// returning false). Returns the number visited. Throws SizeGuard when the
/// search explores more than `guard.limit` partial assignments.
std::uint64_t for_each_nat(const Presheaf& source, const Presheaf& target,
                           const std::function<bool(const NatTransform&)>& visit,
                           const EnumerationGuard& guard = {}, const ImageFilter& allowed = {});
std::vector<NatTransform> enumerate_nats(const Presheaf& source, const Presheaf& target,
                                         const EnumerationGuard& guard = {});

/// A natural isomorphism, if any, found by exhaustive search over
/// level-wise bijections.
std::optional<NatTransform> find_presheaf_isomorphism(const Presheaf& a, const Presheaf& b);
inline bool isomorphic(const Presheaf& a, const Presheaf& b) {
  return find_presheaf_isomorphism(a, b).has_value();
}

}  // namespace omegaset

#endif  // OMEGASET_PRESHEAF_HPP_
