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

// Deterministic generators for the instance pools the law suites run over.

#ifndef OMEGASET_TOOLS_POOL_HPP_
#define OMEGASET_TOOLS_POOL_HPP_

#include <string>
#include <vector>

#include "omegaset/heyting.hpp"
#include "omegaset/presheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/tset.hpp"

namespace omegaset::tools {

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

/// Every distributive lattice with min_size..max_size elements up to
/// isomorphism, ordered by size and then by a canonical code. Chains, the
/// two-element algebra and the diamond carry their usual names and element
/// names; the rest are "L<n>.<k>" with interior elements a, b, c, ...
std::vector<NamedAlgebra> enumerate_algebras(std::size_t max_size, std::size_t min_size = 2,
                                             const ValidationOptions& opts = {});

struct TSetFilter {
  bool separated = true;
  bool postulate = true;
};

/// Every valid T-set with at most `max_carrier` elements up to isomorphism,
/// filtered. Elements are named x1, x2, ... in nondecreasing existence order.
/// Throws SizeGuard when the search exceeds the guard.
std::vector<TSet> enumerate_tsets(const AlgebraPtr& algebra, std::size_t max_carrier,
                                  const TSetFilter& filter, const EnumerationGuard& guard = {});

/// Every sheaf with at most `max_total` sections in all, up to isomorphism.
std::vector<Presheaf> enumerate_sheaves(const AlgebraPtr& algebra, const Topology& j,
                                        std::size_t max_total, const EnumerationGuard& guard = {});

/// Section counts in ascending element order, e.g. "(1,1,0)".
std::string count_signature(const Presheaf& p);

}  // namespace omegaset::tools

#endif  // OMEGASET_TOOLS_POOL_HPP_
