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

// The invariant suites behind `laws`.

#ifndef OMEGASET_TOOLS_SUITE_HPP_
#define OMEGASET_TOOLS_SUITE_HPP_

#include <string>
#include <vector>

#include "io.hpp"
#include "omegaset/report.hpp"
#include "pool.hpp"

namespace omegaset::tools {

/// A sheaf pool over one algebra, for the topos-level suites.
struct SheafPool {
  NamedAlgebra algebra;
  std::vector<Presheaf> sheaves;
  std::vector<std::string> names;
};

struct InstancePool {
  std::vector<NamedAlgebra> algebras;
  /// Separated postulate-satisfying T-sets, per algebra.
  std::vector<std::vector<TSet>> tsets;
  /// Every valid T-set (quasi-T-sets included), per algebra.
  std::vector<std::vector<TSet>> quasi;
  /// Canonical sheaf pools: two and chain3 with at most 3 sections in all,
  /// the diamond with at most 4, when within max_algebra_size.
  std::vector<SheafPool> sheaf_pools;
  PosetSpec pentagon;
};

InstancePool generate_instance_pool(const SuiteConfig& config);

/// Named instances outside the generated pools.
TSet chain3_unreal_atom();

CheckResults heyting_laws(const NamedAlgebra& a);
CheckResults tset_laws(const std::string& instance, const TSet& t, const EnumerationGuard& guard);
CheckResults site_laws(const NamedAlgebra& a);
CheckResults sheaf_laws(const std::string& instance, const TSet& t, const EnumerationGuard& guard);
CheckResult sheafify_oracle(const std::string& instance, const TSet& t,
                            const EnumerationGuard& guard);
CheckResults omega_laws(const SheafPool& pool, const EnumerationGuard& guard);
CheckResults sg_laws(const SheafPool& pool, const EnumerationGuard& guard);
/// The doubled point over the diamond must exhibit an SG failure.
CheckResult sg_doubled_point(const EnumerationGuard& guard);

/// Runs the configured suites in canonical order.
CheckResults run_laws(const SuiteConfig& config);

}  // namespace omegaset::tools

#endif  // OMEGASET_TOOLS_SUITE_HPP_
