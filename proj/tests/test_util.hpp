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


// Shared fixtures and brute-force oracles for the unit tests. The oracles
// work from the raw cover relation or from definitions, never from the
// library's own tables.

#ifndef OMEGASET_TESTS_TEST_UTIL_HPP_
#define OMEGASET_TESTS_TEST_UTIL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegaset/heyting.hpp"
#include "omegaset/presheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/tset.hpp"

namespace omegaset::testing {

inline AlgebraPtr share(HeytingAlgebra h) {
  return std::make_shared<const HeytingAlgebra>(std::move(h));
}
inline AlgebraPtr two() { return share(algebras::two()); }
inline AlgebraPtr chain3() { return share(algebras::chain3()); }
inline AlgebraPtr diamond() { return share(algebras::diamond()); }

/// Reflexive-transitive closure of the cover relation, by Warshall.
inline std::vector<std::vector<bool>> order_from_covers(const PosetSpec& spec) {
  const std::size_t n = spec.elements.size();
  auto index = [&](const std::string& s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (spec.elements[i] == s) return i;
    }
    return n;
  };
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [lo, hi] : spec.covers) le[index(lo)][index(hi)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (le[i][k] && le[k][j]) le[i][j] = true;
      }
    }
  }
  return le;
}

/// Brute-force lattice oracle over an explicit order matrix.
struct OrderOracle {
  std::vector<std::vector<bool>> le;

  std::size_t size() const { return le.size(); }
  std::optional<std::size_t> glb(const std::vector<std::size_t>& s) const {
    std::vector<std::size_t> lower;
    for (std::size_t x = 0; x < size(); ++x) {
      bool ok = true;
      for (std::size_t y : s) ok = ok && le[x][y];
      if (ok) lower.push_back(x);
    }
    for (std::size_t x : lower) {
      bool greatest = true;
      for (std::size_t y : lower) greatest = greatest && le[y][x];
      if (greatest) return x;
    }
    return std::nullopt;
  }
  std::optional<std::size_t> lub(const std::vector<std::size_t>& s) const {
    std::vector<std::size_t> upper;
    for (std::size_t x = 0; x < size(); ++x) {
      bool ok = true;
      for (std::size_t y : s) ok = ok && le[y][x];
      if (ok) upper.push_back(x);
    }
    for (std::size_t x : upper) {
      bool least = true;
      for (std::size_t y : upper) least = least && le[x][y];
      if (least) return x;
    }
    return std::nullopt;
  }
  /// max{t | p ∧ t ≤ q}, searched over all t.
  std::optional<std::size_t> implies(std::size_t p, std::size_t q) const {
    std::vector<std::size_t> good;
    for (std::size_t t = 0; t < size(); ++t) {
      if (auto m = glb({p, t}); m && le[*m][q]) good.push_back(t);
    }
    for (std::size_t x : good) {
      bool greatest = true;
      for (std::size_t y : good) greatest = greatest && le[y][x];
      if (greatest) return x;
    }
    return std::nullopt;
  }
};

inline OrderOracle oracle_for(const Lattice& l) { return {order_from_covers(l.to_spec())}; }

/// Covering sieves of the territory topology straight from the definition:
/// downsets S of ↓p whose least upper bound is p.
inline std::vector<ElemSet> covering_sieves_oracle(const Lattice& l, Elem p) {
  const OrderOracle o = oracle_for(l);
  std::vector<ElemSet> out;
  const std::size_t n = l.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<std::size_t> members;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!(bits >> x & 1)) continue;
      ok = o.le[x][p.index];
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (o.le[y][x] && !(bits >> y & 1)) ok = false;
      }
      members.push_back(x);
    }
    if (!ok) continue;
    const auto top = members.empty() ? o.glb({}) : o.lub(members);
    const std::size_t bottom = *o.glb([&] {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      return all;
    }());
    const std::size_t sigma = members.empty() ? bottom : *top;
    if (sigma == p.index) out.push_back(ElemSet(bits));
  }
  return out;
}

/// Sheaf condition by enumerating every choice function on every covering
/// sieve and counting amalgamations.
inline bool is_sheaf_oracle(const Presheaf& f) {
  const HeytingAlgebra& h = f.algebra();
  for (Elem p : h.elements()) {
    for (ElemSet s : covering_sieves_oracle(h, p)) {
      const auto members = s.elements();
      std::vector<std::size_t> choice(members.size(), 0);
      bool empty_level = false;
      for (Elem q : members) empty_level = empty_level || f.count(q) == 0;
      if (empty_level) continue;  // no families at all
      while (true) {
        bool matching = true;
        for (std::size_t i = 0; i < members.size() && matching; ++i) {
          for (std::size_t k = 0; k < members.size() && matching; ++k) {
            if (h.leq(members[k], members[i])) {
              matching = f.restrict(members[i], members[k], choice[i]) == choice[k];
            }
          }
        }
        if (matching) {
          std::size_t amalgamations = 0;
          for (std::size_t x = 0; x < f.count(p); ++x) {
            bool ok = true;
            for (std::size_t i = 0; i < members.size() && ok; ++i) {
              ok = f.restrict(p, members[i], x) == choice[i];
            }
            amalgamations += ok;
          }
          if (amalgamations != 1) return false;
        }
        std::size_t pos = 0;
        while (pos < members.size() && ++choice[pos] == f.count(members[pos])) choice[pos++] = 0;
        if (pos == members.size()) break;
      }
    }
  }
  return true;
}

}  // namespace omegaset::testing

#endif  // OMEGASET_TESTS_TEST_UTIL_HPP_
