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

#include "pool.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "omegaset/error.hpp"
#include "omegaset/sheaf.hpp"

namespace omegaset::tools {

namespace {

// Strict order on the interior elements of a bounded poset, row-major.
using Relation = std::vector<std::vector<bool>>;

std::uint64_t code_under(const Relation& lt, const std::vector<std::size_t>& perm) {
  const std::size_t m = lt.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      code = code << 1 | (lt[perm[i]][perm[j]] ? 1U : 0U);
    }
  }
  return code;
}

std::uint64_t canonical_code(const Relation& lt) {
  std::vector<std::size_t> perm(lt.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = code_under(lt, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, code_under(lt, perm));
  }
  return best;
}

PosetSpec bounded_spec(const Relation& lt) {
  const std::size_t m = lt.size();
  PosetSpec spec;
  spec.elements.push_back("mu");
  for (std::size_t i = 0; i < m; ++i) spec.elements.push_back(std::string(1, static_cast<char>('a' + i)));
  spec.elements.push_back("M");
  // Full strict order on mu, interior..., M.
  const std::size_t n = m + 2;
  auto less = [&](std::size_t x, std::size_t y) {
    if (x == y) return false;
    if (x == 0 || y == n - 1) return true;
    if (y == 0 || x == n - 1) return false;
    return static_cast<bool>(lt[x - 1][y - 1]);
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z) cover = !(less(x, z) && less(z, y));
      if (cover) spec.covers.emplace_back(spec.elements[x], spec.elements[y]);
    }
  }
  return spec;
}

AlgebraPtr share(HeytingAlgebra h) { return std::make_shared<const HeytingAlgebra>(std::move(h)); }

}  // namespace

std::vector<NamedAlgebra> enumerate_algebras(std::size_t max_size, std::size_t min_size,
                                             const ValidationOptions& opts) {
  if (min_size < 2) throw InvalidInput("algebra pools start at two elements");
  if (max_size > 8) throw SizeGuard("algebra enumeration is limited to eight elements");
  std::vector<NamedAlgebra> out;
  for (std::size_t n = min_size; n <= max_size; ++n) {
    const std::size_t m = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    }
    // Natural labelings: i < j in the order only if i < j as indices.
    std::map<std::uint64_t, Relation> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Relation lt(m, std::vector<bool>(m, false));
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (mask >> k & 1) lt[slots[k].first][slots[k].second] = true;
      }
      bool transitive = true;
      for (std::size_t i = 0; i < m && transitive; ++i) {
        for (std::size_t j = 0; j < m && transitive; ++j) {
          for (std::size_t k = 0; k < m && transitive; ++k) {
            if (lt[i][j] && lt[j][k] && !lt[i][k]) transitive = false;
          }
        }
      }
      if (!transitive) continue;
      found.emplace(canonical_code(lt), lt);
    }
    std::size_t k = 0;
    for (const auto& [code, lt] : found) {
      std::size_t comparable = 0;
      for (const auto& row : lt) comparable += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
      try {
        HeytingAlgebra h = HeytingAlgebra::build(bounded_spec(lt), opts);
        if (n == 2) {
          out.push_back({"two", share(HeytingAlgebra::build(algebras::two().to_spec(), opts))});
        } else if (comparable == m * (m - 1) / 2) {
          out.push_back({n == 3 ? "chain3" : "chain" + std::to_string(n),
                         share(HeytingAlgebra::build(
                             (n == 3 ? algebras::chain3() : algebras::chain(n)).to_spec(), opts))});
        } else if (n == 4) {
          out.push_back({"diamond", share(HeytingAlgebra::build(algebras::diamond().to_spec(), opts))});
        } else {
          out.push_back({"L" + std::to_string(n) + "." + std::to_string(++k), share(std::move(h))});
        }
      } catch (const NoBound&) {
      } catch (const NotDistributive&) {
      }
    }
  }
  return out;
}

std::vector<TSet> enumerate_tsets(const AlgebraPtr& algebra, std::size_t max_carrier,
                                  const TSetFilter& filter, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = *algebra;
  const std::size_t t = h.size();
  std::vector<std::size_t> rank(t);
  for (std::size_t i = 0; i < t; ++i) rank[h.ascending()[i].index] = i;

  std::vector<TSet> out;
  // Buckets of accepted T-sets by an isomorphism invariant.
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> buckets;
  std::uint64_t nodes = 0;

  for (std::size_t n = 0; n <= max_carrier; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<Elem> id(n * n, h.bottom());

    auto row_ok = [&](std::size_t i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (filter.separated && id[i * n + j] == id[i * n + i] && id[j * n + j] == id[i * n + i]) {
          return false;
        }
      }
      for (std::size_t x = 0; x <= i; ++x) {
        for (std::size_t y = 0; y <= i; ++y) {
          for (std::size_t z = 0; z <= i; ++z) {
            if (x != i && y != i && z != i) continue;
            if (!h.leq(h.meet(id[x * n + y], id[y * n + z]), id[x * n + z])) return false;
          }
        }
      }
      return true;
    };

    auto accept = [&]() {
      TSet candidate(algebra, names, id);
      if (filter.postulate && !satisfies_postulate(candidate, guard).satisfied) return;
      std::vector<std::uint32_t> key;
      for (std::size_t x = 0; x < n; ++x) key.push_back(id[x * n + x].index);
      std::vector<std::uint32_t> off;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x != y) off.push_back(id[x * n + y].index);
        }
      }
      std::sort(off.begin(), off.end());
      key.push_back(static_cast<std::uint32_t>(-1));
      key.insert(key.end(), off.begin(), off.end());
      auto& bucket = buckets[key];
      for (std::size_t k : bucket) {
        if (find_tset_isomorphism(out[k], candidate)) return;
      }
      bucket.push_back(out.size());
      out.push_back(std::move(candidate));
    };

    // Cells in order: (i,i) then (i,0..i-1), row by row.
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
      if (++nodes > guard.limit) throw SizeGuard("T-set enumeration exceeds the enumeration guard");
      if (i == n) {
        accept();
        return;
      }
      if (j == i + 1) {
        // Row finished: every triangle through x_i is now decided.
        if (row_ok(i)) fill(i + 1, 0);
        return;
      }
      if (j == 0) {
        // Existence of x_i, nondecreasing in the ascending order.
        const std::size_t from = i == 0 ? 0 : rank[id[(i - 1) * n + (i - 1)].index];
        for (std::size_t r = from; r < t; ++r) {
          id[i * n + i] = h.ascending()[r];
          fill(i, 1);
        }
        return;
      }
      // Off-diagonal Id(x_i, x_{j-1}) ≤ Ee x_i ∧ Ee x_{j-1}.
      const std::size_t other = j - 1;
      const Elem bound = h.meet(id[i * n + i], id[other * n + other]);
      for (Elem v : h.down(bound).elements()) {
        id[i * n + other] = v;
        id[other * n + i] = v;
        fill(i, j + 1);
      }
    };
    fill(0, 0);
  }
  return out;
}

std::vector<Presheaf> enumerate_sheaves(const AlgebraPtr& algebra, const Topology& j,
                                        std::size_t max_total, const EnumerationGuard& guard) {
  const HeytingAlgebra& h = *algebra;
  const auto edges = h.cover_pairs();  // (lower, upper)
  const std::vector<Elem> order = h.ascending();
  std::vector<Presheaf> out;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::uint64_t visited = 0;

  std::vector<std::size_t> counts(h.size(), 0);
  std::function<void(std::size_t, std::size_t)> choose_counts = [&](std::size_t k, std::size_t left) {
    if (k < order.size()) {
      for (std::size_t c = 0; c <= left; ++c) {
        counts[order[k].index] = c;
        choose_counts(k + 1, left - c);
      }
      counts[order[k].index] = 0;
      return;
    }
    std::vector<std::vector<std::string>> names(h.size());
    for (Elem p : h.elements()) {
      for (std::size_t i = 0; i < counts[p.index]; ++i) {
        names[p.index].push_back(h.name(p) + "#" + std::to_string(i));
      }
    }
    Presheaf::CoverMaps maps;
    std::function<void(std::size_t)> choose_map = [&](std::size_t e) {
      if (e == edges.size()) {
        if (++visited > guard.limit) throw SizeGuard("sheaf enumeration exceeds the enumeration guard");
        std::optional<Presheaf> p;
        try {
          p = Presheaf::from_covers(algebra, names, maps);
        } catch (const InvalidPresheaf&) {
          return;
        }
        if (!is_sheaf(*p, j)) return;
        auto& bucket = buckets[counts];
        for (std::size_t k : bucket) {
          if (isomorphic(out[k], *p)) return;
        }
        bucket.push_back(out.size());
        out.push_back(std::move(*p));
        return;
      }
      const auto [lower, upper] = edges[e];
      const std::size_t from = counts[upper.index];
      const std::size_t to = counts[lower.index];
      if (from == 0) {
        choose_map(e + 1);
        return;
      }
      if (to == 0) return;
      std::vector<std::size_t> map(from, 0);
      while (true) {
        maps[{upper, lower}] = map;
        choose_map(e + 1);
        std::size_t pos = 0;
        while (pos < from && ++map[pos] == to) map[pos++] = 0;
        if (pos == from) break;
      }
      maps.erase({upper, lower});
    };
    choose_map(0);
  };
  choose_counts(0, max_total);

  // Deterministic order: by total sections, then by counts in ascending order.
  std::vector<std::size_t> idx(out.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto key = [&](const Presheaf& p) {
    std::vector<std::size_t> k{p.total_sections()};
    for (Elem e : order) k.push_back(p.count(e));
    return k;
  };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return key(out[a]) < key(out[b]); });
  std::vector<Presheaf> sorted;
  for (std::size_t i : idx) sorted.push_back(out[i]);
  return sorted;
}

std::string count_signature(const Presheaf& p) {
  std::string out = "(";
  bool first = true;
  for (Elem e : p.algebra().ascending()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(p.count(e));
  }
  return out + ")";
}

}  // namespace omegaset::tools
