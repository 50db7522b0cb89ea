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

#include "suite.hpp"

#include <algorithm>
#include <memory>

#include "omegaset/error.hpp"
#include "omegaset/sheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/topos.hpp"

namespace omegaset::tools {

namespace {

bool wants(const SuiteConfig& config, const std::string& suite) {
  return config.checks.empty() ||
         std::find(config.checks.begin(), config.checks.end(), suite) != config.checks.end();
}

CheckResult fail(std::string check, std::string instance, std::string witness) {
  return {std::move(check), std::move(instance), false, std::move(witness)};
}

std::string triple(const HeytingAlgebra& h, Elem a, Elem b, Elem c) {
  return "(" + h.name(a) + "," + h.name(b) + "," + h.name(c) + ")";
}

// Wraps a library exception into a failing result so one bad instance
// does not abort the report.
template <typename F>
CheckResult guarded(const std::string& check, const std::string& instance, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(check, instance, e.kind() + ": " + e.what());
  }
}

}  // namespace

TSet chain3_unreal_atom() {
  auto h = std::make_shared<const HeytingAlgebra>(algebras::chain3());
  return TSet(h, {"x"}, std::vector<Elem>{h->at("p")});
}

InstancePool generate_instance_pool(const SuiteConfig& config) {
  validate_config(config);
  const EnumerationGuard guard{config.enumeration_guard};
  ValidationOptions opts;
  opts.seed = config.seed;
  InstancePool pool;
  pool.algebras = enumerate_algebras(config.max_algebra_size, 2, opts);
  for (const auto& a : pool.algebras) {
    pool.tsets.push_back(enumerate_tsets(a.algebra, config.max_carrier_size, {true, true}, guard));
    pool.quasi.push_back(enumerate_tsets(a.algebra, std::min<std::size_t>(config.max_carrier_size, 2),
                                         {false, false}, guard));
  }
  for (const auto& a : pool.algebras) {
    std::size_t total = 0;
    if (a.name == "two" || a.name == "chain3") total = 3;
    if (a.name == "diamond") total = 4;
    if (total == 0) continue;
    SheafPool sp{a, enumerate_sheaves(a.algebra, territory_topology(*a.algebra), total, guard), {}};
    for (std::size_t i = 0; i < sp.sheaves.size(); ++i) {
      sp.names.push_back("S" + std::to_string(i) + count_signature(sp.sheaves[i]));
    }
    pool.sheaf_pools.push_back(std::move(sp));
  }
  pool.pentagon = algebras::pentagon_spec();
  return pool;
}

CheckResults heyting_laws(const NamedAlgebra& a) {
  const HeytingAlgebra& h = *a.algebra;
  const auto elems = h.elements();
  CheckResults out;

  CheckResult adj{"heyting.adjunction", a.name, true, ""};
  CheckResult nc{"heyting.noncontradiction", a.name, true, ""};
  CheckResult dn{"heyting.double_negation", a.name, true, ""};
  for (Elem p : elems) {
    if (nc.pass && h.meet(p, h.negate(p)) != h.bottom()) nc = fail(nc.check, a.name, h.name(p));
    if (dn.pass && !h.leq(p, h.negate(h.negate(p)))) dn = fail(dn.check, a.name, h.name(p));
    for (Elem q : elems) {
      for (Elem t : elems) {
        if (adj.pass && h.leq(h.meet(p, t), q) != h.leq(t, h.implies(p, q))) {
          adj = fail(adj.check, a.name, "(p,q,t)=" + triple(h, p, q, t));
        }
      }
    }
  }
  out.push_back(adj);
  out.push_back(nc);
  out.push_back(dn);

  CheckResult frame{"heyting.frame", a.name, true, ""};
  const std::uint64_t subsets = std::uint64_t{1} << h.size();
  for (std::uint64_t bits = 0; bits < subsets && frame.pass; ++bits) {
    const ElemSet s(bits);
    for (Elem b : elems) {
      Elem rhs = h.bottom();
      for (Elem x : s.elements()) rhs = h.join(rhs, h.meet(x, b));
      if (h.meet(h.envelope(s), b) != rhs) {
        frame = fail(frame.check, a.name, "S=" + format_set(h, s) + " b=" + h.name(b));
        break;
      }
    }
  }
  out.push_back(frame);
  return out;
}

CheckResults tset_laws(const std::string& instance, const TSet& t, const EnumerationGuard& guard) {
  CheckResults out;
  out.push_back(guarded("tset.valid", instance, [&] {
    const TSetReport r = validate_tset(t, true);
    if (!r.ok()) return fail("tset.valid", instance, r.violations.front().rule);
    if (!satisfies_postulate(t, guard).satisfied) return fail("tset.valid", instance, "unreal atom");
    return CheckResult{"tset.valid", instance, true, ""};
  }));
  out.push_back(guarded("tset.equivalence", instance, [&] {
    const HeytingAlgebra& h = t.algebra();
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        const Elem ea = t.existence(a);
        const bool first = localise_element(t, b, ea) == a;
        const bool second = compatible(t, a, b) && h.leq(ea, t.existence(b));
        const bool third = ea == t.id(a, b);
        if (first != second || second != third) {
          return fail("tset.equivalence", instance, "pair (" + t.name(a) + "," + t.name(b) + ")");
        }
      }
    }
    return CheckResult{"tset.equivalence", instance, true, ""};
  }));
  out.push_back(guarded("tset.envelope", instance, [&] {
    const HeytingAlgebra& h = t.algebra();
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = a; b < t.size(); ++b) {
        if (!compatible(t, a, b)) continue;
        const std::vector<std::size_t> family{a, b};
        const FamilyEnvelope env = family_envelope(t, family);
        const std::size_t e = env.witness;
        const bool ok = t.existence(e) == h.join(t.existence(a), t.existence(b)) &&
                        element_leq(t, a, e) && element_leq(t, b, e);
        if (!ok) {
          return fail("tset.envelope", instance, "pair (" + t.name(a) + "," + t.name(b) + ")");
        }
      }
    }
    return CheckResult{"tset.envelope", instance, true, ""};
  }));
  out.push_back(guarded("tset.terminal", instance, [&] {
    const std::size_t n = hom_set(t, terminal(t.algebra_ptr()), guard).size();
    if (n != 1) return fail("tset.terminal", instance, "|Hom(A,1)|=" + std::to_string(n));
    return CheckResult{"tset.terminal", instance, true, ""};
  }));
  return out;
}

CheckResults site_laws(const NamedAlgebra& a) {
  const HeytingAlgebra& h = *a.algebra;
  CheckResults out;
  const auto basis = validate_basis(h, territory_basis(h));
  out.push_back(basis.empty() ? CheckResult{"site.basis", a.name, true, ""}
                              : fail("site.basis", a.name,
                                     basis.front().condition + " at " + h.name(basis.front().at)));
  const Topology j = territory_topology(h);
  const auto top = validate_topology(h, j);
  out.push_back(top.empty() ? CheckResult{"site.topology", a.name, true, ""}
                            : fail("site.topology", a.name,
                                   top.front().axiom + " at " + h.name(top.front().at)));
  CheckResult closed{"site.closed_sieves", a.name, true, ""};
  for (Elem p : h.elements()) {
    std::vector<std::uint64_t> got;
    for (const Sieve& s : closed_sieves(h, j, p)) got.push_back(s.members.bits());
    std::vector<std::uint64_t> expected;
    for (Elem s : h.down(p).elements()) expected.push_back(h.down(s).bits());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) {
      closed = fail(closed.check, a.name, "at " + h.name(p));
      break;
    }
  }
  out.push_back(closed);
  CheckResult sub{"site.subcanonical", a.name, true, ""};
  for (Elem p : h.elements()) {
    if (!is_sheaf(representable(a.algebra, p), j)) {
      sub = fail(sub.check, a.name, "h_" + h.name(p));
      break;
    }
  }
  out.push_back(sub);
  return out;
}

CheckResults sheaf_laws(const std::string& instance, const TSet& t, const EnumerationGuard& guard) {
  CheckResults out;
  const Topology j = territory_topology(t.algebra());
  out.push_back(guarded("sheaf.theorem", instance, [&] {
    const auto f = tset_to_presheaf(t, guard);
    if (auto c = check_sheaf(f.presheaf, j); !c) {
      return fail("sheaf.theorem", instance,
                  "family on a covering sieve of " + t.algebra().name(c.witness->family.sieve.at));
    }
    return CheckResult{"sheaf.theorem", instance, true, ""};
  }));
  out.push_back(guarded("sheaf.round_trip", instance, [&] {
    const auto f = tset_to_presheaf(t, guard);
    const TSet back = presheaf_to_tset(f.presheaf);
    if (!find_tset_isomorphism(back, t)) {
      return fail("sheaf.round_trip", instance, "presheaf_to_tset(F) is not isomorphic to A");
    }
    const auto again = tset_to_presheaf(back, guard);
    if (!isomorphic(again.presheaf, f.presheaf)) {
      return fail("sheaf.round_trip", instance, "F(presheaf_to_tset(F)) is not isomorphic to F");
    }
    return CheckResult{"sheaf.round_trip", instance, true, ""};
  }));
  return out;
}

CheckResult sheafify_oracle(const std::string& instance, const TSet& t,
                            const EnumerationGuard& guard) {
  return guarded("sheafify.oracle", instance, [&] {
    const Topology j = territory_topology(t.algebra());
    const Presheaf s = sheafify(associated_presheaf(t), j, guard);
    const Presheaf oracle = tset_to_presheaf(singleton_completion(t, guard), guard).presheaf;
    if (!isomorphic(s, oracle)) {
      return fail("sheafify.oracle", instance,
                  "sheafify gives " + count_signature(s) + ", completion gives " +
                      count_signature(oracle));
    }
    if (!is_sheaf(s, j)) return fail("sheafify.oracle", instance, "result is not a sheaf");
    return CheckResult{"sheafify.oracle", instance, true, ""};
  });
}

CheckResults omega_laws(const SheafPool& pool, const EnumerationGuard& guard) {
  CheckResults out;
  const HeytingAlgebra& h = *pool.algebra.algebra;
  const Topology j = territory_topology(h);
  const Omega om = omega(pool.algebra.algebra, j);
  CheckResult sheaf{"omega.sheaf", pool.algebra.name, true, ""};
  if (!is_sheaf(om.object, j)) sheaf = fail(sheaf.check, pool.algebra.name, "Omega");
  if (sheaf.pass && !is_natural(terminal_presheaf(pool.algebra.algebra), om.object, om.truth)) {
    sheaf = fail(sheaf.check, pool.algebra.name, "truth is not natural");
  }
  out.push_back(sheaf);
  for (std::size_t i = 0; i < pool.sheaves.size(); ++i) {
    const std::string inst = pool.algebra.name + "/" + pool.names[i];
    out.push_back(guarded("topos.classifier", inst, [&] {
      return check_classifier(inst, pool.sheaves[i], om, j, guard);
    }));
  }
  return out;
}

CheckResults sg_laws(const SheafPool& pool, const EnumerationGuard& guard) {
  std::vector<std::string> names;
  for (const auto& n : pool.names) names.push_back(pool.algebra.name + "/" + n);
  return sg_check(pool.sheaves, names, territory_topology(*pool.algebra.algebra), guard).results;
}

CheckResult sg_doubled_point(const EnumerationGuard& guard) {
  auto d = std::make_shared<const HeytingAlgebra>(algebras::diamond());
  const Topology j = territory_topology(*d);
  const Presheaf doubled = doubled_point(d);
  const SGReport r = sg_check({terminal_presheaf(d), doubled}, {"1", "D"}, j, guard);
  if (r.ok) return fail("sg.doubled_point", "diamond/D", "no SG failure found");
  if (is_sheaf(doubled, j)) return fail("sg.doubled_point", "diamond/D", "D is a sheaf");
  std::string witness;
  for (const auto& c : r.results) {
    if (!c.pass) witness = c.instance + " " + c.witness;
  }
  return {"sg.doubled_point", "diamond/D", true, "expected failure: " + witness};
}

CheckResults run_laws(const SuiteConfig& config) {
  validate_config(config);
  const EnumerationGuard guard{config.enumeration_guard};
  const InstancePool pool = generate_instance_pool(config);
  CheckResults out;
  auto append = [&](const CheckResults& rs) { out.insert(out.end(), rs.begin(), rs.end()); };
  auto tset_name = [&](std::size_t a, std::size_t i, const char* kind) {
    return pool.algebras[a].name + "/" + kind + std::to_string(i);
  };

  if (wants(config, "heyting")) {
    for (const auto& a : pool.algebras) append(heyting_laws(a));
    bool rejected = false;
    try {
      HeytingAlgebra::build(pool.pentagon);
    } catch (const NotDistributive&) {
      rejected = true;
    }
    out.push_back({"heyting.pentagon_rejected", "pentagon", rejected,
                   rejected ? "" : "pentagon accepted as distributive"});
  }
  if (wants(config, "tset")) {
    for (std::size_t a = 0; a < pool.algebras.size(); ++a) {
      for (std::size_t i = 0; i < pool.tsets[a].size(); ++i) {
        CheckResults rs = tset_laws(tset_name(a, i, "t"), pool.tsets[a][i], guard);
        for (auto& r : rs) {
          if (!r.pass) r.witness += " in " + tset_json(pool.tsets[a][i]);
        }
        append(rs);
      }
    }
  }
  if (wants(config, "site")) {
    for (const auto& a : pool.algebras) append(site_laws(a));
  }
  if (wants(config, "sheaf")) {
    for (std::size_t a = 0; a < pool.algebras.size(); ++a) {
      for (std::size_t i = 0; i < pool.tsets[a].size(); ++i) {
        CheckResults rs = sheaf_laws(tset_name(a, i, "t"), pool.tsets[a][i], guard);
        for (auto& r : rs) {
          if (!r.pass) r.witness += " in " + tset_json(pool.tsets[a][i]);
        }
        append(rs);
      }
    }
  }
  if (wants(config, "sheafify")) {
    for (std::size_t a = 0; a < pool.algebras.size(); ++a) {
      for (std::size_t i = 0; i < pool.quasi[a].size(); ++i) {
        CheckResult r = sheafify_oracle(tset_name(a, i, "q"), pool.quasi[a][i], guard);
        if (!r.pass) r.witness += " in " + tset_json(pool.quasi[a][i]);
        out.push_back(r);
      }
    }
    out.push_back(sheafify_oracle("chain3/unreal_atom", chain3_unreal_atom(), guard));
  }
  if (wants(config, "omega")) {
    for (const auto& sp : pool.sheaf_pools) append(omega_laws(sp, guard));
  }
  if (wants(config, "topos")) {
    for (const auto& sp : pool.sheaf_pools) {
      std::vector<std::string> names;
      for (const auto& n : sp.names) names.push_back(sp.algebra.name + "/" + n);
      append(check_topos_axioms(sp.sheaves, names, territory_topology(*sp.algebra.algebra), guard));
    }
  }
  if (wants(config, "exposition")) {
    for (const auto& a : pool.algebras) {
      if (a.name != "two") continue;
      for (std::size_t points : {1, 2}) append(exposition_counterexample(a.algebra, points, guard).results);
    }
  }
  if (wants(config, "sg")) {
    for (const auto& sp : pool.sheaf_pools) append(sg_laws(sp, guard));
    if (config.max_algebra_size >= 4) out.push_back(sg_doubled_point(guard));
  }
  return out;
}

}  // namespace omegaset::tools
