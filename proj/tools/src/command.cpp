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

#include "command.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "omegaset/error.hpp"
#include "omegaset/sheaf.hpp"
#include "omegaset/site.hpp"
#include "omegaset/topos.hpp"
#include "suite.hpp"

namespace omegaset::tools {

namespace {

// A command's outcome: results plus free-form detail lines for text output.
struct Outcome {
  CheckResults results;
  std::vector<std::string> details;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string render_atom(const TSet& t, const AtomMap& a) {
  std::string out = "{";
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (x) out += ", ";
    out += t.name(x) + ":" + t.algebra().name(a(x));
  }
  return out + "}";
}

Outcome validate_algebra_file(const std::string& path) {
  Outcome o;
  const std::string text = read_file(path);
  LoadedFile f;
  try {
    f = parse_document(text, std::filesystem::path(path).parent_path());
  } catch (const CycleError& e) {
    o.results.push_back({"validate.algebra", path, false, e.kind() + ": " + e.what()});
    return o;
  } catch (const NoBound& e) {
    o.results.push_back({"validate.algebra", path, false, e.kind() + ": " + e.what()});
    return o;
  } catch (const NotDistributive& e) {
    o.results.push_back({"validate.algebra", path, false, e.kind() + ": " + e.what()});
    return o;
  } catch (const InvalidPresheaf& e) {
    o.results.push_back({"validate.presheaf", path, false, e.kind() + ": " + e.what()});
    return o;
  }
  const HeytingAlgebra& h = *f.algebra;
  switch (f.kind) {
    case FileKind::kAlgebra: {
      const std::string verdict =
          std::string("complete Heyting algebra, ") + (h.is_boolean() ? "Boolean" : "non-Boolean");
      o.results.push_back({"validate.algebra", path, true, verdict});
      o.details.push_back(verdict + ", " + std::to_string(h.size()) + " elements, frame law checked " +
                          (h.validity().mode == ValidityReport::Mode::kExhaustive
                               ? "exhaustively"
                               : "on " + std::to_string(h.validity().subsets_checked) +
                                     " sampled subsets (seed " +
                                     std::to_string(h.validity().seed) + ")"));
      break;
    }
    case FileKind::kTSet: {
      const TSet& t = *f.tset;
      const TSetReport r = validate_tset(t);
      std::string witness;
      for (const auto& v : r.violations) {
        std::string w = v.rule + " on";
        for (std::size_t x : v.witness) w += " " + t.name(x);
        o.details.push_back("violation: " + w);
        if (witness.empty()) witness = w;
      }
      o.results.push_back({"validate.tset", path, r.ok(), witness});
      if (r.ok()) {
        o.details.push_back(std::string("T-set with ") + std::to_string(t.size()) + " elements, " +
                            (is_separated(t) ? "separated" : "not separated"));
        const PostulateReport pr = satisfies_postulate(t);
        o.details.push_back(std::string("every atom real: ") + (pr.satisfied ? "yes" : "no"));
      }
      break;
    }
    case FileKind::kPresheaf: {
      const Presheaf& p = *f.presheaf;
      const auto problems = validate_presheaf(p);
      o.results.push_back({"validate.presheaf", path, problems.empty(),
                           problems.empty() ? "" : problems.front()});
      const bool sheaf = is_sheaf(p, territory_topology(h));
      o.details.push_back(std::string("presheaf with ") + std::to_string(p.total_sections()) +
                          " sections; sheaf for the territory topology: " + (sheaf ? "yes" : "no"));
      break;
    }
    case FileKind::kRelation: {
      const auto& rel = *f.relation;
      TSetReport r;
      try {
        r = validate_relation(rel.source, rel.target, rel.relation);
      } catch (const PostulateRequired& e) {
        r.violations.push_back({"localisation", {}, e.what()});
      }
      std::string witness;
      for (const auto& v : r.violations) {
        o.details.push_back("violation: " + v.rule + " " + v.detail);
        if (witness.empty()) witness = v.rule;
      }
      o.results.push_back({"validate.relation", path, r.ok(), witness});
      break;
    }
  }
  return o;
}

Outcome atoms_command(const std::string& path, const EnumerationGuard& guard) {
  const LoadedFile f = load_file(path);
  if (f.kind != FileKind::kTSet) throw InvalidInput(path + " is not a T-set file");
  const TSet& t = *f.tset;
  if (auto r = validate_tset(t); !r.ok()) throw InvalidInput("invalid T-set: " + r.violations.front().rule);
  Outcome o;
  for (const AtomMap& a : enumerate_atoms(t, guard)) {
    std::string line = "atom " + render_atom(t, a) + " existence " +
                       t.algebra().name(atom_existence(t, a)) + " witnesses:";
    const auto ws = real_witnesses(t, a);
    if (ws.empty()) line += " none (unreal)";
    for (std::size_t x : ws) line += " " + t.name(x);
    o.details.push_back(line);
  }
  const PostulateReport pr = satisfies_postulate(t, guard);
  std::string witness;
  if (!pr.satisfied) {
    witness = pr.unreal.empty() ? "empty carrier" : "unreal atom " + render_atom(t, pr.unreal.front());
  }
  o.details.push_back(std::string("postulate: ") + (pr.satisfied ? "every atom is real" : "fails"));
  o.results.push_back({"atoms.postulate", path, pr.satisfied, witness});
  return o;
}

Outcome sheafify_command(const std::string& path, const std::string& output,
                         const EnumerationGuard& guard, std::ostream& out) {
  const LoadedFile f = load_file(path);
  Presheaf source = empty_presheaf(f.algebra);
  if (f.kind == FileKind::kTSet) {
    if (auto r = validate_tset(*f.tset); !r.ok()) {
      throw InvalidInput("invalid T-set: " + r.violations.front().rule);
    }
    source = associated_presheaf(*f.tset);
  } else if (f.kind == FileKind::kPresheaf) {
    source = *f.presheaf;
  } else {
    throw InvalidInput(path + " is neither a T-set nor a presheaf");
  }
  const Topology j = territory_topology(*f.algebra);
  const Presheaf result = sheafify(source, j, guard);
  const std::string text = presheaf_json(result);
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw InvalidInput("cannot write " + output);
    file << text;
  }
  Outcome o;
  o.results.push_back({"sheafify.sheaf", path, is_sheaf(result, j), ""});
  return o;
}

Outcome omega_command(const std::string& path, const std::string& element) {
  const LoadedFile f = load_file(path);
  if (f.kind != FileKind::kAlgebra) throw InvalidInput(path + " is not an algebra file");
  const HeytingAlgebra& h = *f.algebra;
  const Topology j = territory_topology(h);
  const Omega om = omega(f.algebra, j);
  std::vector<Elem> which;
  if (element.empty()) {
    which = h.ascending();
  } else {
    which.push_back(h.at(element));
  }
  Outcome o;
  for (Elem p : which) {
    std::string line = "Omega(" + h.name(p) + ") =";
    std::vector<std::uint64_t> got;
    for (const Sieve& s : om.sieves[p.index]) {
      line += " " + format_set(h, s.members);
      got.push_back(s.members.bits());
    }
    std::vector<std::uint64_t> expected;
    for (Elem s : h.down(p).elements()) expected.push_back(h.down(s).bits());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    o.details.push_back(line);
    o.results.push_back({"omega.sections", h.name(p), got == expected,
                         std::to_string(got.size()) + " closed sieves"});
  }
  o.results.push_back({"omega.sheaf", path, is_sheaf(om.object, j), ""});
  return o;
}

Outcome exposition_command(std::size_t points, const EnumerationGuard& guard) {
  auto two = std::make_shared<const HeytingAlgebra>(algebras::two());
  const ExpositionReport r = exposition_counterexample(two, points, guard);
  Outcome o;
  o.results = r.results;
  o.details.push_back("mediating maps: " + std::to_string(r.mediating_maps) +
                      (r.refuted ? " >= 2; universality of the exposition refuted"
                                 : "; no refutation at this size"));
  for (const auto& m : r.sample_maps) o.details.push_back("  h = " + m);
  o.details.push_back("graph mediators: " + std::to_string(r.graph_mediators) +
                      "; corrected graph universality " + (r.graph_universal ? "holds" : "FAILS"));
  return o;
}

int emit(const Outcome& o, const SuiteConfig& config, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kJson) {
    out << render_report(config, o.results, format);
  } else {
    for (const auto& d : o.details) out << d << "\n";
    out << render_report(config, o.results, format);
  }
  return all_pass(o.results) ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Heyting algebras, T-sets and sheaves", "omegaset"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  std::uint64_t guard_limit = EnumerationGuard{}.limit;
  app.add_option("--guard", guard_limit, "Enumeration guard")->check(CLI::PositiveNumber);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Validate an algebra, T-set, relation or presheaf file");
  validate->add_option("file", file)->required();

  auto* atoms = app.add_subcommand("atoms", "List atoms, witnesses and the postulate verdict");
  atoms->add_option("tset", file)->required();

  std::string output;
  auto* sheafify_cmd = app.add_subcommand("sheafify", "Sheafify a T-set or presheaf");
  sheafify_cmd->add_option("file", file)->required();
  sheafify_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string element;
  auto* omega_cmd = app.add_subcommand("omega", "Print the closed sieves of an algebra");
  omega_cmd->add_option("algebra", file)->required();
  omega_cmd->add_option("-p", element, "Only this element");

  std::string config_path;
  auto* laws = app.add_subcommand("laws", "Run the invariant suites over generated pools");
  laws->add_option("--config", config_path, "Suite configuration (JSON)");

  std::string which;
  std::size_t points = 2;
  auto* counter = app.add_subcommand("counterexample", "Run a named counterexample");
  counter->add_option("name", which)->required()->check(CLI::IsMember({"exposition"}));
  counter->add_option("--points", points, "Size of the set X")->check(CLI::Range(1, 3));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const ReportFormat fmt = format == "json" ? ReportFormat::kJson : ReportFormat::kText;
  const EnumerationGuard guard{guard_limit};
  SuiteConfig config;
  config.enumeration_guard = guard_limit;
  try {
    if (*validate) return emit(validate_algebra_file(file), config, fmt, out);
    if (*atoms) return emit(atoms_command(file, guard), config, fmt, out);
    if (*sheafify_cmd) {
      std::ostringstream body;
      const Outcome o = sheafify_command(file, output, guard, body);
      out << body.str();
      if (!output.empty() && output != "-") return emit(o, config, fmt, out);
      return all_pass(o.results) ? kExitPass : kExitCheckFailed;
    }
    if (*omega_cmd) return emit(omega_command(file, element), config, fmt, out);
    if (*laws) {
      if (!config_path.empty()) {
        config = parse_config(read_file(config_path));
      } else {
        validate_config(config);
      }
      const CheckResults results = run_laws(config);
      out << render_report(config, results, fmt);
      return all_pass(results) ? kExitPass : kExitCheckFailed;
    }
    if (*counter) return emit(exposition_command(points, guard), config, fmt, out);
  } catch (const Error& e) {
    err << "omegaset: " << e.kind() << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace omegaset::tools
