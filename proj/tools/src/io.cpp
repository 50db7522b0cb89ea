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

#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "omegaset/error.hpp"

namespace omegaset::tools {

using json = nlohmann::ordered_json;

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

bool has_keys(const json& j, std::initializer_list<const char*> keys) {
  return std::all_of(keys.begin(), keys.end(), [&](const char* k) { return j.contains(k); });
}

FileKind detect(const json& j) {
  if (!j.is_object()) throw InvalidInput("document is not a JSON object");
  std::vector<FileKind> kinds;
  if (has_keys(j, {"elements", "covers"})) kinds.push_back(FileKind::kAlgebra);
  if (has_keys(j, {"algebra", "elements", "id"})) kinds.push_back(FileKind::kTSet);
  if (has_keys(j, {"source", "target", "map"})) kinds.push_back(FileKind::kRelation);
  if (has_keys(j, {"algebra", "sections", "restrict"})) kinds.push_back(FileKind::kPresheaf);
  if (kinds.empty()) throw InvalidInput("document matches no known file shape");
  if (kinds.size() > 1) {
    throw InvalidInput("ambiguous document: matches both " + kind_name(kinds[0]) + " and " +
                       kind_name(kinds[1]));
  }
  return kinds.front();
}

// A nested value given either inline or as a path relative to `base`.
json resolve(const json& j, const std::filesystem::path& base, std::filesystem::path* dir) {
  if (j.is_string()) {
    const std::filesystem::path path = base / j.get<std::string>();
    *dir = path.parent_path();
    return parse_json(read_text(path), path.string());
  }
  *dir = base;
  return j;
}

AlgebraPtr algebra_from(const json& j) {
  PosetSpec spec;
  spec.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw InvalidInput("a cover is a pair [lower, upper]");
    spec.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return std::make_shared<const HeytingAlgebra>(HeytingAlgebra::build(spec));
}

AlgebraPtr algebra_in(const json& j, const std::filesystem::path& base) {
  std::filesystem::path dir;
  const json a = resolve(j, base, &dir);
  if (detect(a) != FileKind::kAlgebra) throw InvalidInput("\"algebra\" must describe an algebra");
  return algebra_from(a);
}

TSet tset_from(const json& j, const std::filesystem::path& base) {
  AlgebraPtr alg = algebra_in(j.at("algebra"), base);
  auto names = j.at("elements").get<std::vector<std::string>>();
  const auto& rows = j.at("id");
  if (!rows.is_array() || rows.size() != names.size()) {
    throw InvalidInput("\"id\" must be a square matrix over the elements");
  }
  std::vector<Elem> id;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != names.size()) {
      throw InvalidInput("\"id\" must be a square matrix over the elements");
    }
    for (const auto& v : row) id.push_back(alg->at(v.get<std::string>()));
  }
  return TSet(alg, std::move(names), std::move(id));
}

TSet tset_in(const json& j, const std::filesystem::path& base) {
  std::filesystem::path dir;
  const json t = resolve(j, base, &dir);
  if (detect(t) != FileKind::kTSet) throw InvalidInput("relation ends must describe T-sets");
  return tset_from(t, dir);
}

std::size_t carrier_index(const TSet& t, const std::string& name) {
  if (auto i = t.find(name)) return *i;
  throw InvalidInput("unknown element " + name);
}

Presheaf presheaf_from(const json& j, const std::filesystem::path& base) {
  AlgebraPtr alg = algebra_in(j.at("algebra"), base);
  const HeytingAlgebra& h = *alg;
  std::vector<std::vector<std::string>> names(h.size());
  for (const auto& [key, value] : j.at("sections").items()) {
    auto list = value.get<std::vector<std::string>>();
    std::set<std::string> unique(list.begin(), list.end());
    if (unique.size() != list.size()) throw InvalidInput("duplicate section names at " + key);
    names[h.at(key).index] = std::move(list);
  }
  Presheaf::CoverMaps covers;
  for (const auto& [key, value] : j.at("restrict").items()) {
    const auto sep = key.find('>');
    if (sep == std::string::npos) throw InvalidInput("restriction keys have the form \"p>q\"");
    const Elem p = h.at(key.substr(0, sep));
    const Elem q = h.at(key.substr(sep + 1));
    auto index_of = [&](Elem e, const std::string& s) {
      const auto& list = names[e.index];
      const auto it = std::find(list.begin(), list.end(), s);
      if (it == list.end()) throw InvalidInput("unknown section " + s + " at " + h.name(e));
      return static_cast<std::size_t>(it - list.begin());
    };
    std::vector<std::size_t> map(names[p.index].size(), static_cast<std::size_t>(-1));
    for (const auto& [from, to] : value.items()) {
      map[index_of(p, from)] = index_of(q, to.get<std::string>());
    }
    if (std::count(map.begin(), map.end(), static_cast<std::size_t>(-1)) > 0) {
      throw InvalidPresheaf("restriction " + key + " must map every section");
    }
    covers[{p, q}] = std::move(map);
  }
  return Presheaf::from_covers(alg, std::move(names), covers);
}

json algebra_value(const HeytingAlgebra& h) {
  json covers = json::array();
  for (const auto& [lower, upper] : h.cover_pairs()) covers.push_back({h.name(lower), h.name(upper)});
  return {{"elements", h.names()}, {"covers", covers}};
}

}  // namespace

std::string kind_name(FileKind kind) {
  switch (kind) {
    case FileKind::kAlgebra:
      return "algebra";
    case FileKind::kTSet:
      return "tset";
    case FileKind::kRelation:
      return "relation";
    case FileKind::kPresheaf:
      return "presheaf";
  }
  return "unknown";
}

LoadedFile parse_document(const std::string& text, const std::filesystem::path& base) {
  const json j = parse_json(text, "document");
  const FileKind kind = detect(j);
  try {
    LoadedFile out{kind, nullptr, std::nullopt, std::nullopt, std::nullopt};
    switch (kind) {
      case FileKind::kAlgebra:
        out.algebra = algebra_from(j);
        break;
      case FileKind::kTSet:
        out.tset = tset_from(j, base);
        out.algebra = out.tset->algebra_ptr();
        break;
      case FileKind::kPresheaf:
        out.presheaf = presheaf_from(j, base);
        out.algebra = out.presheaf->algebra_ptr();
        break;
      case FileKind::kRelation: {
        TSet source = tset_in(j.at("source"), base);
        TSet target = tset_in(j.at("target"), base);
        if (source.algebra().names() != target.algebra().names() ||
            source.algebra().cover_pairs() != target.algebra().cover_pairs()) {
          throw InvalidInput("relation ends live over different algebras");
        }
        TRelation rel;
        rel.map.assign(source.size(), static_cast<std::size_t>(-1));
        for (const auto& [from, to] : j.at("map").items()) {
          rel.map[carrier_index(source, from)] = carrier_index(target, to.get<std::string>());
        }
        if (std::count(rel.map.begin(), rel.map.end(), static_cast<std::size_t>(-1)) > 0) {
          throw InvalidInput("relation must map every source element");
        }
        out.algebra = source.algebra_ptr();
        out.relation = RelationFile{std::move(source), std::move(target), std::move(rel)};
        break;
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed ") + kind_name(kind) + " document: " + e.what());
  }
}

LoadedFile load_file(const std::filesystem::path& path) {
  return parse_document(read_text(path), path.parent_path());
}

std::string algebra_json(const HeytingAlgebra& h) { return algebra_value(h).dump(2) + "\n"; }

std::string tset_json(const TSet& t) {
  const HeytingAlgebra& h = t.algebra();
  json id = json::array();
  for (std::size_t x = 0; x < t.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < t.size(); ++y) row.push_back(h.name(t.id(x, y)));
    id.push_back(row);
  }
  json out = {{"algebra", algebra_value(h)}, {"elements", t.names()}, {"id", id}};
  return out.dump(2) + "\n";
}

std::string presheaf_json(const Presheaf& p) {
  const HeytingAlgebra& h = p.algebra();
  json sections = json::object();
  for (Elem e : h.ascending()) sections[h.name(e)] = p.section_names()[e.index];
  json restrict = json::object();
  for (const auto& [lower, upper] : h.cover_pairs()) {
    json map = json::object();
    for (std::size_t s = 0; s < p.count(upper); ++s) {
      map[p.section_name(upper, s)] = p.section_name(lower, p.restrict(upper, lower, s));
    }
    if (p.count(upper) > 0) restrict[h.name(upper) + ">" + h.name(lower)] = map;
  }
  json out = {{"algebra", algebra_value(h)}, {"sections", sections}, {"restrict", restrict}};
  return out.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"heyting", "tset",     "site", "sheaf", "sheafify",
                                              "omega",   "topos",    "exposition", "sg"};
  return names;
}

void validate_config(const SuiteConfig& config) {
  if (config.max_algebra_size < 2) throw InvalidInput("max_algebra_size must be at least 2");
  if (config.max_algebra_size > 8) throw InvalidInput("max_algebra_size must be at most 8");
  if (config.max_carrier_size < 1) throw InvalidInput("max_carrier_size must be positive");
  if (config.enumeration_guard == 0) throw InvalidInput("enumeration_guard must be positive");
  for (const auto& c : config.checks) {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw InvalidInput("unknown suite " + c);
    }
  }
}

SuiteConfig parse_config(const std::string& text) {
  const json j = parse_json(text, "config");
  if (!j.is_object()) throw InvalidInput("config is not a JSON object");
  SuiteConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "max_algebra_size") {
        config.max_algebra_size = value.get<std::size_t>();
      } else if (key == "max_carrier_size") {
        config.max_carrier_size = value.get<std::size_t>();
      } else if (key == "enumeration_guard") {
        config.enumeration_guard = value.get<std::uint64_t>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "checks") {
        config.checks = value.get<std::vector<std::string>>();
      } else {
        throw InvalidInput("unknown config key " + key);
      }
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed config: ") + e.what());
  }
  validate_config(config);
  return config;
}

std::string render_report(const SuiteConfig& config, const CheckResults& results,
                          ReportFormat format) {
  if (format == ReportFormat::kText) {
    std::string out;
    for (const auto& r : results) {
      out += (r.pass ? "PASS " : "FAIL ") + r.check + " " + r.instance + "\n";
    }
    return out;
  }
  json checks = config.checks.empty() ? json(suite_names()) : json(config.checks);
  json report = {{"version", "1"},
                 {"config",
                  {{"max_algebra_size", config.max_algebra_size},
                   {"max_carrier_size", config.max_carrier_size},
                   {"enumeration_guard", config.enumeration_guard},
                   {"seed", config.seed},
                   {"checks", checks}}},
                 {"results", json::array()}};
  for (const auto& r : results) {
    json entry = {{"check", r.check}, {"instance", r.instance}, {"status", r.pass ? "pass" : "fail"}};
    if (!r.witness.empty()) entry["witness"] = r.witness;
    report["results"].push_back(entry);
  }
  return report.dump(2) + "\n";
}

}  // namespace omegaset::tools
