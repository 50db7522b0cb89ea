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

// JSON files for algebras, T-sets, relations and presheaves, and the
// report/config formats. Every parse error is an InvalidInput.

#ifndef OMEGASET_TOOLS_IO_HPP_
#define OMEGASET_TOOLS_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "omegaset/presheaf.hpp"
#include "omegaset/report.hpp"
#include "omegaset/tset.hpp"

namespace omegaset::tools {

enum class FileKind { kAlgebra, kTSet, kRelation, kPresheaf };
std::string kind_name(FileKind kind);

struct RelationFile {
  TSet source;
  TSet target;
  TRelation relation;
};

struct LoadedFile {
  FileKind kind;
  AlgebraPtr algebra;
  std::optional<TSet> tset;
  std::optional<Presheaf> presheaf;
  std::optional<RelationFile> relation;
};

/// Detects the kind from the required keys; a document matching none or
/// more than one shape is rejected. Paths inside the document resolve
/// against `base`.
LoadedFile parse_document(const std::string& text, const std::filesystem::path& base = ".");
LoadedFile load_file(const std::filesystem::path& path);

std::string algebra_json(const HeytingAlgebra& h);
std::string tset_json(const TSet& t);
std::string presheaf_json(const Presheaf& p);

/// Parameters of a `laws` run.
struct SuiteConfig {
  std::size_t max_algebra_size = 5;
  std::size_t max_carrier_size = 4;
  std::uint64_t enumeration_guard = 1'000'000;
  std::uint64_t seed = 0x5eed;
  std::vector<std::string> checks;  // empty means every suite
};

/// Suite names in their canonical run order.
const std::vector<std::string>& suite_names();
/// Rejects unknown suites, unknown keys and non-positive bounds.
void validate_config(const SuiteConfig& config);
SuiteConfig parse_config(const std::string& text);

enum class ReportFormat { kJson, kText };
std::string render_report(const SuiteConfig& config, const CheckResults& results,
                          ReportFormat format);

}  // namespace omegaset::tools

#endif  // OMEGASET_TOOLS_IO_HPP_
