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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "command.hpp"
#include "io.hpp"
#include "omegaset/error.hpp"
#include "omegaset/sheaf.hpp"
#include "pool.hpp"
#include "suite.hpp"

namespace omegaset::tools {
namespace {

const std::filesystem::path kData = OMEGASET_DATA_DIR;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

TEST(Pools, AlgebraCounts) {
  // Distributive lattices with n elements, up to isomorphism.
  const std::vector<std::size_t> expected = {1, 1, 2, 3, 5};
  const auto all = enumerate_algebras(6);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto count = std::count_if(all.begin(), all.end(),
                                     [&](const NamedAlgebra& a) { return a.algebra->size() == n; });
    EXPECT_EQ(static_cast<std::size_t>(count), expected[n - 2]) << n;
  }
  const auto only_two = enumerate_algebras(2);
  ASSERT_EQ(only_two.size(), 1u);
  EXPECT_EQ(only_two.front().name, "two");
  const auto three = enumerate_algebras(3, 3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three.front().name, "chain3");
  EXPECT_THROW(enumerate_algebras(9), SizeGuard);
}

TEST(Pools, CanonicalChain3Sheaves) {
  auto c = std::make_shared<const HeytingAlgebra>(algebras::chain3());
  const auto sheaves = enumerate_sheaves(c, territory_topology(*c), 3);
  std::vector<std::string> sigs;
  for (const auto& s : sheaves) sigs.push_back(count_signature(s));
  EXPECT_EQ(sigs, (std::vector<std::string>{"(1,0,0)", "(1,1,0)", "(1,1,1)", "(1,2,0)"}));
}

// Separated postulate-satisfying T-sets and sheaves correspond one to one,
// so the two pools have the same size when their bounds match.
TEST(Pools, TSetPoolMatchesSheafPool) {
  for (const auto& named : enumerate_algebras(4)) {
    const Topology j = territory_topology(*named.algebra);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto tsets = enumerate_tsets(named.algebra, n, {});
      const auto sheaves = enumerate_sheaves(named.algebra, j, n);
      EXPECT_EQ(tsets.size(), sheaves.size()) << named.name << " " << n;
      for (const TSet& t : tsets) {
        const Presheaf f = tset_to_presheaf(t).presheaf;
        EXPECT_EQ(std::count_if(sheaves.begin(), sheaves.end(),
                                [&](const Presheaf& s) { return isomorphic(s, f); }),
                  1);
      }
    }
  }
}

TEST(Io, ParsesEveryKind) {
  EXPECT_EQ(load_file(data("chain3.json")).kind, FileKind::kAlgebra);
  const LoadedFile t = load_file(data("unreal_atom.json"));
  EXPECT_EQ(t.kind, FileKind::kTSet);
  EXPECT_EQ(t.tset->size(), 1u);
  const LoadedFile p = load_file(data("doubled_point.json"));
  ASSERT_EQ(p.kind, FileKind::kPresheaf);
  EXPECT_EQ(p.presheaf->count(p.algebra->top()), 2u);
}

TEST(Io, RejectsBadDocuments) {
  EXPECT_THROW(parse_document("{\"foo\": 1}"), InvalidInput);
  EXPECT_THROW(parse_document("not json"), InvalidInput);
  // Both an algebra and a T-set shape.
  const std::string ambiguous =
      R"({"elements": ["mu", "M"], "covers": [["mu", "M"]], "algebra": {"elements": ["mu", "M"], "covers": [["mu", "M"]]}, "id": [["M", "mu"], ["mu", "M"]]})";
  EXPECT_THROW(parse_document(ambiguous), InvalidInput);
  EXPECT_THROW(parse_document(R"({"elements": ["mu", "M"], "covers": [["mu", "X"]]})"),
               InvalidInput);
}

TEST(Io, RoundTripsThroughJson) {
  const LoadedFile t = load_file(data("chain3_terminal.json"));
  const LoadedFile again = parse_document(tset_json(*t.tset));
  EXPECT_TRUE(find_tset_isomorphism(*again.tset, *t.tset).has_value());
  const LoadedFile p = load_file(data("doubled_point.json"));
  EXPECT_TRUE(isomorphic(*parse_document(presheaf_json(*p.presheaf)).presheaf, *p.presheaf));
}

TEST(Io, Config) {
  const SuiteConfig c = parse_config(R"({"max_algebra_size": 3, "checks": ["heyting"]})");
  EXPECT_EQ(c.max_algebra_size, 3u);
  EXPECT_EQ(c.checks, (std::vector<std::string>{"heyting"}));
  EXPECT_THROW(parse_config(R"({"bogus": 1})"), InvalidInput);
  EXPECT_THROW(parse_config(R"({"checks": ["nope"]})"), InvalidInput);
  EXPECT_THROW(parse_config(R"({"max_algebra_size": 1})"), InvalidInput);
  EXPECT_THROW(parse_config(R"({"enumeration_guard": 0})"), InvalidInput);
}

TEST(Cli, Validate) {
  const Invocation ok = run({"validate", data("chain3.json")});
  EXPECT_EQ(ok.code, kExitPass);
  EXPECT_NE(ok.out.find("complete Heyting algebra, non-Boolean"), std::string::npos);
  EXPECT_EQ(run({"validate", data("pentagon.json")}).code, kExitCheckFailed);
  EXPECT_EQ(run({"validate", data("doubled_point.json")}).code, kExitPass);
  EXPECT_EQ(run({"validate", data("missing.json")}).code, kExitUsage);
  EXPECT_EQ(run({"validate", data("laws_small.json")}).code, kExitUsage);
}

TEST(Cli, Atoms) {
  const Invocation r = run({"atoms", data("unreal_atom.json")});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("none (unreal)"), std::string::npos);
  EXPECT_EQ(run({"atoms", data("chain3_terminal.json")}).code, kExitPass);
}

TEST(Cli, Sheafify) {
  const Invocation r = run({"sheafify", data("unreal_atom.json")});
  ASSERT_EQ(r.code, kExitPass);
  const LoadedFile out = parse_document(r.out, kData);
  ASSERT_EQ(out.kind, FileKind::kPresheaf);
  const HeytingAlgebra& h = *out.algebra;
  EXPECT_EQ(out.presheaf->count(h.at("mu")), 1u);
  EXPECT_EQ(out.presheaf->count(h.at("p")), 1u);
  EXPECT_EQ(out.presheaf->count(h.at("M")), 0u);

  const Invocation d = run({"sheafify", data("doubled_point.json")});
  ASSERT_EQ(d.code, kExitPass);
  EXPECT_EQ(parse_document(d.out).presheaf->count(h.top()), 1u);
}

TEST(Cli, Omega) {
  const Invocation r = run({"omega", data("chain3.json"), "-p", "p"});
  EXPECT_EQ(r.code, kExitPass);
    EXPECT_NE(r.out.find("Omega(p) = {mu} {mu,p}"), std::string::npos);
  EXPECT_EQ(run({"omega", data("chain3.json"), "-p", "q"}).code, kExitUsage);
}

TEST(Cli, Exposition) {
  const Invocation r = run({"counterexample", "exposition"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("mediating maps: 65536"), std::string::npos);
  EXPECT_NE(r.out.find("refuted"), std::string::npos);
  EXPECT_NE(r.out.find("graph universality holds"), std::string::npos);
  EXPECT_EQ(run({"counterexample", "exposition", "--points", "9"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "laws"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, LawsAreDeterministic) {
  const std::vector<std::string> args = {"--format", "json", "laws", "--config",
                                         data("laws_small.json")};
  const Invocation a = run(args);
  const Invocation b = run(args);
  EXPECT_EQ(a.code, kExitPass) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"version\": \"1\""), std::string::npos);
  const Invocation text = run({"laws", "--config", data("laws_small.json")});
  EXPECT_EQ(text.out.rfind("PASS ", 0), 0u);
}

}  // namespace
}  // namespace omegaset::tools
