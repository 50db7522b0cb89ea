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

#ifndef OMEGASET_REPORT_HPP_
#define OMEGASET_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace omegaset {

/// One line of a check report: {check, instance, status, witness}.
struct CheckResult {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string witness;  // empty when there is nothing to replay
};

using CheckResults = std::vector<CheckResult>;

inline bool all_pass(const CheckResults& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace omegaset

#endif  // OMEGASET_REPORT_HPP_
