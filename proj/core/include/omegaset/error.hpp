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

#ifndef OMEGASET_ERROR_HPP_
#define OMEGASET_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace omegaset {

/// Base of every error raised by the library. The `kind()` string is the
/// stable machine-readable tag used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define OMEGASET_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

// Malformed input: unknown names, wrong table shapes, bad files.
OMEGASET_DEFINE_ERROR(InvalidInput);

// heyting_core
OMEGASET_DEFINE_ERROR(CycleError);
OMEGASET_DEFINE_ERROR(NoBound);
OMEGASET_DEFINE_ERROR(NotDistributive);

// tset_core
OMEGASET_DEFINE_ERROR(NotAtom);
OMEGASET_DEFINE_ERROR(PostulateRequired);
OMEGASET_DEFINE_ERROR(NotCompatible);
OMEGASET_DEFINE_ERROR(SizeGuard);

// site_topology
OMEGASET_DEFINE_ERROR(NotBelow);
OMEGASET_DEFINE_ERROR(BasisInvalid);

// sheaf_engine / topos_ops
OMEGASET_DEFINE_ERROR(InvalidPresheaf);
OMEGASET_DEFINE_ERROR(NotASheaf);
OMEGASET_DEFINE_ERROR(NotSubobject);

#undef OMEGASET_DEFINE_ERROR

}  // namespace omegaset

#endif  // OMEGASET_ERROR_HPP_
