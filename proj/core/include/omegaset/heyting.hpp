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

#ifndef OMEGASET_HEYTING_HPP_
#define OMEGASET_HEYTING_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omegaset {

/// An element of a finite lattice, identified by its position in the
/// element list it was built from. Names are surface syntax only.
struct Elem {
  std::uint32_t index = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Subset of the elements of a lattice with at most 64 elements.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElemSet single(Elem e) { return ElemSet(std::uint64_t{1} << e.index); }
  static constexpr ElemSet first_n(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Elem e) const { return (bits_ >> e.index) & 1U; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e.index; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e.index); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet minus(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr auto operator<=>(ElemSet, ElemSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Hasse-diagram description of a finite poset.
struct PosetSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
};

/// A finite bounded lattice built from a Hasse diagram. No distributivity is
/// assumed; `HeytingAlgebra` adds that requirement.
class Lattice {
 public:
  /// Throws InvalidInput, CycleError or NoBound.
  static Lattice build(const PosetSpec& spec);

  std::size_t size() const { return names_.size(); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  ElemSet all() const { return ElemSet::first_n(size()); }

  bool leq(Elem p, Elem q) const { return down_[q.index].contains(p); }
  Elem meet(Elem p, Elem q) const { return meet_[p.index * size() + q.index]; }
  Elem join(Elem p, Elem q) const { return join_[p.index * size() + q.index]; }

  /// {q | q <= p}
  ElemSet down(Elem p) const { return down_[p.index]; }
  /// {q | p <= q}
  ElemSet up(Elem p) const { return up_[p.index]; }

  /// Least upper bound Σ S; Σ∅ is the bottom element.
  Elem envelope(ElemSet s) const;
  /// Downward closure of a subset.
  ElemSet down_closure(ElemSet s) const;
  bool is_down_closed(ElemSet s) const { return down_closure(s) == s; }

  const std::string& name(Elem e) const { return names_[e.index]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(const std::string& name) const;
  /// Throws InvalidInput for unknown names.
  Elem at(const std::string& name) const;

  /// Elements sorted so that every element comes after everything below it.
  const std::vector<Elem>& ascending() const { return ascending_; }
  std::vector<Elem> elements() const { return all().elements(); }

  /// Hasse diagram edges (q, p) with q covered by p.
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  PosetSpec to_spec() const;

 protected:
  Lattice() = default;

  std::vector<std::string> names_;
  std::vector<ElemSet> down_;
  std::vector<ElemSet> up_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> ascending_;
  Elem bottom_;
  Elem top_;
};

/// How the subset-quantified laws were verified at construction.
struct ValidityReport {
  enum class Mode { kExhaustive, kSampled };
  Mode mode = Mode::kExhaustive;
  std::uint64_t subsets_checked = 0;
  std::uint64_t seed = 0;  // meaningful only in sampled mode
};

/// Frame law sampling parameters for algebras too large for exhaustive checks.
struct ValidationOptions {
  std::size_t exhaustive_limit = 6;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0x5eed;
};

/// A finite complete Heyting algebra (frame): a distributive lattice with the
/// implication Σ{t | p ∧ t ≤ q} and negation p ⇒ μ precomputed.
/// Immutable after `build`; safe to share between threads.
class HeytingAlgebra : public Lattice {
 public:
  /// Throws InvalidInput, CycleError, NoBound or NotDistributive.
  static HeytingAlgebra build(const PosetSpec& spec, const ValidationOptions& opts = {});

  Elem implies(Elem p, Elem q) const { return implies_[p.index * size() + q.index]; }
  Elem negate(Elem p) const { return implies(p, bottom()); }
  /// True iff ¬¬p = p for every element.
  bool is_boolean() const;

  const ValidityReport& validity() const { return validity_; }

 private:
  HeytingAlgebra() = default;

  std::vector<Elem> implies_;
  ValidityReport validity_;
};

/// A frame-law violation Σ(A) ∧ b ≠ Σ{a ∧ b | a ∈ A}.
struct FrameViolation {
  ElemSet subset;
  Elem b;
};

/// Searches for a frame-law violation: exhaustively when the lattice has at
/// most `opts.exhaustive_limit` elements, otherwise over `opts.samples`
/// subsets drawn with a fixed seed. `checked` receives the subset count.
std::optional<FrameViolation> find_frame_violation(const Lattice& lattice,
                                                   const ValidationOptions& opts,
                                                   std::uint64_t* checked = nullptr);

namespace algebras {
/// {mu < M}
HeytingAlgebra two();
/// {mu < p < M}
HeytingAlgebra chain3();
/// Chain of n elements named mu, p1, ..., M.
HeytingAlgebra chain(std::size_t n);
/// Boolean square {mu < a, b < M}.
HeytingAlgebra diamond();
/// The non-distributive pentagon N5 as a poset spec.
PosetSpec pentagon_spec();
}  // namespace algebras

}  // namespace omegaset

#endif  // OMEGASET_HEYTING_HPP_
