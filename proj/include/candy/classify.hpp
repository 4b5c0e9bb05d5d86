#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "candy/state.hpp"

namespace candy {

// The four families of periodic states of the balanced game (m == n):
//
//   Equitable      Iⁿ, the fixed state
//   Clockwise      a rotation of P^i1 I^j1 ... P^il I^jl, every j > 0
//   AntiClockwise  the same with PBar blocks
//   Equivocal      P^(n/2), n even
//
// p_count is the number of P (resp. PBar) blocks and is zero for the other
// two kinds.
struct PeriodicClass {
  enum class Kind { Equitable, Clockwise, AntiClockwise, Equivocal };

  Kind kind = Kind::Equitable;
  std::size_t p_count = 0;

  static PeriodicClass equitable() { return {Kind::Equitable, 0}; }
  static PeriodicClass clockwise(std::size_t p) { return {Kind::Clockwise, p}; }
  static PeriodicClass anticlockwise(std::size_t p) {
    return {Kind::AntiClockwise, p};
  }
  static PeriodicClass equivocal() { return {Kind::Equivocal, 0}; }

  bool has_p_count() const noexcept {
    return kind == Kind::Clockwise || kind == Kind::AntiClockwise;
  }

  friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
};

// "equitable" | "clockwise" | "anticlockwise" | "equivocal"
std::string_view kind_name(PeriodicClass::Kind kind);
PeriodicClass::Kind parse_kind(std::string_view name);

// e.g. "clockwise(p_count=2)", "equivocal".
std::string to_string(const PeriodicClass& c);

struct OutcomeReport {
  std::size_t tau = 0;
  PeriodicClass predicted;

  friend bool operator==(const OutcomeReport&, const OutcomeReport&) = default;
};

// Structural classification of a periodic balanced state by tiling some
// rotation with P/I (or PBar/I) blocks. Throws NotBalanced if m != n and
// NotPeriodic if the string matches none of the four families.
PeriodicClass classify_periodic(const State& t);

// Maps tau to the long-run class without simulating:
//   0 -> Equitable, (0, n/2) -> Clockwise{tau}, n/2 -> Equivocal,
//   (n/2, n) -> AntiClockwise{n - tau}.
// Throws NotBalanced if m != n.
OutcomeReport predict_outcome(const State& s);

// predict_outcome restricted to mirror-symmetric states, which can only end
// equitable (odd n) or equitable/equivocal (even n). Throws NotSymmetric if
// s has no mirror axis and TheoremViolation if tau lands anywhere else.
OutcomeReport predict_symmetric(const State& s);

}  // namespace candy
