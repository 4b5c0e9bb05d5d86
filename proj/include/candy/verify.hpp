#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "candy/dynamics.hpp"
#include "candy/enumerate.hpp"
#include "candy/state.hpp"

namespace candy {

// Claims checked exhaustively by verify().
//
//   IndexMonotonicity  index never rises under step or a single share; it
//                      falls strictly when max >= 3; a single share keeps it
//                      iff the sharer held exactly 2.
//   TauInvariance      tau is unchanged by step, rotation and single shares;
//                      the candy total is conserved.
//   Abelian            sequential shares in any order reproduce step; step
//                      commutes with rotation and reflection.
//   Taxonomy           classify_periodic succeeds iff the state is periodic;
//                      every cycle state classifies, has max <= 2 and the
//                      cycle's index; travelling-wave periods divide n.
//   Prediction         the tau prediction matches the simulated cycle.
//   Symmetric          mirror-symmetric states end equitable or equivocal as
//                      tau dictates (only symmetric states are checked).
//   Monopoly           (n,0,...,0) ends in Iⁿ for odd n and in the
//                      P^(n/2) <-> PBar^(n/2) 2-cycle for even n.
enum class Theorem {
  IndexMonotonicity,
  TauInvariance,
  Abelian,
  Taxonomy,
  Prediction,
  Symmetric,
  Monopoly,
};

std::string_view theorem_name(Theorem t);
Theorem parse_theorem(std::string_view name);
std::span<const Theorem> all_theorems();

struct Failure {
  State state;
  std::string expected;
  std::string observed;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct SizeSummary {
  std::size_t n = 0;
  std::uint64_t states_checked = 0;
  std::uint64_t failures = 0;

  friend bool operator==(const SizeSummary&, const SizeSummary&) = default;
};

struct VerificationReport {
  Theorem theorem = Theorem::Prediction;
  std::vector<std::size_t> n;
  std::uint64_t states_checked = 0;
  std::vector<Failure> failures;
  std::vector<SizeSummary> per_n;
  std::chrono::milliseconds elapsed{0};

  bool ok() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  // 0 checks every balanced state; otherwise this many uniformly random
  // balanced states per ring size.
  std::uint64_t sample = 0;
  std::uint64_t seed = 20240521;
  std::size_t abelian_orders = 3;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t chunk_size = 2048;
};

// Runs one claim's checker against a single balanced state; returns the
// failures it found (empty on success). Exceptions become failures.
std::vector<Failure> check_state(Theorem theorem, const State& s,
                                 const VerifyOptions& options = {});

// Checks `theorem` over every balanced state of each ring size in `ns`
// (every symmetric one for Symmetric, the monopoly state for Monopoly).
// The report is identical for any jobs value. Throws CapacityError when a
// ring size exceeds the budget.
VerificationReport verify(Theorem theorem, std::span<const std::size_t> ns,
                          const VerifyOptions& options = {});

}  // namespace candy
