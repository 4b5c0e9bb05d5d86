#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "candy/state.hpp"

namespace candy {

inline constexpr std::size_t kDefaultMaxSteps = 1'000'000;

// Orbit of `initial` under step: a transient prefix followed by a cycle.
//
//   step^transient_length(initial) == cycle[0]
//   step(cycle[i]) == cycle[(i + 1) % period]
//
// `visited` (when retained) holds every distinct state of the orbit in
// visiting order: transient_length + period entries.
struct Trajectory {
  State initial;
  std::size_t transient_length = 0;
  std::size_t period = 1;
  std::vector<State> cycle;
  std::optional<std::vector<State>> visited;
};

struct DetectOptions {
  std::size_t max_steps = kDefaultMaxSteps;
  bool keep_prefix = false;
};

// Iterates step from s, indexing every visited state, until one repeats.
// Throws CycleNotFound after max_steps applications without a repeat and
// PreconditionError if max_steps == 0.
Trajectory detect_cycle(const State& s, const DetectOptions& options = {});

bool is_periodic(const State& s, std::size_t max_steps = kDefaultMaxSteps);

}  // namespace candy
