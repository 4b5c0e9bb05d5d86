#include "candy/dynamics.hpp"

#include <string>
#include <unordered_map>

#include "candy/error.hpp"

namespace candy {

Trajectory detect_cycle(const State& s, const DetectOptions& options) {
  if (options.max_steps == 0) {
    throw PreconditionError("max_steps must be at least 1");
  }
  std::unordered_map<State, std::size_t> seen;
  std::vector<State> order;
  order.push_back(s);
  seen.emplace(s, 0);

  State current = s;
  for (std::size_t t = 1; t <= options.max_steps; ++t) {
    current = step(current);
    const auto [it, inserted] = seen.emplace(current, t);
    if (inserted) {
      order.push_back(current);
      continue;
    }
    const std::size_t first = it->second;
    Trajectory out{s, first, t - first, {}, std::nullopt};
    out.cycle.assign(order.begin() + static_cast<std::ptrdiff_t>(first),
                     order.end());
    if (options.keep_prefix) out.visited = std::move(order);
    return out;
  }
  throw CycleNotFound("no repeated state within " +
                      std::to_string(options.max_steps) + " steps from " +
                      s.to_string());
}

bool is_periodic(const State& s, std::size_t max_steps) {
  return detect_cycle(s, {max_steps, false}).transient_length == 0;
}

}  // namespace candy
