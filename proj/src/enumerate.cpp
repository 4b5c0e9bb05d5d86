#include "candy/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "candy/error.hpp"

namespace candy {

std::uint64_t composition_count(std::size_t n, std::uint64_t m) {
  if (n == 0) return m == 0 ? 1 : 0;
  // C(m + k, k) with k = n - 1, built as a running product of exact
  // binomials C(m + i, i).
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t k = n - 1;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (m + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

StateSpace::StateSpace(std::size_t n, std::uint64_t m, Dedup dedup,
                       std::uint64_t budget)
    : n_(n), m_(m), dedup_(dedup) {
  if (n == 0) throw PreconditionError("ring size must be at least 1");
  if (m > std::numeric_limits<Count>::max()) {
    throw PreconditionError("candy total " + std::to_string(m) +
                            " exceeds the count range");
  }
  const std::uint64_t count = composition_count(n, m);
  if (count > budget) {
    throw CapacityError("state space for n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + " has " +
                        std::to_string(count) +
                        " states, over the enumeration budget of " +
                        std::to_string(budget));
  }
}

StateSpace::iterator::iterator(std::size_t n, std::uint64_t m, Dedup dedup)
    : parts_(n, 0), dedup_(dedup), done_(false) {
  parts_[0] = static_cast<Count>(m);
  if (!accepted()) ++*this;
}

bool StateSpace::iterator::accepted() const {
  return dedup_ == Dedup::All || least_rotation(parts_) == 0;
}

// In-place successor: move one unit from the first nonzero part to its
// right-hand neighbour and sweep the remainder back to the front.
bool StateSpace::iterator::advance() {
  const std::size_t n = parts_.size();
  std::size_t i = 0;
  while (i < n && parts_[i] == 0) ++i;
  if (i + 1 >= n) return false;
  const Count v = parts_[i];
  parts_[i] = 0;
  parts_[0] = v - 1;
  parts_[i + 1] += 1;
  return true;
}

StateSpace::iterator& StateSpace::iterator::operator++() {
  do {
    if (!advance()) {
      done_ = true;
      return *this;
    }
  } while (!accepted());
  return *this;
}

std::vector<State> enumerate_states(std::size_t n, std::uint64_t m,
                                    Dedup dedup, std::uint64_t budget) {
  std::vector<State> out;
  for (State s : StateSpace(n, m, dedup, budget)) out.push_back(std::move(s));
  return out;
}

State random_state(std::size_t n, std::uint64_t m, std::mt19937_64& rng) {
  if (n == 0) throw PreconditionError("ring size must be at least 1");
  // Choose n-1 bar positions among m+n-1 slots.
  const std::uint64_t slots = m + n - 1;
  std::vector<std::uint64_t> bars;
  bars.reserve(n - 1);
  // Floyd's sampling of a (n-1)-subset of [0, slots).
  for (std::uint64_t j = slots - (n - 1); j < slots; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    const std::uint64_t t = pick(rng);
    if (std::find(bars.begin(), bars.end(), t) == bars.end()) {
      bars.push_back(t);
    } else {
      bars.push_back(j);
    }
  }
  std::sort(bars.begin(), bars.end());
  std::vector<Count> parts;
  parts.reserve(n);
  std::uint64_t prev = 0;
  for (std::uint64_t b : bars) {
    parts.push_back(static_cast<Count>(b - prev));
    prev = b + 1;
  }
  parts.push_back(static_cast<Count>(slots - prev));
  return State(std::move(parts));
}

}  // namespace candy
