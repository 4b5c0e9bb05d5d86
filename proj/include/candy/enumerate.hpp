#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <vector>

#include "candy/state.hpp"

namespace candy {

enum class Dedup { All, UniqueUpToRotation };

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// C(m + n - 1, n - 1), saturating at UINT64_MAX.
std::uint64_t composition_count(std::size_t n, std::uint64_t m);

// Every weak composition of m into n ordered parts, streamed in colex order
// starting from (m, 0, ..., 0) and ending at (0, ..., 0, m). In
// UniqueUpToRotation mode only least rotations are produced.
//
// Construction throws CapacityError when composition_count(n, m) exceeds
// the budget, and PreconditionError when n == 0.
class StateSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = State;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    State operator*() const { return State(parts_); }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class StateSpace;
    iterator(std::size_t n, std::uint64_t m, Dedup dedup);

    bool advance();
    bool accepted() const;

    std::vector<Count> parts_;
    Dedup dedup_ = Dedup::All;
    bool done_ = true;
  };

  StateSpace(std::size_t n, std::uint64_t m, Dedup dedup = Dedup::All,
             std::uint64_t budget = kDefaultBudget);

  iterator begin() const { return iterator(n_, m_, dedup_); }
  std::default_sentinel_t end() const { return {}; }

  std::size_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  Dedup dedup() const noexcept { return dedup_; }

 private:
  std::size_t n_;
  std::uint64_t m_;
  Dedup dedup_;
};

std::vector<State> enumerate_states(std::size_t n, std::uint64_t m,
                                    Dedup dedup = Dedup::All,
                                    std::uint64_t budget = kDefaultBudget);

// A uniformly random weak composition of m into n parts (stars and bars).
State random_state(std::size_t n, std::uint64_t m, std::mt19937_64& rng);

}  // namespace candy
