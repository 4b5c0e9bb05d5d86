#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace candy {

using Count = std::uint32_t;

// A ring of n >= 1 children, counts[i] candies in front of child i.
// Children are numbered 0..n-1 clockwise; child i's neighbours are i-1 and
// i+1 modulo n.
class State {
 public:
  // Throws PreconditionError if counts is empty.
  explicit State(std::vector<Count> counts);
  State(std::initializer_list<Count> counts);

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept;
  bool balanced() const noexcept { return total() == size(); }
  Count max() const noexcept;

  Count operator[](std::size_t i) const { return counts_[i]; }
  std::span<const Count> counts() const noexcept { return counts_; }

  // Comma-separated counts, e.g. "0,2,1,1".
  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  std::vector<Count> counts_;
};

// The three building blocks of periodic strings.
enum class Block { P, PBar, I };

// Concatenation of blocks: P = (0,2), PBar = (2,0), I = (1).
State concat(std::span<const Block> blocks);
State concat(std::initializer_list<Block> blocks);

// Parses "c1,c2,...,cn". Surrounding whitespace around each token is
// ignored. Throws ParseError naming the offending token and its position.
State parse_state(std::string_view text);

// One synchronous round: every child holding >= 2 candies passes one to
// each neighbour. On n = 2 both candies reach the single neighbour; on
// n = 1 the state is unchanged.
State step(const State& s);

// Only `child` shares. Requires child < n and s[child] >= 2.
State share_one(const State& s, std::size_t child);

// max(0, length - sum of the cyclic substring starting at `start`).
// Requires 1 <= length <= n; start is reduced modulo n.
std::uint64_t deficiency(const State& s, std::size_t start, std::size_t length);

// Sum of deficiencies over all n starts and all lengths 1..n.
std::uint64_t index(const State& s);

// (offset + sum_{i=1..n} i * c_i) mod n with offset n/2 for even n and
// 0 for odd n. Positions are 1-based in the sum.
std::size_t tau(const State& s);

// k-fold left rotation: (a1,...,an) -> (a2,...,an,a1) for k = 1.
// Negative k rotates right.
State rotate(const State& s, std::int64_t k);

State reflect(const State& s);

// Offset r such that rotate(s, r) is the lexicographically least rotation.
std::size_t least_rotation(std::span<const Count> a);

State canonical_rotation(const State& s);

// True iff the ring has a mirror axis (through a child or between two).
bool is_symmetric(const State& s);

// (n, 0, ..., 0).
State monopoly(std::size_t n);

// Iⁿ = (1, ..., 1).
State equitable(std::size_t n);

struct StateHash {
  std::size_t operator()(const State& s) const noexcept;
};

}  // namespace candy

template <>
struct std::hash<candy::State> : candy::StateHash {};
