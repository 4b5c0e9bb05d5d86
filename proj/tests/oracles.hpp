#pragma once

// Slow, literal reference implementations used only by the tests. None of
// these call into the library routine they check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "candy/state.hpp"

namespace candy::oracle {

using Counts = std::vector<std::int64_t>;

inline Counts counts_of(const State& s) {
  return Counts(s.counts().begin(), s.counts().end());
}

inline State state_of(const Counts& c) {
  return State(std::vector<Count>(c.begin(), c.end()));
}

// Every child with more than one candy hands one candy left and one right,
// all reading the pre-round counts.
inline Counts step(const Counts& c) {
  const auto n = static_cast<std::int64_t>(c.size());
  Counts next = c;
  for (std::int64_t i = 0; i < n; ++i) {
    if (c[i] > 1) {
      next[i] -= 1;
      next[((i - 1) % n + n) % n] += 1;
      next[i] -= 1;
      next[(i + 1) % n] += 1;
    }
  }
  return next;
}

// Explicitly materialises each cyclic substring and sums its deficiency.
inline std::int64_t index(const Counts& c) {
  const std::size_t n = c.size();
  std::int64_t total = 0;
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::int64_t> sub;
      for (std::size_t j = 0; j < k; ++j) sub.push_back(c[(start + j) % n]);
      std::int64_t sum = 0;
      for (auto v : sub) sum += v;
      const auto len = static_cast<std::int64_t>(k);
      total += sum <= len ? len - sum : 0;
    }
  }
  return total;
}

// n((-1)^n + 1)/4 + sum i*a_i, reduced into {0..n-1} with signed math.
inline std::int64_t tau(const Counts& a) {
  const auto n = static_cast<std::int64_t>(a.size());
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  std::int64_t acc = n * (sign + 1) / 4;
  for (std::int64_t i = 1; i <= n; ++i) acc += i * a[i - 1];
  return ((acc % n) + n) % n;
}

inline Counts rotate_left(const Counts& c, std::size_t k) {
  Counts out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c[(i + k) % c.size()]);
  return out;
}

inline Counts least_rotation(const Counts& c) {
  Counts best = c;
  for (std::size_t k = 1; k < c.size(); ++k) best = std::min(best, rotate_left(c, k));
  return best;
}

inline bool is_symmetric(const Counts& c) {
  const Counts rev(c.rbegin(), c.rend());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (rotate_left(c, k) == rev) return true;
  }
  return false;
}

// Odometer over [0..m]^n keeping only the vectors summing to m.
inline std::set<Counts> compositions(std::size_t n, std::int64_t m) {
  std::set<Counts> out;
  Counts c(n, 0);
  while (true) {
    std::int64_t sum = 0;
    for (auto v : c) sum += v;
    if (sum == m) out.insert(c);
    std::size_t i = 0;
    while (i < n && c[i] == m) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

struct Orbit {
  std::size_t transient = 0;
  std::size_t period = 0;
};

// Brent's cycle detection: constant memory, independent of hashing.
inline Orbit brent(const Counts& x0) {
  std::size_t power = 1, lam = 1;
  Counts tortoise = x0;
  Counts hare = step(x0);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
  }
  tortoise = x0;
  hare = x0;
  for (std::size_t i = 0; i < lam; ++i) hare = step(hare);
  std::size_t mu = 0;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  return {mu, lam};
}

}  // namespace candy::oracle
