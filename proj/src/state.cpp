#include "candy/state.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "candy/error.hpp"

namespace candy {

State::State(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw PreconditionError("a state needs at least one child");
  }
}

State::State(std::initializer_list<Count> counts)
    : State(std::vector<Count>(counts)) {}

std::uint64_t State::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Count State::max() const noexcept {
  return *std::max_element(counts_.begin(), counts_.end());
}

std::string State::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

State concat(std::span<const Block> blocks) {
  std::vector<Count> counts;
  for (Block b : blocks) {
    switch (b) {
      case Block::P:
        counts.insert(counts.end(), {0, 2});
        break;
      case Block::PBar:
        counts.insert(counts.end(), {2, 0});
        break;
      case Block::I:
        counts.push_back(1);
        break;
    }
  }
  return State(std::move(counts));
}

State concat(std::initializer_list<Block> blocks) {
  return concat(std::span<const Block>(blocks.begin(), blocks.size()));
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace

State parse_state(std::string_view text) {
  if (trim(text).empty()) {
    throw ParseError("empty state: expected comma-separated counts");
  }
  std::vector<Count> counts;
  std::size_t position = 1;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view raw = text.substr(0, comma);
    const std::string_view token = trim(raw);

    auto fail = [&](const std::string& why) {
      std::ostringstream msg;
      msg << "bad token '" << token << "' at position " << position << ": "
          << why;
      throw ParseError(msg.str());
    };

    if (token.empty()) fail("empty entry");
    if (token.front() == '-') fail("negative entry");
    if (token.front() == '+') fail("not a nonnegative integer");
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range ||
        (ec == std::errc{} && value > std::numeric_limits<Count>::max())) {
      fail("count out of range");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail("not a nonnegative integer");
    }
    counts.push_back(static_cast<Count>(value));

    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    ++position;
  }
  return State(std::move(counts));
}

State step(const State& s) {
  const std::size_t n = s.size();
  std::vector<Count> next(s.counts().begin(), s.counts().end());
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] < 2) continue;
    next[i] -= 2;
    next[(i + n - 1) % n] += 1;
    next[(i + 1) % n] += 1;
  }
  return State(std::move(next));
}

State share_one(const State& s, std::size_t child) {
  const std::size_t n = s.size();
  if (child >= n) {
    throw PreconditionError("child " + std::to_string(child) +
                            " out of range for ring of size " +
                            std::to_string(n));
  }
  if (s[child] < 2) {
    throw PreconditionError("child " + std::to_string(child) + " holds " +
                            std::to_string(s[child]) +
                            " candies; sharing needs at least 2");
  }
  std::vector<Count> next(s.counts().begin(), s.counts().end());
  next[child] -= 2;
  next[(child + n - 1) % n] += 1;
  next[(child + 1) % n] += 1;
  return State(std::move(next));
}

std::uint64_t deficiency(const State& s, std::size_t start,
                         std::size_t length) {
  const std::size_t n = s.size();
  if (length < 1 || length > n) {
    throw PreconditionError("substring length " + std::to_string(length) +
                            " outside 1.." + std::to_string(n));
  }
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < length; ++k) sum += s[(start + k) % n];
  return sum >= length ? 0 : length - sum;
}

std::uint64_t index(const State& s) {
  const std::size_t n = s.size();
  // prefix[k] = c_0 + ... + c_{k-1} over the doubled ring.
  std::vector<std::uint64_t> prefix(2 * n + 1, 0);
  for (std::size_t k = 0; k < 2 * n; ++k) prefix[k + 1] = prefix[k] + s[k % n];

  std::uint64_t total = 0;
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; len <= n; ++len) {
      const std::uint64_t sum = prefix[start + len] - prefix[start];
      if (sum < len) total += len - sum;
    }
  }
  return total;
}

std::size_t tau(const State& s) {
  const std::uint64_t n = s.size();
  std::uint64_t acc = (n % 2 == 0) ? n / 2 : 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t term =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(i % n) *
                                    (s[i - 1] % n)) %
                                   n);
    acc = (acc + term) % n;
  }
  return static_cast<std::size_t>(acc % n);
}

State rotate(const State& s, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(s.size());
  const auto shift = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<Count> out(s.counts().begin(), s.counts().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift),
              out.end());
  return State(std::move(out));
}

State reflect(const State& s) {
  return State(std::vector<Count>(s.counts().rbegin(), s.counts().rend()));
}

std::size_t least_rotation(std::span<const Count> a) {
  // Two-pointer minimum-expression scan; linear time.
  const std::size_t n = a.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Count x = a[(i + k) % n];
    const Count y = a[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

State canonical_rotation(const State& s) {
  return rotate(s, static_cast<std::int64_t>(least_rotation(s.counts())));
}

bool is_symmetric(const State& s) {
  return canonical_rotation(s) == canonical_rotation(reflect(s));
}

State monopoly(std::size_t n) {
  if (n < 1) throw PreconditionError("monopoly needs n >= 1");
  std::vector<Count> counts(n, 0);
  counts[0] = static_cast<Count>(n);
  return State(std::move(counts));
}

State equitable(std::size_t n) {
  if (n < 1) throw PreconditionError("equitable state needs n >= 1");
  return State(std::vector<Count>(n, 1));
}

std::size_t StateHash::operator()(const State& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Count c : s.counts()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace candy
