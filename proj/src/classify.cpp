#include "candy/classify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "candy/error.hpp"

namespace candy {

std::string_view kind_name(PeriodicClass::Kind kind) {
  switch (kind) {
    case PeriodicClass::Kind::Equitable:
      return "equitable";
    case PeriodicClass::Kind::Clockwise:
      return "clockwise";
    case PeriodicClass::Kind::AntiClockwise:
      return "anticlockwise";
    case PeriodicClass::Kind::Equivocal:
      return "equivocal";
  }
  return "unknown";
}

PeriodicClass::Kind parse_kind(std::string_view name) {
  for (auto k : {PeriodicClass::Kind::Equitable, PeriodicClass::Kind::Clockwise,
                 PeriodicClass::Kind::AntiClockwise,
                 PeriodicClass::Kind::Equivocal}) {
    if (kind_name(k) == name) return k;
  }
  throw ParseError("unknown periodic class '" + std::string(name) + "'");
}

std::string to_string(const PeriodicClass& c) {
  std::string out(kind_name(c.kind));
  if (c.has_p_count()) out += "(p_count=" + std::to_string(c.p_count) + ")";
  return out;
}

namespace {

void require_balanced(const State& s) {
  if (!s.balanced()) {
    throw NotBalanced("state " + s.to_string() + " has " +
                      std::to_string(s.total()) + " candies for " +
                      std::to_string(s.size()) + " children");
  }
}

// (0,2)^(n/2) up to rotation.
bool is_alternation(const State& t) {
  const std::size_t n = t.size();
  if (n % 2 != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] + t[(i + 1) % n] != 2 || (t[i] != 0 && t[i] != 2)) return false;
  }
  return true;
}

// Tiles the ring starting at `start` with `lead,trail` pairs and single 1s.
// Returns the number of pairs on success.
std::optional<std::size_t> tile_from(const State& t, std::size_t start,
                                     Count lead, Count trail) {
  const std::size_t n = t.size();
  std::size_t pairs = 0;
  std::size_t k = 0;
  while (k < n) {
    const Count c = t[(start + k) % n];
    if (c == 1) {
      ++k;
    } else if (c == lead && k + 1 < n && t[(start + k + 1) % n] == trail) {
      ++pairs;
      k += 2;
    } else {
      return std::nullopt;
    }
  }
  return pairs;
}

std::optional<std::size_t> tile(const State& t, Count lead, Count trail) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (auto pairs = tile_from(t, r, lead, trail)) return pairs;
  }
  return std::nullopt;
}

}  // namespace

PeriodicClass classify_periodic(const State& t) {
  require_balanced(t);
  if (t.max() == 1) return PeriodicClass::equitable();
  if (t.max() > 2) {
    throw NotPeriodic("state " + t.to_string() +
                      " has an entry above 2 and cannot be periodic");
  }
  if (is_alternation(t)) return PeriodicClass::equivocal();

  const auto cw = tile(t, 0, 2);
  const auto acw = tile(t, 2, 0);
  if (cw && acw) {
    throw std::logic_error("state " + t.to_string() +
                           " tiles in both orientations");
  }
  if (cw) return PeriodicClass::clockwise(*cw);
  if (acw) return PeriodicClass::anticlockwise(*acw);
  throw NotPeriodic("state " + t.to_string() +
                    " is not a concatenation of P/I or PBar/I blocks");
}

OutcomeReport predict_outcome(const State& s) {
  require_balanced(s);
  const std::size_t n = s.size();
  const std::size_t t = tau(s);
  OutcomeReport report{t, PeriodicClass::equitable()};
  // Compare 2t against n to stay exact for odd n.
  if (t == 0) {
    report.predicted = PeriodicClass::equitable();
  } else if (2 * t < n) {
    report.predicted = PeriodicClass::clockwise(t);
  } else if (2 * t == n) {
    report.predicted = PeriodicClass::equivocal();
  } else {
    report.predicted = PeriodicClass::anticlockwise(n - t);
  }
  return report;
}

OutcomeReport predict_symmetric(const State& s) {
  require_balanced(s);
  if (!is_symmetric(s)) {
    throw NotSymmetric("state " + s.to_string() + " has no mirror axis");
  }
  const OutcomeReport report = predict_outcome(s);
  const std::size_t n = s.size();
  const bool allowed = report.tau == 0 || (n % 2 == 0 && 2 * report.tau == n);
  if (!allowed) {
    throw TheoremViolation("symmetric state " + s.to_string() + " has tau " +
                           std::to_string(report.tau) +
                           ", outside {0, n/2}");
  }
  return report;
}

}  // namespace candy
