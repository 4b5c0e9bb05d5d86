// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails. argv[1] is the path of the candy CLI binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "candy/classify.hpp"
#include "candy/dynamics.hpp"
#include "candy/state.hpp"
#include "candy/verify.hpp"

using namespace candy;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(std::string* detail) : detail_(detail) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (detail_->empty()) *detail_ = what;
    }
  }
  bool ok() const { return ok_; }

 private:
  std::string* detail_;
  bool ok_ = true;
};

int failed = 0;

// Runs `body`, times it and checks the time limit (0: none).
void criterion(const std::string& id, const std::string& title,
               std::chrono::duration<double, std::milli> limit,
               const std::function<void(Criterion&)>& body) {
  std::string detail;
  Criterion c(&detail);
  const auto start = Clock::now();
  body(c);
  const std::chrono::duration<double, std::milli> took = Clock::now() - start;
  bool ok = c.ok();
  if (limit.count() > 0 && took > limit) {
    ok = false;
    if (detail.empty()) {
      detail = "took " + std::to_string(took.count()) + " ms, limit " +
               std::to_string(limit.count()) + " ms";
    }
  }
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << id << ' ' << title << " ("
       << took.count() << " ms)";
  if (!ok) line << ": " << detail;
  std::cout << line.str() << std::endl;
  if (!ok) ++failed;
}

void require_clean(Criterion& c, const VerificationReport& r,
                   std::uint64_t expected_states = 0) {
  std::string what = std::string(theorem_name(r.theorem)) + ": " +
                     std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) {
    const Failure& f = r.failures.front();
    what += " (first: " + f.state.to_string() + " expected " + f.expected +
            ", observed " + f.observed + ")";
  }
  c.require(r.ok(), what);
  if (expected_states != 0) {
    c.require(r.states_checked == expected_states,
              std::string(theorem_name(r.theorem)) + ": checked " +
                  std::to_string(r.states_checked) + " states, expected " +
                  std::to_string(expected_states));
  }
}

State wave(std::size_t n, std::size_t shift) {
  // f^shift(P I^(n-2)) = I^shift P I^(n-2-shift)
  std::vector<Count> w(n, 1);
  w[shift] = 0;
  w[shift + 1] = 2;
  return State(w);
}

std::string capture(const std::string& command, int* status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  *status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using ms = std::chrono::duration<double, std::milli>;
  const std::vector<std::size_t> three_to_eight{3, 4, 5, 6, 7, 8};
  const std::vector<std::size_t> one_to_eight{1, 2, 3, 4, 5, 6, 7, 8};
  constexpr std::uint64_t kBalanced3to8 = 10 + 35 + 126 + 462 + 1716 + 6435;

  criterion("AC1", "golden index values", ms(1), [](Criterion& c) {
    c.require(index(State{2, 2, 0, 0}) == 6, "index(2,2,0,0) != 6");
    c.require(index(State{0, 3, 0, 1}) == 6, "index(0,3,0,1) != 6");
    c.require(index(State{1, 1, 1, 1}) == 0, "index(1,1,1,1) != 0");
  });

  criterion("AC2", "golden dynamics", ms(1), [](Criterion& c) {
    c.require(step(State{2, 2, 0, 0}) == State{1, 1, 1, 1}, "step(2,2,0,0)");
    const State shared = share_one(State{2, 2, 0, 0}, 0);
    c.require(shared == State{0, 3, 0, 1}, "child 1 shares from (2,2,0,0)");
    c.require(share_one(shared, 1) == State{1, 1, 1, 1}, "child 2 shares from (0,3,0,1)");
    for (std::size_t n = 5; n <= 10; ++n) {
      const State w = wave(n, 0);
      c.require(step(w) == wave(n, 1), "f(W) for n=" + std::to_string(n));
      c.require(step(step(w)) == wave(n, 2), "f^2(W) for n=" + std::to_string(n));
    }
  });

  criterion("AC3", "tau golden values", ms(1), [](Criterion& c) {
    for (std::size_t n = 1; n <= 64; ++n) {
      c.require(tau(equitable(n)) == 0, "tau(I^" + std::to_string(n) + ") != 0");
    }
    for (std::size_t n = 3; n <= 12; ++n) {
      const std::size_t want = n % 2 == 0 ? n / 2 : 0;
      c.require(tau(monopoly(n)) == want, "tau(monopoly " + std::to_string(n) + ")");
    }
  });

  criterion("AC4", "invariance suite, all balanced states n=3..8", ms(30'000),
            [&](Criterion& c) {
              VerifyOptions options;
              options.jobs = 1;
              options.abelian_orders = 3;
              for (Theorem t : {Theorem::TauInvariance, Theorem::IndexMonotonicity,
                                Theorem::Abelian}) {
                require_clean(c, verify(t, three_to_eight, options), kBalanced3to8);
              }
            });

  criterion("AC5", "taxonomy completeness and soundness, n<=8", ms(0), [&](Criterion& c) {
    require_clean(c, verify(Theorem::Taxonomy, one_to_eight),
                  kBalanced3to8 + 1 + 3);
  });

  criterion("AC6", "tau prediction matches simulation, n<=8 and 10,000 at n=12",
            ms(120'000), [&](Criterion& c) {
              require_clean(c, verify(Theorem::Prediction, one_to_eight),
                            kBalanced3to8 + 1 + 3);
              VerifyOptions sample;
              sample.sample = 10'000;
              const std::vector<std::size_t> twelve{12};
              require_clean(c, verify(Theorem::Prediction, twelve, sample), 10'000);
            });

  criterion("AC7", "symmetric states, n=3..9", ms(0), [](Criterion& c) {
    const std::vector<std::size_t> ns{3, 4, 5, 6, 7, 8, 9};
    const auto r = verify(Theorem::Symmetric, ns);
    require_clean(c, r);
    c.require(r.states_checked > 0, "no symmetric states checked");
    // Even rings must actually reach both outcomes.
    for (std::size_t n : {4u, 6u, 8u}) {
      std::set<PeriodicClass::Kind> kinds;
      for (State s : StateSpace(n, n)) {
        if (is_symmetric(s)) kinds.insert(predict_symmetric(s).predicted.kind);
      }
      c.require(kinds == std::set<PeriodicClass::Kind>{PeriodicClass::Kind::Equitable,
                                                       PeriodicClass::Kind::Equivocal},
                "n=" + std::to_string(n) + " symmetric outcomes not {equitable, equivocal}");
    }
  });

  criterion("AC8", "monopoly corollary", ms(5'000), [](Criterion& c) {
    for (std::size_t n = 3; n <= 12; ++n) {
      const Trajectory t = detect_cycle(monopoly(n));
      if (n % 2 == 1) {
        c.require(t.cycle == std::vector<State>{equitable(n)},
                  "n=" + std::to_string(n) + " does not end in I^n");
      } else {
        const std::set<State> want{concat(std::vector<Block>(n / 2, Block::P)),
                                   concat(std::vector<Block>(n / 2, Block::PBar))};
        const std::set<State> got(t.cycle.begin(), t.cycle.end());
        c.require(t.period == 2 && got == want,
                  "n=" + std::to_string(n) + " does not end in the P/PBar 2-cycle");
      }
    }
    const std::vector<std::size_t> ns{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    require_clean(c, verify(Theorem::Monopoly, ns), 10);
  });

  criterion("AC9", "verify JSON identical for --jobs 1 and --jobs 8", ms(0),
            [&](Criterion& c) {
              if (argc < 2) {
                c.require(false, "path to the candy binary not given");
                return;
              }
              const std::string base = std::string("'") + argv[1] +
                                       "' verify --theorem prediction --n 3..8 "
                                       "--format json --jobs ";
              int s1 = 0, s8 = 0;
              const std::string a = capture(base + "1", &s1);
              const std::string b = capture(base + "8", &s8);
              c.require(s1 == 0 && s8 == 0, "verify exited nonzero");
              c.require(!a.empty(), "empty report");
              c.require(a == b, "reports differ");
            });

  std::cout << (failed == 0 ? "all acceptance criteria passed"
                            : std::to_string(failed) + " acceptance criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
