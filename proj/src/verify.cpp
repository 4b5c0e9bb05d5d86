#include "candy/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <thread>

#include "candy/classify.hpp"
#include "candy/error.hpp"

namespace candy {

namespace {

constexpr std::array kTheorems{
    Theorem::IndexMonotonicity, Theorem::TauInvariance, Theorem::Abelian,
    Theorem::Taxonomy,          Theorem::Prediction,    Theorem::Symmetric,
    Theorem::Monopoly,
};

using Failures = std::vector<Failure>;

void expect(Failures& out, const State& s, bool ok, std::string expected,
            std::string observed) {
  if (!ok) out.push_back({s, std::move(expected), std::move(observed)});
}

std::string num(std::uint64_t v) { return std::to_string(v); }

void check_index(const State& s, Failures& out) {
  const std::uint64_t before = index(s);
  const State next = step(s);
  const std::uint64_t after = index(next);
  expect(out, s, after <= before, "index(step) <= " + num(before),
         "index(step) = " + num(after));
  if (s.max() >= 3) {
    expect(out, s, after < before, "index(step) < " + num(before),
           "index(step) = " + num(after));
  }
  if (after == before && next != s) {
    expect(out, s, s.max() == 2, "max = 2 when index is unchanged",
           "max = " + num(s.max()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 2) continue;
    const std::uint64_t shared = index(share_one(s, i));
    const std::string who = "share_one(child " + num(i + 1) + ")";
    expect(out, s, shared <= before, "index(" + who + ") <= " + num(before),
           "index(" + who + ") = " + num(shared));
    expect(out, s, (shared == before) == (s[i] == 2),
           s[i] == 2 ? "index(" + who + ") = " + num(before)
                     : "index(" + who + ") < " + num(before),
           "index(" + who + ") = " + num(shared));
  }
}

void check_tau(const State& s, Failures& out) {
  const std::size_t t = tau(s);
  const State next = step(s);
  expect(out, s, next.total() == s.total(), "total " + num(s.total()),
         "total(step) = " + num(next.total()));
  expect(out, s, tau(next) == t, "tau(step) = " + num(t),
         "tau(step) = " + num(tau(next)));
  for (std::size_t k = 1; k < s.size(); ++k) {
    const std::size_t r = tau(rotate(s, static_cast<std::int64_t>(k)));
    expect(out, s, r == t, "tau(rotate " + num(k) + ") = " + num(t),
           "tau(rotate " + num(k) + ") = " + num(r));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 2) continue;
    const std::size_t r = tau(share_one(s, i));
    expect(out, s, r == t, "tau(share_one child " + num(i + 1) + ") = " + num(t),
           "tau(share_one child " + num(i + 1) + ") = " + num(r));
  }
}

std::uint64_t state_seed(std::uint64_t base, const State& s) {
  std::seed_seq seq{static_cast<std::uint32_t>(base),
                    static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(StateHash{}(s)),
                    static_cast<std::uint32_t>(StateHash{}(s) >> 32)};
  std::array<std::uint64_t, 1> out{};
  seq.generate(out.begin(), out.end());
  return out[0];
}

void check_abelian(const State& s, const VerifyOptions& options,
                   Failures& out) {
  const State expected = step(s);
  std::vector<std::size_t> sharers;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= 2) sharers.push_back(i);
  }
  std::mt19937_64 rng(state_seed(options.seed, s));
  for (std::size_t r = 0; r < options.abelian_orders; ++r) {
    std::shuffle(sharers.begin(), sharers.end(), rng);
    State cur = s;
    for (std::size_t i : sharers) cur = share_one(cur, i);
    std::string order;
    for (std::size_t i : sharers) {
      if (!order.empty()) order += ' ';
      order += num(i + 1);
    }
    expect(out, s, cur == expected, "step = " + expected.to_string(),
           "sharing in order [" + order + "] = " + cur.to_string());
  }
  for (std::size_t k = 1; k < s.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const State a = step(rotate(s, kk));
    const State b = rotate(expected, kk);
    expect(out, s, a == b, "step(rotate " + num(k) + ") = " + b.to_string(),
           a.to_string());
  }
  const State a = step(reflect(s));
  const State b = reflect(expected);
  expect(out, s, a == b, "step(reflect) = " + b.to_string(), a.to_string());
}

void check_taxonomy(const State& s, const VerifyOptions& options,
                    Failures& out) {
  const Trajectory traj = detect_cycle(s, {options.max_steps, false});
  const bool periodic = traj.transient_length == 0;
  bool classified = true;
  try {
    classify_periodic(s);
  } catch (const NotPeriodic&) {
    classified = false;
  }
  expect(out, s, classified == periodic,
         periodic ? "classifies (periodic)" : "NotPeriodic (transient)",
         classified ? "classifies" : "NotPeriodic");

  const std::size_t p = traj.period;
  const std::uint64_t cycle_index = index(traj.cycle.front());
  const PeriodicClass head = classify_periodic(traj.cycle.front());
  for (std::size_t i = 0; i < p; ++i) {
    const State& c = traj.cycle[i];
    const State& next = traj.cycle[(i + 1) % p];
    expect(out, s, step(c) == next, "step(cycle) = " + next.to_string(),
           step(c).to_string());
    expect(out, s, c.max() <= 2, "cycle max <= 2",
           c.to_string() + " has max " + num(c.max()));
    expect(out, s, index(c) == cycle_index,
           "cycle index " + num(cycle_index),
           c.to_string() + " has index " + num(index(c)));
    PeriodicClass cls;
    try {
      cls = classify_periodic(c);
    } catch (const NotPeriodic& e) {
      expect(out, s, false, "cycle state classifies", e.what());
      continue;
    }
    expect(out, s, cls == head, to_string(head),
           c.to_string() + " is " + to_string(cls));
  }
  if (head.has_p_count()) {
    expect(out, s, s.size() % p == 0, "period divides " + num(s.size()),
           "period " + num(p));
  }
}

void check_prediction(const State& s, const VerifyOptions& options,
                      Failures& out) {
  const OutcomeReport predicted = predict_outcome(s);
  const Trajectory traj = detect_cycle(s, {options.max_steps, false});
  const PeriodicClass observed = classify_periodic(traj.cycle.front());
  expect(out, s, observed == predicted.predicted, to_string(predicted.predicted),
         to_string(observed));
  const std::size_t t = tau(traj.cycle.front());
  expect(out, s, t == predicted.tau, "tau(cycle) = " + num(predicted.tau),
         "tau(cycle) = " + num(t));
}

void check_symmetric(const State& s, const VerifyOptions& options,
                     Failures& out) {
  OutcomeReport report;
  try {
    report = predict_symmetric(s);
  } catch (const TheoremViolation& e) {
    expect(out, s, false, "tau in {0, n/2}", e.what());
    return;
  }
  if (s.size() % 2 == 1) {
    expect(out, s, report.predicted == PeriodicClass::equitable(), "equitable",
           to_string(report.predicted));
  }
  const Trajectory traj = detect_cycle(s, {options.max_steps, false});
  const PeriodicClass observed = classify_periodic(traj.cycle.front());
  expect(out, s, observed == report.predicted, to_string(report.predicted),
         to_string(observed));
}

void check_monopoly(const State& s, const VerifyOptions& options,
                    Failures& out) {
  const std::size_t n = s.size();
  const Trajectory traj = detect_cycle(s, {options.max_steps, false});
  std::string observed;
  for (const State& c : traj.cycle) {
    observed += observed.empty() ? "{" : " ";
    observed += c.to_string();
  }
  observed += "}";
  if (n % 2 == 1) {
    const State fixed = equitable(n);
    expect(out, s, traj.cycle == std::vector<State>{fixed},
           "{" + fixed.to_string() + "}", observed);
    return;
  }
  const std::vector<Block> p(n / 2, Block::P);
  const std::vector<Block> pbar(n / 2, Block::PBar);
  const std::set<State> want{concat(p), concat(pbar)};
  const std::set<State> got(traj.cycle.begin(), traj.cycle.end());
  expect(out, s, traj.period == 2 && got == want,
         "{" + concat(p).to_string() + " " + concat(pbar).to_string() + "}",
         observed);
}

std::vector<State> sample_states(std::size_t n, const VerifyOptions& options) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  std::vector<State> out;
  out.reserve(options.sample);
  for (std::uint64_t i = 0; i < options.sample; ++i) {
    out.push_back(random_state(n, n, rng));
  }
  return out;
}

// Checks a batch of chunks on up to `jobs` threads; results land in chunk
// order regardless of scheduling.
Failures check_batch(Theorem theorem, const std::vector<std::vector<State>>& chunks,
                     const VerifyOptions& options) {
  std::vector<Failures> results(chunks.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, chunks.size()));
  auto work = [&](std::size_t w) {
    for (std::size_t c = w; c < chunks.size(); c += workers) {
      for (const State& s : chunks[c]) {
        auto found = check_state(theorem, s, options);
        results[c].insert(results[c].end(),
                          std::make_move_iterator(found.begin()),
                          std::make_move_iterator(found.end()));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  Failures merged;
  for (auto& r : results) {
    merged.insert(merged.end(), std::make_move_iterator(r.begin()),
                  std::make_move_iterator(r.end()));
  }
  return merged;
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::IndexMonotonicity:
      return "index-monotonicity";
    case Theorem::TauInvariance:
      return "tau-invariance";
    case Theorem::Abelian:
      return "abelian";
    case Theorem::Taxonomy:
      return "taxonomy";
    case Theorem::Prediction:
      return "prediction";
    case Theorem::Symmetric:
      return "symmetric";
    case Theorem::Monopoly:
      return "monopoly";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : kTheorems) {
    if (theorem_name(t) == name) return t;
  }
  throw ParseError("unknown theorem id '" + std::string(name) + "'");
}

std::span<const Theorem> all_theorems() { return kTheorems; }

std::vector<Failure> check_state(Theorem theorem, const State& s,
                                 const VerifyOptions& options) {
  Failures out;
  try {
    switch (theorem) {
      case Theorem::IndexMonotonicity:
        check_index(s, out);
        break;
      case Theorem::TauInvariance:
        check_tau(s, out);
        break;
      case Theorem::Abelian:
        check_abelian(s, options, out);
        break;
      case Theorem::Taxonomy:
        check_taxonomy(s, options, out);
        break;
      case Theorem::Prediction:
        check_prediction(s, options, out);
        break;
      case Theorem::Symmetric:
        check_symmetric(s, options, out);
        break;
      case Theorem::Monopoly:
        check_monopoly(s, options, out);
        break;
    }
  } catch (const std::exception& e) {
    out.push_back({s, "no error", std::string("error: ") + e.what()});
  }
  return out;
}

VerificationReport verify(Theorem theorem, std::span<const std::size_t> ns,
                          const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = theorem;
  report.n.assign(ns.begin(), ns.end());

  // Fail before doing any work if some size is over budget.
  if (theorem != Theorem::Monopoly && options.sample == 0) {
    for (std::size_t n : ns) StateSpace(n, n, Dedup::All, options.budget);
  }

  const std::size_t chunk_size = std::max<std::size_t>(1, options.chunk_size);
  const std::size_t batch_chunks =
      static_cast<std::size_t>(std::max(1u, options.jobs)) * 4;

  for (std::size_t n : ns) {
    SizeSummary summary{n, 0, 0};
    std::vector<std::vector<State>> batch;
    auto flush = [&] {
      auto found = check_batch(theorem, batch, options);
      summary.failures += found.size();
      report.failures.insert(report.failures.end(),
                             std::make_move_iterator(found.begin()),
                             std::make_move_iterator(found.end()));
      batch.clear();
    };
    auto push = [&](State s) {
      if (theorem == Theorem::Symmetric && !is_symmetric(s)) return;
      if (batch.empty() || batch.back().size() == chunk_size) {
        if (batch.size() == batch_chunks) flush();
        batch.emplace_back();
        batch.back().reserve(chunk_size);
      }
      batch.back().push_back(std::move(s));
      ++summary.states_checked;
    };

    if (theorem == Theorem::Monopoly) {
      push(monopoly(n));
    } else if (options.sample > 0) {
      for (State& s : sample_states(n, options)) push(std::move(s));
    } else {
      for (State s : StateSpace(n, n, Dedup::All, options.budget)) {
        push(std::move(s));
      }
    }
    if (!batch.empty()) flush();
    report.states_checked += summary.states_checked;
    report.per_n.push_back(summary);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace candy
