#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include "candy/classify.hpp"
#include "candy/dynamics.hpp"
#include "candy/enumerate.hpp"
#include "candy/error.hpp"
#include "candy/render.hpp"
#include "candy/serialize.hpp"
#include "candy/state.hpp"
#include "candy/verify.hpp"

namespace candy::cli {

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string state_text;
  std::size_t child = 0;  // 1-based; 0 means "not given"
  std::size_t n = 0;
  std::uint64_t m = 0;
  bool m_given = false;
  std::string sizes;
  std::string theorem;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t width = 0;
  Format format = Format::Text;
  bool render = false;
  bool unique = false;
  bool count_only = false;
  bool timing = false;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t sample = 0;
  std::uint64_t seed = VerifyOptions{}.seed;
};

std::size_t parse_size(std::string_view token) {
  std::size_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("bad ring size '" + std::string(token) + "'");
  }
  return v;
}

void print_json(std::ostream& out, json j) {
  json wrapped{{"schema", 1}};
  wrapped.update(j);
  out << wrapped.dump() << '\n';
}

std::string join(const std::vector<State>& states, std::string_view sep) {
  std::string out;
  for (const State& s : states) {
    if (!out.empty()) out += sep;
    out += s.to_string();
  }
  return out;
}

void text_outcome(std::ostream& out, const OutcomeReport& r) {
  out << "tau: " << r.tau << '\n'
      << "class: " << kind_name(r.predicted.kind) << '\n';
  if (r.predicted.has_p_count()) out << "p_count: " << r.predicted.p_count << '\n';
}

std::string sizes_label(const std::vector<std::size_t>& ns) {
  std::string out;
  for (std::size_t n : ns) {
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  return out;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const State s = parse_state(cfg.state_text);
  const Trajectory t = detect_cycle(s, {cfg.max_steps, cfg.render});
  if (cfg.format == Format::Json) {
    json j = t;
    if (cfg.render) j["visited"] = *t.visited;
    print_json(out, j);
    return kOk;
  }
  out << "initial: " << s.to_string() << '\n'
      << "transient_length: " << t.transient_length << '\n'
      << "period: " << t.period << '\n'
      << "cycle: " << join(t.cycle, " -> ") << '\n';
  if (cfg.render) out << '\n' << render_trajectory(t, cfg.width);
  return kOk;
}

int cmd_step(const RunConfig& cfg, std::ostream& out) {
  const State s = parse_state(cfg.state_text);
  const State next = cfg.child == 0 ? step(s) : share_one(s, cfg.child - 1);
  if (cfg.format == Format::Json) {
    print_json(out, {{"state", next}});
  } else {
    out << next.to_string() << '\n';
  }
  return kOk;
}

int cmd_scalar(const RunConfig& cfg, std::ostream& out, std::string_view key,
               const std::function<std::uint64_t(const State&)>& fn) {
  const State s = parse_state(cfg.state_text);
  const std::uint64_t v = fn(s);
  if (cfg.format == Format::Json) {
    print_json(out, {{"state", s}, {std::string(key), v}});
  } else {
    out << v << '\n';
  }
  return kOk;
}

int cmd_predict(const RunConfig& cfg, std::ostream& out) {
  const OutcomeReport r = predict_outcome(parse_state(cfg.state_text));
  if (cfg.format == Format::Json) {
    print_json(out, r);
  } else {
    text_outcome(out, r);
  }
  return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const PeriodicClass c = classify_periodic(parse_state(cfg.state_text));
  if (cfg.format == Format::Json) {
    print_json(out, c);
  } else {
    out << kind_name(c.kind);
    if (c.has_p_count()) out << " p_count=" << c.p_count;
    out << '\n';
  }
  return kOk;
}

int cmd_symmetric(const RunConfig& cfg, std::ostream& out) {
  const State s = parse_state(cfg.state_text);
  const bool sym = is_symmetric(s);
  std::optional<OutcomeReport> report;
  if (sym && s.balanced()) report = predict_symmetric(s);
  if (cfg.format == Format::Json) {
    json j{{"symmetric", sym}};
    if (report) j["prediction"] = *report;
    print_json(out, j);
    return kOk;
  }
  out << "symmetric: " << (sym ? "yes" : "no") << '\n';
  if (report) text_outcome(out, *report);
  return kOk;
}

int cmd_monopoly(const RunConfig& cfg, std::ostream& out) {
  const State s = monopoly(cfg.n);
  if (cfg.format == Format::Json) {
    print_json(out, {{"state", s}});
  } else {
    out << s.to_string() << '\n';
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t m = cfg.m_given ? cfg.m : cfg.n;
  const StateSpace space(cfg.n, m,
                         cfg.unique ? Dedup::UniqueUpToRotation : Dedup::All,
                         cfg.budget);
  const bool json_out = cfg.format == Format::Json;
  std::uint64_t count = 0;
  json states = json::array();
  for (State s : space) {
    ++count;
    if (cfg.count_only) continue;
    if (json_out) {
      states.push_back(s);
    } else {
      out << s.to_string() << '\n';
    }
  }
  if (json_out) {
    json j{{"n", cfg.n}, {"m", m}, {"unique", cfg.unique}, {"count", count}};
    if (!cfg.count_only) j["states"] = std::move(states);
    print_json(out, j);
  } else if (cfg.count_only) {
    out << count << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Theorem theorem = parse_theorem(cfg.theorem);
  const std::vector<std::size_t> ns = parse_sizes(cfg.sizes);
  VerifyOptions options;
  options.jobs = cfg.jobs;
  options.budget = cfg.budget;
  options.sample = cfg.sample;
  options.seed = cfg.seed;
  options.max_steps = cfg.max_steps;
  const VerificationReport r = verify(theorem, ns, options);

  switch (cfg.format) {
    case Format::Json:
      out << report_to_json(r, cfg.timing).dump() << '\n';
      break;
    case Format::Csv:
      write_csv(out, r);
      break;
    case Format::Text: {
      out << "theorem: " << theorem_name(r.theorem) << '\n'
          << "n: " << sizes_label(r.n) << '\n';
      for (const SizeSummary& s : r.per_n) {
        out << "  n=" << s.n << ": " << s.states_checked << " checked, "
            << s.failures << " failed\n";
      }
      out << "states_checked: " << r.states_checked << '\n'
          << "failures: " << r.failures.size() << '\n';
      constexpr std::size_t kShown = 20;
      for (std::size_t i = 0; i < std::min(kShown, r.failures.size()); ++i) {
        const Failure& f = r.failures[i];
        out << "  " << f.state.to_string() << ": expected " << f.expected
            << ", observed " << f.observed << '\n';
      }
      if (cfg.timing) out << "elapsed_ms: " << r.elapsed.count() << '\n';
      out << (r.ok() ? "PASS" : "FAIL") << '\n';
      break;
    }
  }
  return r.ok() ? kOk : kClaimFailed;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  const Trajectory t =
      detect_cycle(parse_state(cfg.state_text), {cfg.max_steps, true});
  out << render_trajectory(t, cfg.width);
  return kOk;
}

}  // namespace

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_size(item));
    } else {
      const std::size_t lo = parse_size(item.substr(0, dots));
      const std::size_t hi = parse_size(item.substr(dots + 2));
      if (lo > hi) throw ParseError("empty range '" + std::string(item) + "'");
      for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  for (std::size_t n : out) {
    if (n == 0) throw ParseError("ring size must be at least 1");
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Balanced candy-sharing game on a ring", "candy"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> text_json{{"text", Format::Text},
                                                {"json", Format::Json}};
  const std::map<std::string, Format> all_formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state_text,
                    "Comma-separated candy counts, e.g. 0,2,1,1")
        ->required();
  };
  auto add_format = [&](CLI::App* sub, const std::map<std::string, Format>& m) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(m, CLI::ignore_case));
  };

  std::function<int(const RunConfig&, std::ostream&)> handler;
  auto bind = [&](CLI::App* sub, auto fn) {
    sub->callback([&handler, fn] { handler = fn; });
  };

  auto* simulate = app.add_subcommand("simulate", "Run to the eventual cycle");
  add_state(simulate);
  simulate->add_option("--max-steps", cfg.max_steps)->check(CLI::PositiveNumber);
  simulate->add_flag("--render", cfg.render, "Show every visited state");
  simulate->add_option("--width", cfg.width, "Rendered line width (0: no limit)");
  add_format(simulate, text_json);
  bind(simulate, cmd_simulate);

  auto* step_cmd = app.add_subcommand("step", "Apply one sharing round");
  add_state(step_cmd);
  step_cmd->add_option("--child", cfg.child, "Only this child (1-based) shares")
      ->check(CLI::PositiveNumber);
  add_format(step_cmd, text_json);
  bind(step_cmd, cmd_step);

  auto* index_cmd = app.add_subcommand("index", "Sum of substring deficiencies");
  add_state(index_cmd);
  add_format(index_cmd, text_json);
  bind(index_cmd, [](const RunConfig& c, std::ostream& o) {
    return cmd_scalar(c, o, "index", [](const State& s) { return index(s); });
  });

  auto* tau_cmd = app.add_subcommand("tau", "The conserved residue tau");
  add_state(tau_cmd);
  add_format(tau_cmd, text_json);
  bind(tau_cmd, [](const RunConfig& c, std::ostream& o) {
    return cmd_scalar(c, o, "tau", [](const State& s) { return tau(s); });
  });

  auto* predict = app.add_subcommand("predict", "Predict the long-run class");
  add_state(predict);
  add_format(predict, text_json);
  bind(predict, cmd_predict);

  auto* classify = app.add_subcommand("classify", "Classify a periodic state");
  add_state(classify);
  add_format(classify, text_json);
  bind(classify, cmd_classify);

  auto* symmetric = app.add_subcommand("symmetric", "Mirror symmetry test");
  add_state(symmetric);
  add_format(symmetric, text_json);
  bind(symmetric, cmd_symmetric);

  auto* mono = app.add_subcommand("monopoly", "The state (n,0,...,0)");
  mono->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  add_format(mono, text_json);
  bind(mono, cmd_monopoly);

  auto* enumerate = app.add_subcommand("enumerate", "List states of a ring");
  enumerate->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--m", cfg.m, "Total candies (default n)")
      ->each([&cfg](const std::string&) { cfg.m_given = true; });
  enumerate->add_flag("--unique", cfg.unique, "One state per rotation class");
  enumerate->add_flag("--count-only", cfg.count_only);
  enumerate->add_option("--budget", cfg.budget, "Maximum states to enumerate");
  add_format(enumerate, text_json);
  bind(enumerate, cmd_enumerate);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a claim");
  std::vector<std::string> ids;
  for (Theorem t : all_theorems()) ids.emplace_back(theorem_name(t));
  verify_cmd->add_option("--theorem", cfg.theorem)
      ->required()
      ->check(CLI::IsMember(ids));
  verify_cmd->add_option("--n", cfg.sizes, "Ring sizes: a..b or a,b,c")
      ->required();
  verify_cmd->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", cfg.budget,
                         "Maximum states per ring size (default 1e7)");
  verify_cmd->add_option("--sample", cfg.sample,
                         "Check this many random states per size instead");
  verify_cmd->add_option("--seed", cfg.seed);
  verify_cmd->add_option("--max-steps", cfg.max_steps)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", cfg.timing, "Report elapsed time");
  add_format(verify_cmd, all_formats);
  bind(verify_cmd, cmd_verify);

  auto* render = app.add_subcommand("render", "Draw a trajectory as text");
  add_state(render);
  render->add_option("--max-steps", cfg.max_steps)->check(CLI::PositiveNumber);
  render->add_option("--width", cfg.width);
  bind(render, cmd_render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return handler(cfg, out);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kClaimFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace candy::cli
