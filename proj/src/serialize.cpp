#include "candy/serialize.hpp"

#include <ostream>

#include "candy/error.hpp"

candy::State nlohmann::adl_serializer<candy::State>::from_json(
    const nlohmann::json& j) {
  return candy::State(j.get<std::vector<candy::Count>>());
}

void nlohmann::adl_serializer<candy::State>::to_json(nlohmann::json& j,
                                                     const candy::State& s) {
  j = nlohmann::json(
      std::vector<candy::Count>(s.counts().begin(), s.counts().end()));
}

namespace candy {

void to_json(json& j, const PeriodicClass& c) {
  j = json{{"class", kind_name(c.kind)}};
  if (c.has_p_count()) j["p_count"] = c.p_count;
}

void from_json(const json& j, PeriodicClass& c) {
  c.kind = parse_kind(j.at("class").get<std::string>());
  c.p_count = j.contains("p_count") ? j.at("p_count").get<std::size_t>() : 0;
}

void to_json(json& j, const OutcomeReport& r) {
  j = json{{"tau", r.tau}, {"predicted", r.predicted}};
}

void from_json(const json& j, OutcomeReport& r) {
  r.tau = j.at("tau").get<std::size_t>();
  r.predicted = j.at("predicted").get<PeriodicClass>();
}

void to_json(json& j, const Trajectory& t) {
  j = json{{"initial", t.initial},
           {"transient_length", t.transient_length},
           {"period", t.period},
           {"cycle", t.cycle}};
}

Trajectory trajectory_from_json(const json& j) {
  Trajectory t{j.at("initial").get<State>(),
               j.at("transient_length").get<std::size_t>(),
               j.at("period").get<std::size_t>(),
               j.at("cycle").get<std::vector<State>>(),
               std::nullopt};
  return t;
}

void to_json(json& j, const Failure& f) {
  j = json{{"state", f.state}, {"expected", f.expected}, {"observed", f.observed}};
}

json report_to_json(const VerificationReport& r, bool include_timing) {
  json per_n = json::array();
  for (const SizeSummary& s : r.per_n) {
    per_n.push_back(
        {{"n", s.n}, {"states_checked", s.states_checked}, {"failures", s.failures}});
  }
  json j{{"schema", 1},
         {"theorem", theorem_name(r.theorem)},
         {"n", r.n},
         {"states_checked", r.states_checked},
         {"failures", r.failures},
         {"per_n", per_n}};
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

void write_csv(std::ostream& out, const VerificationReport& r) {
  out << "theorem,n,states_checked,failures\n";
  for (const SizeSummary& s : r.per_n) {
    out << theorem_name(r.theorem) << ',' << s.n << ',' << s.states_checked
        << ',' << s.failures << '\n';
  }
}

}  // namespace candy
