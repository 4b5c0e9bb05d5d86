#pragma once

#include <iosfwd>
#include <json.hpp>

#include "candy/classify.hpp"
#include "candy/dynamics.hpp"
#include "candy/state.hpp"
#include "candy/verify.hpp"

// JSON shapes used by the CLI. States are arrays of integers.
//
//   Trajectory          {"initial", "transient_length", "period", "cycle"}
//   PeriodicClass       {"class", "p_count"?}
//   OutcomeReport       {"tau", "predicted"}
//   VerificationReport  {"theorem", "n", "states_checked", "failures",
//                        "per_n", "elapsed_ms"?}

// State has no default constructor, so it gets a dedicated serializer.
template <>
struct nlohmann::adl_serializer<candy::State> {
  static candy::State from_json(const nlohmann::json& j);
  static void to_json(nlohmann::json& j, const candy::State& s);
};

namespace candy {

using nlohmann::json;

void to_json(json& j, const PeriodicClass& c);
void from_json(const json& j, PeriodicClass& c);

void to_json(json& j, const OutcomeReport& r);
void from_json(const json& j, OutcomeReport& r);

void to_json(json& j, const Trajectory& t);
Trajectory trajectory_from_json(const json& j);

void to_json(json& j, const Failure& f);

// elapsed_ms is only written when include_timing is set, so reports of
// identical runs serialize identically.
json report_to_json(const VerificationReport& r, bool include_timing = false);

// Header "theorem,n,states_checked,failures" then one row per ring size.
void write_csv(std::ostream& out, const VerificationReport& r);

}  // namespace candy
