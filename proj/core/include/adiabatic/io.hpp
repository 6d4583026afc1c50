// CSV and JSON serialization of traces and reports.
//
// CSV: comma separated, '.' decimal point, 17 significant digits, optional
// '#'-prefixed comment lines before the header row.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adiabatic/evolution.hpp"
#include "adiabatic/experiments.hpp"
#include "adiabatic/spectrum.hpp"

namespace adiabatic {

using Comments = std::vector<std::string>;

/// Shortest-unambiguous is not used on purpose: always 17 significant digits.
std::string format_double(double value);

void write_comments(std::ostream& os, const Comments& comments);

/// Header `s,E0,E1,E2,gap`. E2 is left empty when the level does not exist (N = 2).
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumPoint>& points, const Comments& comments = {});
/// Header `t,s,rate`.
void write_schedule_csv(std::ostream& os, const std::vector<ScheduleKnot>& samples, const Comments& comments = {});
/// Header `t,s,ground_fidelity,gap,adiabaticity_ratio,norm_error`.
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& trajectory,
                          const Comments& comments = {});
/// Header `N,T_min`.
void write_scaling_csv(std::ostream& os, const ScalingReport& report, const Comments& comments = {});
/// One header row and one data row with the scalar fields of the report.
void write_optimality_csv(std::ostream& os, const OptimalityReport& report, const Comments& comments = {});

nlohmann::json to_json(const ScalingReport& report);
nlohmann::json to_json(const OptimalityReport& report);
/// Scalar summary; the trajectory goes to CSV.
nlohmann::json summary_json(const EvolutionResult& result);

}  // namespace adiabatic
