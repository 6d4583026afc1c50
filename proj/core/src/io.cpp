#include "adiabatic/io.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace adiabatic {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("failed to format floating-point value");
    return {buf.data(), end};
}

void write_comments(std::ostream& os, const Comments& comments) {
    for (const auto& line : comments) os << "# " << line << '\n';
}

namespace {

template <class... Values>
void row(std::ostream& os, const Values&... values) {
    bool first = true;
    auto emit = [&](const auto& v) {
        if (!first) os << ',';
        first = false;
        if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
            os << format_double(v);
        } else {
            os << v;
        }
    };
    (emit(values), ...);
    os << '\n';
}

}  // namespace

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumPoint>& points, const Comments& comments) {
    write_comments(os, comments);
    os << "s,E0,E1,E2,gap\n";
    for (const auto& p : points) {
        const std::string e2 = p.e2_multiplicity > 0 ? format_double(p.E2) : std::string{};
        row(os, p.s, p.E0, p.E1, e2, p.gap);
    }
}

void write_schedule_csv(std::ostream& os, const std::vector<ScheduleKnot>& samples, const Comments& comments) {
    write_comments(os, comments);
    os << "t,s,rate\n";
    for (const auto& k : samples) row(os, k.t, k.s, k.rate);
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& trajectory,
                          const Comments& comments) {
    write_comments(os, comments);
    os << "t,s,ground_fidelity,gap,adiabaticity_ratio,norm_error\n";
    for (const auto& p : trajectory) row(os, p.t, p.s, p.ground_fidelity, p.gap, p.adiabaticity_ratio, p.norm_error);
}

void write_scaling_csv(std::ostream& os, const ScalingReport& report, const Comments& comments) {
    write_comments(os, comments);
    os << "N,T_min\n";
    for (const auto& p : report.points) row(os, p.dimension, p.minimal_time);
}

void write_optimality_csv(std::ostream& os, const OptimalityReport& r, const Comments& comments) {
    write_comments(os, comments);
    os << "N,total_time,D_final,s_integral,bound,margin,min_pairwise_distinguishability,eps_dist,lower_bound_time\n";
    row(os, r.dimension, r.total_time, r.distinguishability_sum, r.s_integral, r.bound, r.margin,
        r.min_pairwise_distinguishability, r.eps_dist, r.lower_bound_time);
}

nlohmann::json to_json(const ScalingReport& report) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : report.points) points.push_back({{"N", p.dimension}, {"T_min", p.minimal_time}});
    return {
        {"family", to_string(report.family)},
        {"target_fidelity", report.target_fidelity},
        {"points", points},
        {"exponent", report.exponent},
        {"prefactor", report.prefactor},
        {"residual", report.residual},
    };
}

nlohmann::json to_json(const OptimalityReport& r) {
    return {
        {"N", r.dimension},
        {"schedule", r.schedule},
        {"total_time", r.total_time},
        {"schedule_eps", r.schedule_eps},
        {"eps_dist", r.eps_dist},
        {"D_final", r.distinguishability_sum},
        {"s_integral", r.s_integral},
        {"bound", r.bound},
        {"margin", r.margin},
        {"min_pairwise_distinguishability", r.min_pairwise_distinguishability},
        {"lower_bound_time", r.lower_bound_time},
        {"distinguishable", r.distinguishable},
        {"time_bound_consistent", r.time_bound_consistent},
        {"used_permutation_symmetry", r.used_permutation_symmetry},
        {"norm_drift_max", r.norm_drift_max},
    };
}

nlohmann::json summary_json(const EvolutionResult& result) {
    return {
        {"engine", to_string(result.engine)},
        {"total_time", result.total_time},
        {"success_probability", result.success_probability},
        {"ground_fidelity_final", result.ground_fidelity_final},
        {"norm_drift_max", result.norm_drift_max},
        {"leakage_max", result.leakage_max},
        {"drift_flagged", result.drift_flagged},
        {"steps", result.steps},
    };
}

}  // namespace adiabatic
