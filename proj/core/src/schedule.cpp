#include "adiabatic/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "adiabatic/spectrum.hpp"

namespace adiabatic {

namespace {

constexpr double kTimeSlack = 1e-12;

void check_dimension(std::uint64_t dimension) {
    if (dimension < 2) throw std::invalid_argument("N must be >= 2");
}

void check_epsilon(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

void check_duration(double total_time) {
    if (!(total_time > 0.0) || !std::isfinite(total_time)) {
        throw std::invalid_argument("total time must be positive and finite");
    }
}

// Closed forms without the eps < 1 restriction; stretched schedules use
// effective eps values above 1.
double time_of_s(double s, std::uint64_t dimension, double eps) {
    const double n = static_cast<double>(dimension);
    const double r = std::sqrt(n - 1.0);
    return n / (2.0 * eps * r) * (std::atan(r * (2.0 * s - 1.0)) + std::atan(r));
}

double s_of_time(double t, std::uint64_t dimension, double eps) {
    const double n = static_cast<double>(dimension);
    const double r = std::sqrt(n - 1.0);
    const double phase = 2.0 * eps * r / n * t - std::atan(r);
    return std::clamp(0.5 + std::tan(phase) / (2.0 * r), 0.0, 1.0);
}

double total_time_for(std::uint64_t dimension, double eps) {
    const double n = static_cast<double>(dimension);
    const double r = std::sqrt(n - 1.0);
    return n / (eps * r) * std::atan(r);
}

}  // namespace

std::string to_string(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::Linear: return "linear";
        case ScheduleKind::LocalAdiabatic: return "local";
        case ScheduleKind::Tabulated: return "tabulated";
    }
    return "unknown";
}

double Schedule::clamp_time(double t) const {
    const double slack = kTimeSlack * std::max(1.0, total_time_);
    if (!(t >= -slack && t <= total_time_ + slack)) {
        throw std::out_of_range("time outside schedule domain [0, T]");
    }
    return std::clamp(t, 0.0, total_time_);
}

double Schedule::s_at(double t) const {
    t = clamp_time(t);
    if (t == 0.0) return 0.0;
    if (t == total_time_) return 1.0;
    switch (kind_) {
        case ScheduleKind::Linear: return t / total_time_;
        case ScheduleKind::LocalAdiabatic: return s_of_time(t, dimension_, epsilon_);
        case ScheduleKind::Tabulated: return (*interpolant_)(t);
    }
    return 0.0;
}

double Schedule::rate(double t) const {
    t = clamp_time(t);
    switch (kind_) {
        case ScheduleKind::Linear: return 1.0 / total_time_;
        case ScheduleKind::LocalAdiabatic: {
            const double g = gap(s_at(t), dimension_);
            return epsilon_ * g * g;
        }
        case ScheduleKind::Tabulated: return interpolant_->derivative(t);
    }
    return 0.0;
}

Schedule Schedule::rescaled(double total_time) const {
    check_duration(total_time);
    switch (kind_) {
        case ScheduleKind::Linear: return linear_schedule(total_time);
        case ScheduleKind::LocalAdiabatic: return local_adiabatic_schedule_for_duration(dimension_, total_time);
        case ScheduleKind::Tabulated: {
            const double factor = total_time / total_time_;
            std::vector<ScheduleKnot> knots = knots_;
            for (auto& k : knots) {
                k.t *= factor;
                k.rate /= factor;
            }
            knots.back().t = total_time;
            return tabulated_schedule(std::move(knots), epsilon_ / factor);
        }
    }
    throw std::logic_error("unknown schedule kind");
}

double Schedule::integral_of_s() const {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [this](double t) { return s_at(t); };
    return gauss_kronrod<double, 31>::integrate(f, 0.0, total_time_, 20, 1e-12);
}

std::string Schedule::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << to_string(kind_) << "(T=" << total_time_;
    if (kind_ == ScheduleKind::LocalAdiabatic) os << ", N=" << dimension_ << ", eps=" << epsilon_;
    if (kind_ == ScheduleKind::Tabulated) os << ", knots=" << knots_.size() << ", eps=" << epsilon_;
    os << ")";
    return os.str();
}

Schedule linear_schedule(double total_time) {
    check_duration(total_time);
    Schedule s;
    s.kind_ = ScheduleKind::Linear;
    s.total_time_ = total_time;
    return s;
}

Schedule local_adiabatic_schedule(std::uint64_t dimension, double eps) {
    check_dimension(dimension);
    check_epsilon(eps);
    Schedule s;
    s.kind_ = ScheduleKind::LocalAdiabatic;
    s.dimension_ = dimension;
    s.epsilon_ = eps;
    s.total_time_ = total_time_for(dimension, eps);
    return s;
}

Schedule local_adiabatic_schedule_for_duration(std::uint64_t dimension, double total_time) {
    check_dimension(dimension);
    check_duration(total_time);
    Schedule s;
    s.kind_ = ScheduleKind::LocalAdiabatic;
    s.dimension_ = dimension;
    s.epsilon_ = total_time_for(dimension, 1.0) / total_time;
    s.total_time_ = total_time;
    return s;
}

Schedule tabulated_schedule(std::vector<ScheduleKnot> knots, double eps) {
    if (knots.size() < 2) throw std::invalid_argument("tabulated schedule needs at least two knots");
    if (knots.front().t != 0.0 || knots.front().s != 0.0 || knots.back().s != 1.0) {
        throw std::invalid_argument("tabulated schedule must run from (0, 0) to s = 1");
    }
    std::vector<double> t, s, d;
    t.reserve(knots.size());
    s.reserve(knots.size());
    d.reserve(knots.size());
    for (const auto& k : knots) {
        t.push_back(k.t);
        s.push_back(k.s);
        d.push_back(k.rate);
    }
    Schedule out;
    out.kind_ = ScheduleKind::Tabulated;
    out.total_time_ = knots.back().t;
    out.epsilon_ = eps;
    out.interpolant_ = std::make_shared<const MonotoneCubic>(std::move(t), std::move(s), std::move(d));
    // Store the limited slopes so knots and interpolant agree.
    const auto slopes = out.interpolant_->slopes();
    for (std::size_t i = 0; i < knots.size(); ++i) knots[i].rate = slopes[i];
    out.knots_ = std::move(knots);
    return out;
}

double global_adiabatic_time(std::uint64_t dimension, double eps) {
    check_dimension(dimension);
    check_epsilon(eps);
    return static_cast<double>(dimension) / eps;
}

double local_time_of_s(double s, std::uint64_t dimension, double eps) {
    check_dimension(dimension);
    check_epsilon(eps);
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in [0, 1]");
    if (s == 1.0) return total_time_for(dimension, eps);
    return time_of_s(s, dimension, eps);
}

double local_s_of_time(double t, std::uint64_t dimension, double eps) {
    check_dimension(dimension);
    check_epsilon(eps);
    const double total = total_time_for(dimension, eps);
    const double slack = kTimeSlack * std::max(1.0, total);
    if (!(t >= -slack && t <= total + slack)) throw std::out_of_range("t outside [0, T]");
    if (t <= 0.0) return 0.0;
    if (t >= total) return 1.0;
    return s_of_time(t, dimension, eps);
}

double local_total_time(std::uint64_t dimension, double eps) {
    check_dimension(dimension);
    check_epsilon(eps);
    return total_time_for(dimension, eps);
}

GapModel constant_gap_model(double value) {
    return GapModel{[value](double) { return value; }, 1.0, {}};
}

GapModel grover_gap_model(std::uint64_t dimension, CouplingMode mode) {
    check_dimension(dimension);
    GapModel model{[dimension](double s) { return gap(s, dimension); }, 1.0, {}};
    if (mode == CouplingMode::Exact) {
        model.coupling = [dimension](double s) { return coupling_matrix_element(s, dimension); };
    }
    return model;
}

Schedule schedule_from_gap(const GapModel& model, double eps, double tol, const SynthesisOptions& options) {
    namespace odeint = boost::numeric::odeint;
    if (!model.gap) throw std::invalid_argument("gap model has no evaluator");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!model.coupling && !(model.coupling_bound > 0.0)) {
        throw std::invalid_argument("coupling bound must be positive");
    }

    auto rate_at = [&](double s) {
        const double g = model.gap(s);
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw std::domain_error("gap model must be strictly positive on [0, 1]");
        }
        const double c = model.coupling ? model.coupling(s) : model.coupling_bound;
        if (!(c > 0.0)) throw std::domain_error("coupling must be strictly positive");
        return eps * g * g / c;
    };

    // ds/dt = f(s) is autonomous, so integrate t(s) with dt/ds = 1 / f(s).
    // This lands exactly on s = 1 without event location.
    auto rhs = [&](const double& /*t*/, double& dtds, double s) { dtds = 1.0 / rate_at(s); };

    std::vector<ScheduleKnot> knots;
    auto observer = [&](const double& t, double s) {
        if (knots.size() > options.max_steps) {
            throw std::runtime_error("schedule synthesis exceeded step cap (near-vanishing gap?)");
        }
        knots.push_back({t, s, rate_at(s)});
    };

    double t = 0.0;
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<double>());
    odeint::integrate_adaptive(stepper, rhs, t, 0.0, 1.0, 1e-3, observer);

    knots.front() = {0.0, 0.0, knots.front().rate};
    knots.back().s = 1.0;
    return tabulated_schedule(std::move(knots), eps);
}

}  // namespace adiabatic
