#include "adiabatic/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adiabatic {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    validate();
    const std::size_t n = x_.size();
    d_.assign(n, 0.0);
    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    d_.front() = secant.front();
    d_.back() = secant.back();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d_[i] = (secant[i - 1] * secant[i] <= 0.0) ? 0.0 : 0.5 * (secant[i - 1] + secant[i]);
    }
    limit_slopes();
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(slopes)) {
    validate();
    if (d_.size() != x_.size()) throw std::invalid_argument("slope count must match knot count");
    for (double& d : d_) d = std::max(d, 0.0);
    limit_slopes();
}

void MonotoneCubic::validate() const {
    if (x_.size() < 2 || x_.size() != y_.size()) {
        throw std::invalid_argument("need at least two knots with matching ordinates");
    }
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        if (!(x_[i + 1] > x_[i])) throw std::invalid_argument("knot abscissae must be strictly increasing");
        if (y_[i + 1] < y_[i]) throw std::invalid_argument("knot ordinates must be nondecreasing");
    }
}

void MonotoneCubic::limit_slopes() {
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        const double delta = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        if (delta == 0.0) {
            d_[i] = 0.0;
            d_[i + 1] = 0.0;
            continue;
        }
        const double alpha = d_[i] / delta;
        const double beta = d_[i + 1] / delta;
        const double r2 = alpha * alpha + beta * beta;
        if (r2 > 9.0) {
            const double tau = 3.0 / std::sqrt(r2);
            d_[i] = tau * alpha * delta;
            d_[i + 1] = tau * beta * delta;
        }
    }
}

std::size_t MonotoneCubic::interval(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const auto idx = static_cast<std::size_t>(std::distance(x_.begin(), it));
    return std::clamp<std::size_t>(idx, 1, x_.size() - 1) - 1;
}

double MonotoneCubic::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    const double v = h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
    return std::clamp(v, y_[i], y_[i + 1]);
}

double MonotoneCubic::derivative(double x) const {
    if (x <= x_.front()) return d_.front();
    if (x >= x_.back()) return d_.back();
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double dh00 = (6 * t2 - 6 * t) / h;
    const double dh10 = 3 * t2 - 4 * t + 1;
    const double dh01 = (-6 * t2 + 6 * t) / h;
    const double dh11 = 3 * t2 - 2 * t;
    return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

}  // namespace adiabatic
