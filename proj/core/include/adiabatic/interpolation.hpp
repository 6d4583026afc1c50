#pragma once

#include <span>
#include <vector>

namespace adiabatic {

/// Piecewise cubic Hermite interpolant that preserves monotonicity of the
/// data (Fritsch-Carlson limiter). Knot abscissae must be strictly
/// increasing and ordinates nondecreasing.
class MonotoneCubic {
public:
    MonotoneCubic() = default;

    /// Slopes estimated from the data.
    MonotoneCubic(std::vector<double> x, std::vector<double> y);
    /// Given slopes, limited where they would break monotonicity.
    MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes);

    double operator()(double x) const;
    double derivative(double x) const;

    std::span<const double> x() const noexcept { return x_; }
    std::span<const double> y() const noexcept { return y_; }
    std::span<const double> slopes() const noexcept { return d_; }

private:
    void validate() const;
    void limit_slopes();
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> d_;
};

}  // namespace adiabatic
