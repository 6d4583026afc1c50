// Minimal polyline charts for the figure reproductions. Fixed 640x480 viewport.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adiabatic::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color;
    bool markers = false;
};

class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add(Series series) { series_.push_back(std::move(series)); }
    void set_log_axes(bool log_axes) { log_axes_ = log_axes; }

    void render(std::ostream& os) const;

private:
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<Series> series_;
    bool log_axes_ = false;
};

}  // namespace adiabatic::cli
