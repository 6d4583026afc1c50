#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "adiabatic/io.hpp"

namespace adiabatic::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 55;

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

void SvgPlot::render(std::ostream& os) const {
    auto tx = [&](double v) { return log_axes_ ? std::log10(v) : v; };

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series_) {
        for (double v : s.x) {
            xmin = std::min(xmin, tx(v));
            xmax = std::max(xmax, tx(v));
        }
        for (double v : s.y) {
            ymin = std::min(ymin, tx(v));
            ymax = std::max(ymax, tx(v));
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + (tx(v) - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return kTop + ph - (tx(v) - ymin) / (ymax - ymin) * ph; };
    auto inv = [&](double v) { return log_axes_ ? std::pow(10.0, v) : v; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"15\">" << escape(title_) << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        const double gx = kLeft + pw * i / 4.0;
        const double gy = kTop + ph - ph * i / 4.0;
        os << "<text x=\"" << gx << "\" y=\"" << kTop + ph + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << short_number(inv(fx))
           << "</text>\n";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << gy + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << short_number(inv(fy))
           << "</text>\n";
    }
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(x_label_)
       << "</text>\n";
    os << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"13\" transform=\"rotate(-90 16 " << kTop + ph / 2 << ")\">" << escape(y_label_)
       << "</text>\n";

    double legend_y = kTop + 16;
    for (const auto& s : series_) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            os << format_double(px(s.x[i])) << ',' << format_double(py(s.y[i])) << ' ';
        }
        os << "\"/>\n";
        if (s.markers) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                os << "<circle cx=\"" << format_double(px(s.x[i])) << "\" cy=\"" << format_double(py(s.y[i]))
                   << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
            }
        }
        os << "<text x=\"" << kLeft + pw - 8 << "\" y=\"" << legend_y
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << s.color << "\">"
           << escape(s.label) << "</text>\n";
        legend_y += 15;
    }
    os << "</svg>\n";
}

}  // namespace adiabatic::cli
