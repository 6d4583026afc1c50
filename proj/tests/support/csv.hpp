// Minimal reader for the CSV files written by the tools.
#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace csv {

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;  // empty fields read as NaN

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw std::out_of_range("no column " + name);
    }
};

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ',');) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline Table read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Table t;
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("# ", 0) == 0) {
            t.comments.push_back(line.substr(2));
        } else if (t.header.empty()) {
            t.header = split(line);
        } else {
            std::vector<double> row;
            for (const auto& f : split(line)) row.push_back(f.empty() ? std::nan("") : std::stod(f));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Largest |a - b| / max(1, |b|) over matching cells; NaN cells must match.
inline double max_scaled_difference(const Table& a, const Table& b) {
    if (a.header != b.header || a.rows.size() != b.rows.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].size() != b.rows[i].size()) return INFINITY;
        for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
            const double x = a.rows[i][j];
            const double y = b.rows[i][j];
            if (std::isnan(x) || std::isnan(y)) {
                if (std::isnan(x) != std::isnan(y)) return INFINITY;
                continue;
            }
            worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(y)));
        }
    }
    return worst;
}

}  // namespace csv
