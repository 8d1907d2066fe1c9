#include "advpos/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "advpos/util.hpp"

namespace advpos {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> nonempty_lines(std::string_view text) {
    std::vector<std::string> lines;
    for (auto& line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::string format_double17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double17(std::string_view s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double17: bad number '" + std::string(s) + "'");
    return value;
}

std::string region_csv(const std::vector<RegionSample>& samples) {
    std::ostringstream out;
    out << "scheme,m,theta,nu,min_entry,nonneg\n";
    for (const auto& s : samples) {
        out << scheme_name(s.kind) << ',' << s.m << ',' << format_double17(s.theta) << ','
            << format_double17(s.nu) << ',' << format_double17(s.min_entry) << ','
            << (s.nonneg ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<RegionSample> parse_region_csv(std::string_view text) {
    const auto lines = nonempty_lines(text);
    if (lines.empty() || lines[0] != "scheme,m,theta,nu,min_entry,nonneg")
        throw std::invalid_argument("parse_region_csv: missing or bad header");
    std::vector<RegionSample> out;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 6) throw std::invalid_argument("parse_region_csv: bad row");
        RegionSample s;
        s.kind = parse_scheme(f[0]);
        s.m = std::stoi(f[1]);
        s.theta = parse_double17(f[2]);
        s.nu = parse_double17(f[3]);
        s.min_entry = parse_double17(f[4]);
        s.nonneg = (f[5] == "1");
        out.push_back(s);
    }
    return out;
}

std::string boundary_csv(const std::vector<BoundaryCurve>& curves) {
    std::ostringstream out;
    out << "k,theta,nu_R,nu_L\n";
    for (const auto& curve : curves)
        for (const auto& s : curve.samples)
            out << curve.k << ',' << format_double17(s.theta) << ',' << format_double17(s.nu_r)
                << ',' << format_double17(s.nu_l) << '\n';
    return out.str();
}

std::vector<BoundaryCurve> parse_boundary_csv(std::string_view text) {
    const auto lines = nonempty_lines(text);
    if (lines.empty() || lines[0] != "k,theta,nu_R,nu_L")
        throw std::invalid_argument("parse_boundary_csv: missing or bad header");
    std::vector<BoundaryCurve> out;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 4) throw std::invalid_argument("parse_boundary_csv: bad row");
        const int k = std::stoi(f[0]);
        if (out.empty() || out.back().k != k) {
            BoundaryCurve curve;
            curve.k = k;
            out.push_back(curve);
        }
        out.back().samples.push_back(
            {parse_double17(f[1]), parse_double17(f[2]), parse_double17(f[3])});
    }
    return out;
}

std::vector<double> parse_grid(std::string_view spec) {
    const auto f = split(spec, ':');
    if (f.size() != 3 && f.size() != 4)
        throw std::invalid_argument("parse_grid: expected a:b:n or a:b:n:log");
    const double a = parse_double17(f[0]);
    const double b = parse_double17(f[1]);
    const int n = std::stoi(f[2]);
    if (n < 1) throw std::invalid_argument("parse_grid: count must be >= 1");
    if (f.size() == 4) {
        if (f[3] != "log") throw std::invalid_argument("parse_grid: unknown grid mode '" + f[3] + "'");
        return logspace(a, b, n);
    }
    return linspace(a, b, n);
}

}  // namespace advpos
