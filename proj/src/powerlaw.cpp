#include "netevolve/powerlaw.hpp"

#include <algorithm>
#include <cmath>

namespace netevolve {

std::vector<LogLogPoint> loglog_points(const DegreeHistogram& hist) {
    std::vector<LogLogPoint> points;
    for (const auto& [k, count] : hist) {
        if (k == 0 || count == 0) continue;
        points.push_back({std::log10(static_cast<double>(k)), std::log10(static_cast<double>(count))});
    }
    if (points.size() < 2) throw InsufficientData("power-law fit needs at least two occupied degrees >= 1");
    return points;
}

PowerLawFit fit_points(std::span<const LogLogPoint> points) {
    if (points.size() < 2) throw InsufficientData("power-law fit needs at least two points");
    const auto n = static_cast<double>(points.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& p : points) {
        mean_x += p.log_degree;
        mean_y += p.log_frequency;
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : points) {
        const double dx = p.log_degree - mean_x;
        const double dy = p.log_frequency - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw InsufficientData("power-law fit needs at least two distinct degrees");

    const double slope = sxy / sxx;
    PowerLawFit fit;
    fit.lambda = slope == 0.0 ? 0.0 : -slope;
    fit.intercept = mean_y - slope * mean_x;
    fit.n_points = points.size();
    if (syy == 0.0) {
        fit.r_squared = 1.0;
    } else {
        double ss_res = 0.0;
        for (const auto& p : points) {
            const double r = p.log_frequency - (fit.intercept + slope * p.log_degree);
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

PowerLawFit fit_powerlaw(const DegreeHistogram& hist) {
    const auto points = loglog_points(hist);
    return fit_points(points);
}

}  // namespace netevolve
