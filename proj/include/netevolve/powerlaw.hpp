#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netevolve/metrics.hpp"

namespace netevolve {

struct LogLogPoint {
    double log_degree;
    double log_frequency;

    bool operator==(const LogLogPoint&) const = default;
};

/// Least-squares line through the log-log degree/frequency points.
struct PowerLawFit {
    double lambda = 0.0;     // negated slope
    double intercept = 0.0;  // base-10 log space
    double r_squared = 0.0;
    std::size_t n_points = 0;

    bool operator==(const PowerLawFit&) const = default;
};

/// One base-10 point per occupied degree k >= 1, in increasing degree order.
/// Throws InsufficientData when fewer than two points remain.
std::vector<LogLogPoint> loglog_points(const DegreeHistogram& hist);

/// Ordinary least squares on the given points. A horizontal set of points
/// (zero variance in frequency) fits exactly, so r_squared = 1.
/// Throws InsufficientData for fewer than two points or a single distinct degree.
PowerLawFit fit_points(std::span<const LogLogPoint> points);

PowerLawFit fit_powerlaw(const DegreeHistogram& hist);

}  // namespace netevolve
