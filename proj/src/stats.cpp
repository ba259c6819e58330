#include "netevolve/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netevolve/errors.hpp"

namespace netevolve {

std::string_view to_string(CorrelationMethod method) {
    return method == CorrelationMethod::Pearson ? "pearson" : "spearman";
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("correlation inputs differ in length");
    if (x.size() < 3) throw InvalidArgument("correlation needs at least three observations");
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw UndefinedMetric("correlation of a constant series");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("correlation inputs differ in length");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

double jarque_bera(std::span<const double> x) {
    const auto n = static_cast<double>(x.size());
    if (x.empty()) throw UndefinedMetric("normality statistic of an empty series");
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (!(m2 > 0.0)) throw UndefinedMetric("normality statistic of a constant series");
    const double skew = m3 / std::pow(m2, 1.5);
    const double excess_kurtosis = m4 / (m2 * m2) - 3.0;
    return n / 6.0 * (skew * skew + excess_kurtosis * excess_kurtosis / 4.0);
}

CorrelationMethod normality_gate(std::span<const double> x) {
    if (x.size() < 3) throw InvalidArgument("normality gate needs at least three values");
    if (x.size() < kMinParametricSample) return CorrelationMethod::Spearman;
    try {
        return jarque_bera(x) > kJarqueBeraCritical ? CorrelationMethod::Spearman : CorrelationMethod::Pearson;
    } catch (const UndefinedMetric&) {
        return CorrelationMethod::Spearman;
    }
}

}  // namespace netevolve
