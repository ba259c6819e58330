#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace netevolve {

enum class CorrelationMethod { Pearson, Spearman };

std::string_view to_string(CorrelationMethod method);

/// Product-moment correlation. Throws InvalidArgument on length mismatch or
/// fewer than three observations, UndefinedMetric when either input is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// Ranks starting at 1; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of average ranks. Same errors as pearson().
double spearman(std::span<const double> x, std::span<const double> y);

/// Series shorter than this always go to Spearman.
inline constexpr std::size_t kMinParametricSample = 20;

/// 95th percentile of chi-squared with two degrees of freedom.
inline constexpr double kJarqueBeraCritical = 5.991464547107979;

/// Jarque-Bera statistic n/6 (g1^2 + g2^2/4) from sample skewness g1 and
/// excess kurtosis g2. Throws UndefinedMetric for a constant series.
double jarque_bera(std::span<const double> x);

/// Spearman for short series, constant series, or when the Jarque-Bera
/// statistic exceeds its 5% critical value; Pearson otherwise.
/// Throws InvalidArgument for fewer than three values.
CorrelationMethod normality_gate(std::span<const double> x);

}  // namespace netevolve
