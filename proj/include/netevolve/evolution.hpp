#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netevolve/graph.hpp"
#include "netevolve/metrics.hpp"
#include "netevolve/powerlaw.hpp"
#include "netevolve/stats.hpp"

namespace netevolve {

// Attachment-logic proxies and their relationship to network topology over time.
//
//   preferential attachment  <- power-law exponent of the degree distribution
//   homophily                <- degree assortativity
//   embedding                <- mean actor strength
//   multi-connectivity       <- mean of actors' average neighbor degree

enum class Proxy { PrefAttachment, Homophily, Embedding, MultiConnectivity };

inline constexpr std::array kAllProxies = {Proxy::PrefAttachment, Proxy::Homophily, Proxy::Embedding,
                                           Proxy::MultiConnectivity};

std::string_view to_string(Proxy proxy);

struct ProxyRow {
    std::string label;
    std::optional<double> pref_attachment;
    std::optional<double> homophily;
    std::optional<double> embedding;
    std::optional<double> multi_connectivity;

    [[nodiscard]] std::optional<double> value(Proxy proxy) const;

    bool operator==(const ProxyRow&) const = default;
};

enum class EmbeddingMode {
    MeanStrength,    // default
    MeanEdgeWeight,  // W / L
};

ProxyRow proxy_row(const GraphSnapshot& s, EmbeddingMode embedding = EmbeddingMode::MeanStrength);

/// One row per snapshot. Throws InvalidArgument on an empty sequence.
std::vector<ProxyRow> proxy_series(std::span<const GraphSnapshot> snapshots,
                                   EmbeddingMode embedding = EmbeddingMode::MeanStrength);

enum class PairStatus { Ok, InsufficientData, Undefined };

std::string_view to_string(PairStatus status);

struct CorrelationPair {
    Proxy proxy;
    CentralityKind kind;
    std::optional<double> coefficient;
    CorrelationMethod method = CorrelationMethod::Spearman;
    std::size_t n = 0;  // periods where both series are defined
    PairStatus status = PairStatus::Ok;

    bool operator==(const CorrelationPair&) const = default;
};

struct CorrelationReport {
    std::vector<CorrelationPair> pairs;  // proxy-major, kinds in Degree/Betweenness/Closeness order
    CentralityKind ranking_kind = CentralityKind::Degree;
    /// Proxies with a defined coefficient against ranking_kind, by |coefficient|
    /// descending, ties alphabetical.
    std::vector<Proxy> ranked_drivers;

    bool operator==(const CorrelationReport&) const = default;
};

/// Correlates every proxy with every centralization series across periods,
/// choosing Pearson or Spearman per pair through normality_gate().
/// Throws InvalidArgument when the two sequences are not aligned by label.
CorrelationReport correlate_attachment(std::span<const ProxyRow> proxies, std::span<const MetricsRow> rows,
                                       CentralityKind ranking_kind = CentralityKind::Degree);

struct StaticAttribute {
    std::string metric;
    bool is_static = false;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::size_t n = 0;

    bool operator==(const StaticAttribute&) const = default;
};

inline constexpr double kDefaultStaticTolerance = 0.10;

/// Flags a measure static when (max - min) <= rel_tolerance * max(|mean|, 1e-9)
/// over the periods where it is defined. Covers clustering, both densities,
/// diameter, average distance, and (when `fits` is non-empty) the power-law
/// exponent. Measures defined in fewer than two periods are left out.
/// Throws InvalidArgument for fewer than two rows, a tolerance outside (0, 1],
/// or a non-empty `fits` whose length differs from `rows`.
std::vector<StaticAttribute> static_attributes(std::span<const MetricsRow> rows,
                                               std::span<const std::optional<PowerLawFit>> fits,
                                               double rel_tolerance = kDefaultStaticTolerance);

/// The range test applied by static_attributes() to one series.
StaticAttribute static_attribute(std::string metric, std::span<const double> series, double rel_tolerance);

struct SmallWorldThresholds {
    double max_density = 0.05;           // on density_simple
    double min_clustering = 0.3;
    double clustering_over_random = 3.0;  // multiple of the random-graph expectation 2L/(N(N-1))
    double diameter_log_factor = 2.0;    // diameter <= ceil(factor * ln N / ln max(<k>, 2))
    double min_r_squared = 0.6;
    double min_lambda = 1.0;
};

struct SmallWorldVerdict {
    std::optional<bool> density_low;
    std::optional<bool> clustering_high;
    std::optional<bool> diameter_small;
    std::optional<bool> scale_free;
    /// Conjunction of the four flags; empty when any flag is undefined.
    std::optional<bool> verdict;
    std::vector<std::string> undefined_flags;

    bool operator==(const SmallWorldVerdict&) const = default;
};

/// Largest diameter still counted as small for a graph with n actors and l links.
std::size_t small_diameter_bound(std::size_t n, std::size_t l, double log_factor = 2.0);

SmallWorldVerdict classify_small_world(const MetricsRow& row, const std::optional<PowerLawFit>& fit,
                                       const SmallWorldThresholds& thresholds = {});

}  // namespace netevolve
