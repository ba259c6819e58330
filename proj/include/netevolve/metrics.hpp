#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netevolve/graph.hpp"
#include "netevolve/parallel.hpp"

namespace netevolve {

// Structural measures over one snapshot. Functions throw UndefinedMetric where a
// measure has no value; metrics_row() turns those into empty optionals.
// Every path-based measure counts hops: edge weights never affect distances.

/// 2W / (N(N-1)) over the accumulated interaction weight W. Exceeds 1 when
/// actors interact repeatedly. Throws UndefinedMetric for N < 2.
double density_weighted(const GraphSnapshot& s);

/// 2L / (N(N-1)) over distinct connected pairs. Throws UndefinedMetric for N < 2.
double density_simple(const GraphSnapshot& s);

/// Fraction of neighbor pairs of v that are adjacent; 0 when deg(v) < 2.
double local_clustering(const GraphSnapshot& s, VertexId v);
/// Throws NotFound for unknown actors.
double local_clustering(const GraphSnapshot& s, std::string_view actor);

/// Mean local clustering over all actors (degree < 2 counts as 0).
/// Throws UndefinedMetric on an empty graph.
double avg_clustering(const GraphSnapshot& s);

/// Global transitivity 3·triangles / connected triples. Reported for
/// comparison only. Throws UndefinedMetric when there are no triples.
double transitivity(const GraphSnapshot& s);

struct PathStats {
    std::size_t diameter = 0;            // longest geodesic inside the giant component
    double avg_distance = 0.0;           // mean over all reachable unordered pairs
    std::uint64_t reachable_pairs = 0;
};

/// BFS from every vertex. Throws UndefinedMetric when the graph has no edges.
PathStats path_stats(const GraphSnapshot& s, ParallelOptions opts = {});

using DegreeHistogram = std::map<std::size_t, std::size_t>;

/// degree -> number of actors, including degree 0.
DegreeHistogram degree_histogram(const GraphSnapshot& s);

/// Pearson correlation of endpoint degrees, each edge counted in both
/// orientations. Throws UndefinedMetric with no edges or zero variance.
double assortativity(const GraphSnapshot& s);

/// Mean degree of v's neighbors. Throws UndefinedMetric for isolated actors.
double avg_neighbor_degree(const GraphSnapshot& s, VertexId v);
double avg_neighbor_degree(const GraphSnapshot& s, std::string_view actor);

/// avg_neighbor_degree averaged over non-isolated actors.
/// Throws UndefinedMetric when every actor is isolated.
double mean_avg_neighbor_degree(const GraphSnapshot& s);

/// Mean strength over all actors. Throws UndefinedMetric on an empty graph.
double mean_strength(const GraphSnapshot& s);

/// W / L. Throws UndefinedMetric when there are no edges.
double mean_edge_weight(const GraphSnapshot& s);

struct BetweennessScores {
    std::vector<double> raw;         // indexed by VertexId
    std::vector<double> normalized;  // raw / ((N-1)(N-2)/2); all zero for N < 3

    [[nodiscard]] std::map<ActorId, double> raw_by_actor(const GraphSnapshot& s) const;
};

/// Unweighted shortest-path betweenness (Brandes accumulation), each unordered
/// pair counted once.
BetweennessScores betweenness(const GraphSnapshot& s, ParallelOptions opts = {});

enum class ClosenessMode {
    Component,  // (k-1) / sum of distances inside the actor's component of size k
    Harmonic,   // sum of 1/d over all other actors, divided by N-1
};

/// Normalized closeness per vertex; isolated actors score 0.
std::vector<double> closeness(const GraphSnapshot& s, ClosenessMode mode = ClosenessMode::Component,
                              ParallelOptions opts = {});

enum class CentralityKind { Degree, Betweenness, Closeness };

std::string_view to_string(CentralityKind kind);

/// Freeman centralization: sum(max - c_i) over the largest value attainable on n
/// vertices. Expects raw degrees for Degree, and normalized scores (as returned
/// above) for Betweenness and Closeness. Result is clamped to [0, 1]: on
/// disconnected graphs component-wise closeness can exceed the connected-graph
/// maximum. Throws UndefinedMetric for n < 3, InvalidArgument if values.size() != n.
double centralization(std::span<const double> values, CentralityKind kind, std::size_t n);

/// One table row of network measures. Empty optionals mark undefined values.
struct MetricsRow {
    std::string label;
    std::size_t n_actors = 0;
    std::size_t n_links = 0;
    std::uint64_t sum_links = 0;
    std::optional<double> density_weighted;
    std::optional<double> density_simple;
    std::optional<double> clustering;
    std::optional<double> transitivity;
    std::optional<std::size_t> diameter;
    std::optional<double> avg_distance;
    std::optional<double> assortativity;
    std::optional<double> avg_neighbor_degree;
    std::optional<double> avg_strength;
    std::optional<double> centralization_degree;
    std::optional<double> centralization_betweenness;
    std::optional<double> centralization_closeness;

    bool operator==(const MetricsRow&) const = default;
};

MetricsRow metrics_row(const GraphSnapshot& s, ParallelOptions opts = {});

}  // namespace netevolve
