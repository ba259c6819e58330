#include "netevolve/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace netevolve {
namespace {

constexpr std::size_t kSourcesPerChunk = 64;
constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();

std::size_t chunk_count(std::size_t n) { return (n + kSourcesPerChunk - 1) / kSourcesPerChunk; }

double pair_count(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

// Edges among the neighbors of v. `mark` must be all false on entry and is restored.
std::size_t links_among_neighbors(const GraphSnapshot& s, VertexId v, std::vector<char>& mark) {
    const auto nbrs = s.neighbors(v);
    for (const Neighbor& nb : nbrs) mark[nb.vertex] = 1;
    std::size_t twice = 0;
    for (const Neighbor& nb : nbrs) {
        for (const Neighbor& second : s.neighbors(nb.vertex)) twice += static_cast<std::size_t>(mark[second.vertex]);
    }
    for (const Neighbor& nb : nbrs) mark[nb.vertex] = 0;
    return twice / 2;
}

double local_clustering_with(const GraphSnapshot& s, VertexId v, std::vector<char>& mark) {
    const std::size_t d = s.degree(v);
    if (d < 2) return 0.0;
    return static_cast<double>(links_among_neighbors(s, v, mark)) / pair_count(d);
}

// Hop distances from `source`; unreachable vertices keep kUnreached.
void bfs(const GraphSnapshot& s, VertexId source, std::vector<std::uint32_t>& dist, std::vector<VertexId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (const Neighbor& nb : s.neighbors(v)) {
            if (dist[nb.vertex] == kUnreached) {
                dist[nb.vertex] = dist[v] + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
}

// Component id (smallest member) of the giant component, using the same
// tiebreak as giant_component().
std::uint32_t giant_id(const std::vector<std::uint32_t>& labels) {
    std::vector<std::size_t> size(labels.size(), 0);
    for (auto c : labels) ++size[c];
    std::uint32_t best = 0;
    for (std::uint32_t c = 0; c < size.size(); ++c) {
        if (size[c] > size[best]) best = c;
    }
    return best;
}

}  // namespace

double density_weighted(const GraphSnapshot& s) {
    if (s.num_actors() < 2) throw UndefinedMetric("density needs at least two actors");
    return static_cast<double>(s.sum_links()) / pair_count(s.num_actors());
}

double density_simple(const GraphSnapshot& s) {
    if (s.num_actors() < 2) throw UndefinedMetric("density needs at least two actors");
    return static_cast<double>(s.num_links()) / pair_count(s.num_actors());
}

double local_clustering(const GraphSnapshot& s, VertexId v) {
    std::vector<char> mark(s.num_actors(), 0);
    return local_clustering_with(s, v, mark);
}

double local_clustering(const GraphSnapshot& s, std::string_view actor) {
    return local_clustering(s, s.vertex(actor));
}

double avg_clustering(const GraphSnapshot& s) {
    const std::size_t n = s.num_actors();
    if (n == 0) throw UndefinedMetric("clustering of an empty graph");
    std::vector<char> mark(n, 0);
    double total = 0.0;
    for (VertexId v = 0; v < n; ++v) total += local_clustering_with(s, v, mark);
    return total / static_cast<double>(n);
}

double transitivity(const GraphSnapshot& s) {
    std::vector<char> mark(s.num_actors(), 0);
    std::uint64_t closed = 0;
    std::uint64_t triples = 0;
    for (VertexId v = 0; v < s.num_actors(); ++v) {
        const std::uint64_t d = s.degree(v);
        if (d < 2) continue;
        triples += d * (d - 1) / 2;
        closed += links_among_neighbors(s, v, mark);
    }
    if (triples == 0) throw UndefinedMetric("transitivity without connected triples");
    return static_cast<double>(closed) / static_cast<double>(triples);
}

PathStats path_stats(const GraphSnapshot& s, ParallelOptions opts) {
    if (s.num_links() == 0) throw UndefinedMetric("path statistics need at least one edge");
    const std::size_t n = s.num_actors();
    const auto labels = component_labels(s);
    const std::uint32_t giant = giant_id(labels);

    struct Partial {
        std::uint64_t distance_sum = 0;
        std::uint64_t pairs = 0;
        std::uint32_t diameter = 0;
    };
    std::vector<Partial> partials(chunk_count(n));
    parallel_chunks(partials.size(), opts.threads, [&](std::size_t chunk) {
        std::vector<std::uint32_t> dist(n);
        std::vector<VertexId> queue;
        queue.reserve(n);
        Partial& out = partials[chunk];
        const std::size_t end = std::min(n, (chunk + 1) * kSourcesPerChunk);
        for (auto src = static_cast<VertexId>(chunk * kSourcesPerChunk); src < end; ++src) {
            if (s.degree(src) == 0) continue;
            bfs(s, src, dist, queue);
            for (VertexId t : queue) {
                if (t <= src) continue;
                out.distance_sum += dist[t];
                ++out.pairs;
            }
            if (labels[src] == giant) out.diameter = std::max(out.diameter, dist[queue.back()]);
        }
    });

    PathStats stats;
    std::uint64_t distance_sum = 0;
    for (const Partial& p : partials) {
        distance_sum += p.distance_sum;
        stats.reachable_pairs += p.pairs;
        stats.diameter = std::max<std::size_t>(stats.diameter, p.diameter);
    }
    stats.avg_distance = static_cast<double>(distance_sum) / static_cast<double>(stats.reachable_pairs);
    return stats;
}

DegreeHistogram degree_histogram(const GraphSnapshot& s) {
    DegreeHistogram hist;
    for (VertexId v = 0; v < s.num_actors(); ++v) ++hist[s.degree(v)];
    return hist;
}

double assortativity(const GraphSnapshot& s) {
    if (s.num_links() == 0) throw UndefinedMetric("assortativity needs at least one edge");
    // Symmetric sample: x and y have the same marginal, so one mean and variance suffice.
    double sum = 0.0, sum_sq = 0.0, sum_prod = 0.0;
    for (const Edge& e : s.edges()) {
        const auto j = static_cast<double>(s.degree(e.u));
        const auto k = static_cast<double>(s.degree(e.v));
        sum += j + k;
        sum_sq += j * j + k * k;
        sum_prod += 2.0 * j * k;
    }
    const double m2 = 2.0 * static_cast<double>(s.num_links());
    const double mean = sum / m2;
    const double variance = sum_sq / m2 - mean * mean;
    const double covariance = sum_prod / m2 - mean * mean;
    if (!(variance > 1e-12 * std::max(1.0, mean * mean)))
        throw UndefinedMetric("assortativity undefined: endpoint degrees have zero variance");
    return std::clamp(covariance / variance, -1.0, 1.0);
}

double avg_neighbor_degree(const GraphSnapshot& s, VertexId v) {
    const auto nbrs = s.neighbors(v);
    if (nbrs.empty()) throw UndefinedMetric("average neighbor degree of an isolated actor");
    std::uint64_t total = 0;
    for (const Neighbor& nb : nbrs) total += s.degree(nb.vertex);
    return static_cast<double>(total) / static_cast<double>(nbrs.size());
}

double avg_neighbor_degree(const GraphSnapshot& s, std::string_view actor) {
    return avg_neighbor_degree(s, s.vertex(actor));
}

double mean_avg_neighbor_degree(const GraphSnapshot& s) {
    double total = 0.0;
    std::size_t counted = 0;
    for (VertexId v = 0; v < s.num_actors(); ++v) {
        if (s.degree(v) == 0) continue;
        total += avg_neighbor_degree(s, v);
        ++counted;
    }
    if (counted == 0) throw UndefinedMetric("no actor has a neighbor");
    return total / static_cast<double>(counted);
}

double mean_strength(const GraphSnapshot& s) {
    if (s.num_actors() == 0) throw UndefinedMetric("mean strength of an empty graph");
    return 2.0 * static_cast<double>(s.sum_links()) / static_cast<double>(s.num_actors());
}

double mean_edge_weight(const GraphSnapshot& s) {
    if (s.num_links() == 0) throw UndefinedMetric("mean edge weight without edges");
    return static_cast<double>(s.sum_links()) / static_cast<double>(s.num_links());
}

std::map<ActorId, double> BetweennessScores::raw_by_actor(const GraphSnapshot& s) const {
    std::map<ActorId, double> out;
    for (VertexId v = 0; v < raw.size(); ++v) out.emplace(s.actor(v), raw[v]);
    return out;
}

BetweennessScores betweenness(const GraphSnapshot& s, ParallelOptions opts) {
    const std::size_t n = s.num_actors();
    std::vector<std::vector<double>> partials(chunk_count(n));
    parallel_chunks(partials.size(), opts.threads, [&](std::size_t chunk) {
        std::vector<double> acc(n, 0.0);
        std::vector<std::uint32_t> dist(n);
        std::vector<double> sigma(n);
        std::vector<double> delta(n);
        std::vector<VertexId> order;
        order.reserve(n);
        const std::size_t end = std::min(n, (chunk + 1) * kSourcesPerChunk);
        for (auto src = static_cast<VertexId>(chunk * kSourcesPerChunk); src < end; ++src) {
            if (s.degree(src) == 0) continue;
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            bfs(s, src, dist, order);
            sigma[src] = 1.0;
            for (VertexId v : order) {
                for (const Neighbor& nb : s.neighbors(v)) {
                    if (dist[nb.vertex] == dist[v] + 1) sigma[nb.vertex] += sigma[v];
                }
            }
            // Predecessors of w are the neighbors one hop closer to the source.
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                const VertexId w = *it;
                for (const Neighbor& nb : s.neighbors(w)) {
                    const VertexId v = nb.vertex;
                    if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
                if (w != src) acc[w] += delta[w];
            }
        }
        partials[chunk] = std::move(acc);
    });

    BetweennessScores scores;
    scores.raw.assign(n, 0.0);
    for (const auto& part : partials) {
        for (std::size_t v = 0; v < n; ++v) scores.raw[v] += part[v];
    }
    for (double& b : scores.raw) b /= 2.0;
    scores.normalized.assign(n, 0.0);
    if (n >= 3) {
        const double scale = pair_count(n - 1);
        for (std::size_t v = 0; v < n; ++v) scores.normalized[v] = scores.raw[v] / scale;
    }
    return scores;
}

std::vector<double> closeness(const GraphSnapshot& s, ClosenessMode mode, ParallelOptions opts) {
    const std::size_t n = s.num_actors();
    std::vector<double> out(n, 0.0);
    parallel_chunks(chunk_count(n), opts.threads, [&](std::size_t chunk) {
        std::vector<std::uint32_t> dist(n);
        std::vector<VertexId> queue;
        queue.reserve(n);
        const std::size_t end = std::min(n, (chunk + 1) * kSourcesPerChunk);
        for (auto src = static_cast<VertexId>(chunk * kSourcesPerChunk); src < end; ++src) {
            if (s.degree(src) == 0) continue;
            bfs(s, src, dist, queue);
            if (mode == ClosenessMode::Component) {
                std::uint64_t total = 0;
                for (VertexId t : queue) total += dist[t];
                out[src] = static_cast<double>(queue.size() - 1) / static_cast<double>(total);
            } else {
                double total = 0.0;
                for (VertexId t : queue) {
                    if (t != src) total += 1.0 / dist[t];
                }
                out[src] = total / static_cast<double>(n - 1);
            }
        }
    });
    return out;
}

std::string_view to_string(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::Degree: return "degree";
        case CentralityKind::Betweenness: return "betweenness";
        case CentralityKind::Closeness: return "closeness";
    }
    return "unknown";
}

double centralization(std::span<const double> values, CentralityKind kind, std::size_t n) {
    if (n < 3) throw UndefinedMetric("centralization needs at least three actors");
    if (values.size() != n) throw InvalidArgument("centralization: value count does not match n");
    const double top = *std::max_element(values.begin(), values.end());
    double spread = 0.0;
    for (double c : values) spread += top - c;
    const auto nd = static_cast<double>(n);
    double bound = 0.0;
    switch (kind) {
        case CentralityKind::Degree: bound = (nd - 1.0) * (nd - 2.0); break;
        case CentralityKind::Betweenness: bound = nd - 1.0; break;
        case CentralityKind::Closeness: bound = (nd - 1.0) * (nd - 2.0) / (2.0 * nd - 3.0); break;
    }
    return std::clamp(spread / bound, 0.0, 1.0);
}

namespace {

template <class T>
std::optional<T> defined(const std::function<T()>& compute) {
    try {
        return compute();
    } catch (const UndefinedMetric&) {
        return std::nullopt;
    }
}

}  // namespace

MetricsRow metrics_row(const GraphSnapshot& s, ParallelOptions opts) {
    MetricsRow row;
    row.label = s.label();
    row.n_actors = s.num_actors();
    row.n_links = s.num_links();
    row.sum_links = s.sum_links();
    row.density_weighted = defined<double>([&] { return density_weighted(s); });
    row.density_simple = defined<double>([&] { return density_simple(s); });
    row.clustering = defined<double>([&] { return avg_clustering(s); });
    row.transitivity = defined<double>([&] { return transitivity(s); });
    if (auto paths = defined<PathStats>([&] { return path_stats(s, opts); })) {
        row.diameter = paths->diameter;
        row.avg_distance = paths->avg_distance;
    }
    row.assortativity = defined<double>([&] { return assortativity(s); });
    row.avg_neighbor_degree = defined<double>([&] { return mean_avg_neighbor_degree(s); });
    row.avg_strength = defined<double>([&] { return mean_strength(s); });

    const std::size_t n = s.num_actors();
    if (n >= 3) {
        std::vector<double> degrees(n);
        for (VertexId v = 0; v < n; ++v) degrees[v] = static_cast<double>(s.degree(v));
        row.centralization_degree = centralization(degrees, CentralityKind::Degree, n);
        const auto between = betweenness(s, opts);
        row.centralization_betweenness = centralization(between.normalized, CentralityKind::Betweenness, n);
        const auto close = closeness(s, ClosenessMode::Component, opts);
        row.centralization_closeness = centralization(close, CentralityKind::Closeness, n);
    }
    return row;
}

}  // namespace netevolve
