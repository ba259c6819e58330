#include "netevolve/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace netevolve {
namespace {

template <class Fn>
std::optional<double> guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const UndefinedMetric&) {
        return std::nullopt;
    } catch (const InsufficientData&) {
        return std::nullopt;
    }
}

std::optional<double> centralization_of(const MetricsRow& row, CentralityKind kind) {
    switch (kind) {
        case CentralityKind::Degree: return row.centralization_degree;
        case CentralityKind::Betweenness: return row.centralization_betweenness;
        case CentralityKind::Closeness: return row.centralization_closeness;
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Proxy proxy) {
    switch (proxy) {
        case Proxy::PrefAttachment: return "pref_attachment";
        case Proxy::Homophily: return "homophily";
        case Proxy::Embedding: return "embedding";
        case Proxy::MultiConnectivity: return "multi_connectivity";
    }
    return "unknown";
}

std::string_view to_string(PairStatus status) {
    switch (status) {
        case PairStatus::Ok: return "ok";
        case PairStatus::InsufficientData: return "insufficient_data";
        case PairStatus::Undefined: return "undefined";
    }
    return "unknown";
}

std::optional<double> ProxyRow::value(Proxy proxy) const {
    switch (proxy) {
        case Proxy::PrefAttachment: return pref_attachment;
        case Proxy::Homophily: return homophily;
        case Proxy::Embedding: return embedding;
        case Proxy::MultiConnectivity: return multi_connectivity;
    }
    return std::nullopt;
}

ProxyRow proxy_row(const GraphSnapshot& s, EmbeddingMode embedding) {
    ProxyRow row;
    row.label = s.label();
    row.pref_attachment = guarded([&] { return fit_powerlaw(degree_histogram(s)).lambda; });
    row.homophily = guarded([&] { return assortativity(s); });
    row.embedding = guarded([&] {
        return embedding == EmbeddingMode::MeanStrength ? mean_strength(s) : mean_edge_weight(s);
    });
    row.multi_connectivity = guarded([&] { return mean_avg_neighbor_degree(s); });
    return row;
}

std::vector<ProxyRow> proxy_series(std::span<const GraphSnapshot> snapshots, EmbeddingMode embedding) {
    if (snapshots.empty()) throw InvalidArgument("proxy series needs at least one snapshot");
    std::vector<ProxyRow> rows;
    rows.reserve(snapshots.size());
    for (const auto& s : snapshots) rows.push_back(proxy_row(s, embedding));
    return rows;
}

CorrelationReport correlate_attachment(std::span<const ProxyRow> proxies, std::span<const MetricsRow> rows,
                                       CentralityKind ranking_kind) {
    if (proxies.size() != rows.size()) throw InvalidArgument("proxy and metric series differ in length");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (proxies[i].label != rows[i].label)
            throw InvalidArgument("period labels differ: '" + proxies[i].label + "' vs '" + rows[i].label + "'");
    }

    CorrelationReport report;
    report.ranking_kind = ranking_kind;
    constexpr std::array kinds = {CentralityKind::Degree, CentralityKind::Betweenness, CentralityKind::Closeness};
    for (Proxy proxy : kAllProxies) {
        for (CentralityKind kind : kinds) {
            std::vector<double> xs, ys;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto x = proxies[i].value(proxy);
                const auto y = centralization_of(rows[i], kind);
                if (x && y) {
                    xs.push_back(*x);
                    ys.push_back(*y);
                }
            }
            CorrelationPair pair{proxy, kind, std::nullopt, CorrelationMethod::Spearman, xs.size(), PairStatus::Ok};
            if (xs.size() < 3) {
                pair.status = PairStatus::InsufficientData;
            } else {
                const bool parametric = normality_gate(xs) == CorrelationMethod::Pearson &&
                                        normality_gate(ys) == CorrelationMethod::Pearson;
                pair.method = parametric ? CorrelationMethod::Pearson : CorrelationMethod::Spearman;
                try {
                    pair.coefficient = parametric ? pearson(xs, ys) : spearman(xs, ys);
                } catch (const UndefinedMetric&) {
                    pair.status = PairStatus::Undefined;
                }
            }
            report.pairs.push_back(pair);
        }
    }

    std::vector<std::pair<double, Proxy>> ranked;
    for (const auto& pair : report.pairs) {
        if (pair.kind == ranking_kind && pair.coefficient) ranked.emplace_back(std::abs(*pair.coefficient), pair.proxy);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return to_string(a.second) < to_string(b.second);
    });
    for (const auto& [_, proxy] : ranked) report.ranked_drivers.push_back(proxy);
    return report;
}

StaticAttribute static_attribute(std::string metric, std::span<const double> series, double rel_tolerance) {
    StaticAttribute attr;
    attr.metric = std::move(metric);
    attr.n = series.size();
    if (series.empty()) return attr;
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    attr.min = *lo;
    attr.max = *hi;
    double sum = 0.0;
    for (double v : series) sum += v;
    attr.mean = sum / static_cast<double>(series.size());
    attr.is_static = (attr.max - attr.min) <= rel_tolerance * std::max(std::abs(attr.mean), 1e-9);
    return attr;
}

std::vector<StaticAttribute> static_attributes(std::span<const MetricsRow> rows,
                                               std::span<const std::optional<PowerLawFit>> fits,
                                               double rel_tolerance) {
    if (rows.size() < 2) throw InvalidArgument("static-attribute detection needs at least two periods");
    if (!(rel_tolerance > 0.0 && rel_tolerance <= 1.0)) throw InvalidArgument("rel_tolerance must lie in (0, 1]");
    if (!fits.empty() && fits.size() != rows.size()) throw InvalidArgument("fits and rows differ in length");

    std::vector<StaticAttribute> out;
    const auto add = [&](std::string name, auto&& pick) {
        std::vector<double> series;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (auto v = pick(i)) series.push_back(static_cast<double>(*v));
        }
        if (series.size() >= 2) out.push_back(static_attribute(std::move(name), series, rel_tolerance));
    };
    add("clustering", [&](std::size_t i) { return rows[i].clustering; });
    add("density_weighted", [&](std::size_t i) { return rows[i].density_weighted; });
    add("density_simple", [&](std::size_t i) { return rows[i].density_simple; });
    add("diameter", [&](std::size_t i) { return rows[i].diameter; });
    add("avg_distance", [&](std::size_t i) { return rows[i].avg_distance; });
    if (!fits.empty()) {
        add("lambda", [&](std::size_t i) -> std::optional<double> {
            if (fits[i]) return fits[i]->lambda;
            return std::nullopt;
        });
    }
    return out;
}

std::size_t small_diameter_bound(std::size_t n, std::size_t l, double log_factor) {
    if (n < 2) throw UndefinedMetric("diameter bound needs at least two actors");
    const double avg_degree = 2.0 * static_cast<double>(l) / static_cast<double>(n);
    const double bound = log_factor * std::log(static_cast<double>(n)) / std::log(std::max(avg_degree, 2.0));
    return static_cast<std::size_t>(std::ceil(bound));
}

SmallWorldVerdict classify_small_world(const MetricsRow& row, const std::optional<PowerLawFit>& fit,
                                       const SmallWorldThresholds& t) {
    SmallWorldVerdict v;
    if (row.density_simple) {
        v.density_low = *row.density_simple < t.max_density;
        if (row.clustering) {
            v.clustering_high =
                *row.clustering >= t.min_clustering && *row.clustering >= t.clustering_over_random * *row.density_simple;
        }
    }
    if (row.diameter && row.n_actors >= 2) {
        v.diameter_small = *row.diameter <= small_diameter_bound(row.n_actors, row.n_links, t.diameter_log_factor);
    }
    if (fit) v.scale_free = fit->r_squared >= t.min_r_squared && fit->lambda >= t.min_lambda;

    const std::array<std::pair<const char*, const std::optional<bool>*>, 4> flags = {{
        {"density_low", &v.density_low},
        {"clustering_high", &v.clustering_high},
        {"diameter_small", &v.diameter_small},
        {"scale_free", &v.scale_free},
    }};
    bool all = true;
    for (const auto& [name, flag] : flags) {
        if (!flag->has_value()) {
            v.undefined_flags.emplace_back(name);
        } else {
            all = all && **flag;
        }
    }
    if (v.undefined_flags.empty()) v.verdict = all;
    return v;
}

}  // namespace netevolve
