#include "netevolve/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace netevolve {
namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

struct RawGraph {
    EdgeList edges;
    std::vector<std::int64_t> edge_time;  // empty means all zero
};

RawGraph er_edges(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    RawGraph g;
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = i + 1; j < spec.n; ++j) {
            if (rng.uniform() < spec.param1) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

RawGraph ws_edges(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    const std::size_t n = spec.n;
    const auto half = static_cast<std::size_t>(spec.param1) / 2;
    const double beta = spec.param2;
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= half; ++j) {
            const std::size_t v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for (std::size_t j = 1; j <= half; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            if (!(rng.uniform() < beta)) continue;
            if (adj[u].size() >= n - 1) continue;
            const std::size_t v = (u + j) % n;
            std::size_t w = 0;
            do {
                w = static_cast<std::size_t>(rng.below(n));
            } while (w == u || adj[u].count(w) != 0);
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    RawGraph g;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v : adj[u]) {
            if (u < v) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

RawGraph ba_edges(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    const std::size_t n = spec.n;
    const auto m = static_cast<std::size_t>(spec.param1);
    RawGraph g;
    // Every edge puts both endpoints here, so a uniform index is a draw
    // proportional to degree.
    std::vector<std::size_t> endpoints;
    endpoints.reserve(2 * (m * (m + 1) / 2 + (n - m - 1) * m));
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            g.edges.emplace_back(i, j);
            g.edge_time.push_back(0);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    std::vector<std::size_t> targets;
    for (std::size_t v = m + 1; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const std::size_t t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (std::size_t t : targets) {
            g.edges.emplace_back(t, v);
            g.edge_time.push_back(static_cast<std::int64_t>(v - m));
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return g;
}

RawGraph raw_edges(const GeneratorSpec& spec) {
    validate(spec);
    switch (spec.model) {
        case Model::ErdosRenyi: return er_edges(spec);
        case Model::WattsStrogatz: return ws_edges(spec);
        case Model::BarabasiAlbert: return ba_edges(spec);
    }
    throw InvalidArgument("unknown generator model");
}

void require_model(const GeneratorSpec& spec, Model model) {
    if (spec.model != model) throw InvalidArgument("generator spec is for model " + std::string(to_string(spec.model)));
}

bool is_integral(double x) { return std::isfinite(x) && std::floor(x) == x; }

}  // namespace

std::string_view to_string(Model model) {
    switch (model) {
        case Model::ErdosRenyi: return "er";
        case Model::WattsStrogatz: return "ws";
        case Model::BarabasiAlbert: return "ba";
    }
    return "unknown";
}

Model parse_model(std::string_view name) {
    if (name == "er") return Model::ErdosRenyi;
    if (name == "ws") return Model::WattsStrogatz;
    if (name == "ba") return Model::BarabasiAlbert;
    throw InvalidArgument("unknown model '" + std::string(name) + "' (expected er, ws or ba)");
}

void validate(const GeneratorSpec& spec) {
    if (spec.n < 3) throw InvalidArgument("generator needs n >= 3");
    switch (spec.model) {
        case Model::ErdosRenyi:
            if (!(spec.param1 >= 0.0 && spec.param1 <= 1.0)) throw InvalidArgument("er: p must lie in [0, 1]");
            break;
        case Model::WattsStrogatz: {
            const double k = spec.param1;
            if (!is_integral(k) || static_cast<long long>(k) % 2 != 0 || k < 2 || k >= static_cast<double>(spec.n))
                throw InvalidArgument("ws: k must be even with 2 <= k < n");
            if (!(spec.param2 >= 0.0 && spec.param2 <= 1.0)) throw InvalidArgument("ws: beta must lie in [0, 1]");
            break;
        }
        case Model::BarabasiAlbert:
            if (!is_integral(spec.param1) || spec.param1 < 1 || spec.param1 >= static_cast<double>(spec.n))
                throw InvalidArgument("ba: m must be an integer with 1 <= m < n");
            break;
    }
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
    // Reject the top sliver of outputs so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

std::string vertex_label(std::size_t index, std::size_t n) {
    const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
    std::string digits = std::to_string(index);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return "v" + digits;
}

GeneratedEvents generate_events(const GeneratorSpec& spec) {
    const RawGraph g = raw_edges(spec);
    GeneratedEvents out;
    out.events.reserve(g.edges.size());
    std::vector<char> touched(spec.n, 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        const std::int64_t t = g.edge_time.empty() ? 0 : g.edge_time[i];
        out.events.push_back({Timestamp::index(t), vertex_label(u, spec.n), vertex_label(v, spec.n), 1});
        touched[u] = touched[v] = 1;
    }
    for (std::size_t v = 0; v < spec.n; ++v) {
        if (!touched[v]) out.arrivals.push_back({Timestamp::index(0), vertex_label(v, spec.n)});
    }
    return out;
}

GraphSnapshot generate(const GeneratorSpec& spec, std::string label) {
    const GeneratedEvents gen = generate_events(spec);
    SnapshotBuilder builder;
    for (const auto& ev : gen.events) builder.add_interaction(ev.a, ev.b, ev.weight);
    for (const auto& arrival : gen.arrivals) builder.add_actor(arrival.actor);
    return builder.build(std::move(label));
}

GraphSnapshot erdos_renyi(const GeneratorSpec& spec) {
    require_model(spec, Model::ErdosRenyi);
    return generate(spec, "er");
}

GraphSnapshot watts_strogatz(const GeneratorSpec& spec) {
    require_model(spec, Model::WattsStrogatz);
    return generate(spec, "ws");
}

GraphSnapshot barabasi_albert(const GeneratorSpec& spec) {
    require_model(spec, Model::BarabasiAlbert);
    return generate(spec, "ba");
}

}  // namespace netevolve
