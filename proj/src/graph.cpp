#include "netevolve/graph.hpp"

#include <algorithm>
#include <numeric>

namespace netevolve {

ActorId normalize_actor(std::string_view raw) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = raw.find_first_not_of(ws);
    if (first == std::string_view::npos) throw InvalidArgument("empty actor label");
    const auto last = raw.find_last_not_of(ws);
    return ActorId(raw.substr(first, last - first + 1));
}

GraphSnapshot::GraphSnapshot(std::string label, std::vector<ActorId> actors, std::vector<Edge> edges)
    : label_(std::move(label)), actors_(std::move(actors)), edges_(std::move(edges)) {
    const std::size_t n = actors_.size();
    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
        sum_links_ += e.weight;
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // edges_ is sorted by (u, v), so each adjacency list comes out sorted.
    for (const Edge& e : edges_) adjacency_[cursor[e.u]++] = {e.v, e.weight};
    for (const Edge& e : edges_) adjacency_[cursor[e.v]++] = {e.u, e.weight};
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
                  [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
    }
}

std::optional<VertexId> GraphSnapshot::find(std::string_view actor) const {
    const auto it = std::lower_bound(actors_.begin(), actors_.end(), actor,
                                     [](const ActorId& x, std::string_view y) { return x < y; });
    if (it == actors_.end() || *it != actor) return std::nullopt;
    return static_cast<VertexId>(it - actors_.begin());
}

VertexId GraphSnapshot::vertex(std::string_view actor) const {
    if (auto v = find(actor)) return *v;
    throw NotFound("unknown actor '" + std::string(actor) + "'");
}

std::uint64_t GraphSnapshot::strength(VertexId v) const {
    std::uint64_t total = 0;
    for (const Neighbor& nb : neighbors(v)) total += nb.weight;
    return total;
}

bool GraphSnapshot::has_edge(VertexId u, VertexId v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), Neighbor{v, 0},
                              [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
}

GraphSnapshot GraphSnapshot::induced(std::span<const VertexId> vertices) const {
    std::vector<VertexId> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    constexpr auto absent = static_cast<VertexId>(-1);
    std::vector<VertexId> remap(actors_.size(), absent);
    std::vector<ActorId> actors;
    actors.reserve(keep.size());
    for (VertexId v : keep) {
        remap.at(v) = static_cast<VertexId>(actors.size());
        actors.push_back(actors_[v]);
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        if (remap[e.u] != absent && remap[e.v] != absent) edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
    return GraphSnapshot(label_, std::move(actors), std::move(edges));
}

GraphSnapshot GraphSnapshot::relabeled(std::string label) const {
    GraphSnapshot copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

void SnapshotBuilder::add_actor(std::string_view actor) {
    actors_.insert(normalize_actor(actor));
}

void SnapshotBuilder::add_interaction(std::string_view a, std::string_view b, std::uint64_t weight) {
    ActorId x = normalize_actor(a);
    ActorId y = normalize_actor(b);
    if (x == y) throw InvalidArgument("self-loop on actor '" + x + "'");
    if (weight == 0) throw InvalidArgument("interaction weight must be at least 1");
    if (y < x) std::swap(x, y);
    actors_.insert(x);
    actors_.insert(y);
    weights_[{std::move(x), std::move(y)}] += weight;
}

GraphSnapshot SnapshotBuilder::build(std::string label) const {
    std::vector<ActorId> actors(actors_.begin(), actors_.end());
    std::vector<Edge> edges;
    edges.reserve(weights_.size());
    const auto index_of = [&](const ActorId& id) {
        return static_cast<VertexId>(std::lower_bound(actors.begin(), actors.end(), id) - actors.begin());
    };
    // weights_ iterates in (a, b) lexicographic order with a < b, which is (u, v) order.
    for (const auto& [pair, w] : weights_) edges.push_back({index_of(pair.first), index_of(pair.second), w});
    return GraphSnapshot(std::move(label), std::move(actors), std::move(edges));
}

std::size_t degree(const GraphSnapshot& s, std::string_view actor) {
    return s.degree(s.vertex(actor));
}

std::uint64_t strength(const GraphSnapshot& s, std::string_view actor) {
    return s.strength(s.vertex(actor));
}

std::vector<std::uint32_t> component_labels(const GraphSnapshot& s) {
    const std::size_t n = s.num_actors();
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> label(n, unset);
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (label[root] != unset) continue;
        label[root] = root;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : s.neighbors(v)) {
                if (label[nb.vertex] == unset) {
                    label[nb.vertex] = root;
                    stack.push_back(nb.vertex);
                }
            }
        }
    }
    return label;
}

GraphSnapshot giant_component(const GraphSnapshot& s) {
    if (s.num_actors() == 0) return s;
    const auto label = component_labels(s);
    std::vector<std::size_t> size(s.num_actors(), 0);
    for (auto c : label) ++size[c];
    // Component ids are their smallest vertex, and vertex order is label order,
    // so scanning ids upward with a strict comparison gives the lexicographic tiebreak.
    std::uint32_t best = 0;
    for (std::uint32_t c = 0; c < size.size(); ++c) {
        if (size[c] > size[best]) best = c;
    }
    std::vector<VertexId> members;
    members.reserve(size[best]);
    for (VertexId v = 0; v < label.size(); ++v) {
        if (label[v] == best) members.push_back(v);
    }
    return s.induced(members);
}

SnapshotSeries build_cumulative_snapshots(std::span<const InteractionEvent> events,
                                          std::span<const Timestamp> breakpoints,
                                          std::span<const std::string> labels,
                                          std::span<const ActorArrival> arrivals) {
    if (breakpoints.empty()) throw InvalidArgument("at least one breakpoint is required");
    if (labels.size() != breakpoints.size())
        throw InvalidArgument("period labels and breakpoints differ in length");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i - 1] < breakpoints[i])) throw InvalidArgument("breakpoints must be strictly increasing");
    }

    SnapshotSeries out;
    std::vector<std::size_t> event_order(events.size());
    std::iota(event_order.begin(), event_order.end(), 0);
    std::stable_sort(event_order.begin(), event_order.end(),
                     [&](std::size_t x, std::size_t y) { return events[x].time < events[y].time; });
    std::vector<std::size_t> arrival_order(arrivals.size());
    std::iota(arrival_order.begin(), arrival_order.end(), 0);
    std::stable_sort(arrival_order.begin(), arrival_order.end(),
                     [&](std::size_t x, std::size_t y) { return arrivals[x].time < arrivals[y].time; });

    SnapshotBuilder builder;
    std::vector<IngestWarning> warnings;
    std::size_t next_event = 0;
    std::size_t next_arrival = 0;
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        const Timestamp& cut = breakpoints[k];
        for (; next_event < event_order.size() && events[event_order[next_event]].time <= cut; ++next_event) {
            const std::size_t idx = event_order[next_event];
            const InteractionEvent& ev = events[idx];
            try {
                builder.add_interaction(ev.a, ev.b, ev.weight);
            } catch (const InvalidArgument& e) {
                warnings.push_back({idx + 1, e.what()});
            }
        }
        for (; next_arrival < arrival_order.size() && arrivals[arrival_order[next_arrival]].time <= cut;
             ++next_arrival) {
            const std::size_t idx = arrival_order[next_arrival];
            try {
                builder.add_actor(arrivals[idx].actor);
            } catch (const InvalidArgument& e) {
                warnings.push_back({idx + 1, std::string("arrival: ") + e.what()});
            }
        }
        out.snapshots.push_back(builder.build(labels[k]));
    }
    std::sort(warnings.begin(), warnings.end(),
              [](const IngestWarning& x, const IngestWarning& y) { return x.record < y.record; });
    out.warnings = std::move(warnings);
    return out;
}

}  // namespace netevolve
