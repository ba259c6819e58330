#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netevolve/errors.hpp"
#include "netevolve/timestamp.hpp"

namespace netevolve {

/// Actor label after surrounding-whitespace trim. Identity is exact string equality.
using ActorId = std::string;

/// Trims whitespace; throws InvalidArgument when nothing is left.
ActorId normalize_actor(std::string_view raw);

/// One timestamped, weighted, undirected interaction. (a, b) and (b, a) are the same pair.
struct InteractionEvent {
    Timestamp time;
    ActorId a;
    ActorId b;
    std::uint64_t weight = 1;

    bool operator==(const InteractionEvent&) const = default;
};

/// Registers an actor at a point in time without creating any tie
/// (single-author publications, isolated vertices of generated graphs).
struct ActorArrival {
    Timestamp time;
    ActorId actor;

    bool operator==(const ActorArrival&) const = default;
};

using VertexId = std::uint32_t;

struct Neighbor {
    VertexId vertex;
    std::uint64_t weight;
};

/// Undirected edge with u < v.
struct Edge {
    VertexId u;
    VertexId v;
    std::uint64_t weight;

    bool operator==(const Edge&) const = default;
};

/// Immutable weighted undirected simple graph.
///
/// Vertices are numbered in lexicographic order of their actor labels, so two
/// snapshots with the same content are identical regardless of how they were
/// built. Adjacency lists are sorted by neighbor id.
class GraphSnapshot {
public:
    GraphSnapshot() = default;

    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] std::size_t num_actors() const { return actors_.size(); }
    /// Distinct connected pairs (L).
    [[nodiscard]] std::size_t num_links() const { return edges_.size(); }
    /// Sum of edge weights (W).
    [[nodiscard]] std::uint64_t sum_links() const { return sum_links_; }

    [[nodiscard]] std::span<const ActorId> actors() const { return actors_; }
    [[nodiscard]] const ActorId& actor(VertexId v) const { return actors_.at(v); }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

    [[nodiscard]] std::optional<VertexId> find(std::string_view actor) const;
    /// Throws NotFound for unknown actors.
    [[nodiscard]] VertexId vertex(std::string_view actor) const;

    [[nodiscard]] std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] std::uint64_t strength(VertexId v) const;
    [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;

    /// Subgraph induced on the given vertices (any order, duplicates ignored).
    [[nodiscard]] GraphSnapshot induced(std::span<const VertexId> vertices) const;
    [[nodiscard]] GraphSnapshot relabeled(std::string label) const;

    bool operator==(const GraphSnapshot& other) const {
        return label_ == other.label_ && actors_ == other.actors_ && edges_ == other.edges_;
    }

private:
    friend class SnapshotBuilder;

    GraphSnapshot(std::string label, std::vector<ActorId> actors, std::vector<Edge> edges);

    std::string label_;
    std::vector<ActorId> actors_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
    std::uint64_t sum_links_ = 0;
};

/// Mutable accumulator; repeated pairs add weight instead of creating parallel edges.
class SnapshotBuilder {
public:
    /// Throws InvalidArgument on empty labels.
    void add_actor(std::string_view actor);
    /// Throws InvalidArgument on self-loops, empty labels, or zero weight.
    void add_interaction(std::string_view a, std::string_view b, std::uint64_t weight = 1);

    [[nodiscard]] std::size_t num_actors() const { return actors_.size(); }
    [[nodiscard]] GraphSnapshot build(std::string label) const;

private:
    std::set<ActorId, std::less<>> actors_;
    std::map<std::pair<ActorId, ActorId>, std::uint64_t> weights_;
};

/// Throws NotFound for unknown actors.
std::size_t degree(const GraphSnapshot& s, std::string_view actor);
std::uint64_t strength(const GraphSnapshot& s, std::string_view actor);

/// Component index per vertex; components are numbered by their smallest vertex.
std::vector<std::uint32_t> component_labels(const GraphSnapshot& s);

/// Largest connected component as an induced subgraph. Ties on size go to the
/// component holding the lexicographically smallest actor. Empty in, empty out.
GraphSnapshot giant_component(const GraphSnapshot& s);

struct SnapshotSeries {
    std::vector<GraphSnapshot> snapshots;
    std::vector<IngestWarning> warnings;  // record = 1-based event position
};

/// Cumulative snapshots: snapshot k holds every event (and arrival) with
/// time <= breakpoints[k]. Self-loops and zero weights are skipped with a warning.
/// Throws InvalidArgument for empty or non-increasing breakpoints and for a
/// labels/breakpoints length mismatch.
SnapshotSeries build_cumulative_snapshots(std::span<const InteractionEvent> events,
                                          std::span<const Timestamp> breakpoints,
                                          std::span<const std::string> labels,
                                          std::span<const ActorArrival> arrivals = {});

}  // namespace netevolve
