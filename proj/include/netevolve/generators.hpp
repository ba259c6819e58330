#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "netevolve/graph.hpp"

namespace netevolve {

// Seeded synthetic networks used as ground truth for the metric and fitting code.
//
// The random stream is std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Uniform draws are derived from raw 64-bit outputs here instead of
// through <random> distributions (whose algorithms are implementation-defined),
// so a seed yields the same graph on every platform.

enum class Model { ErdosRenyi, WattsStrogatz, BarabasiAlbert };

std::string_view to_string(Model model);
/// Accepts "er", "ws", "ba". Throws InvalidArgument otherwise.
Model parse_model(std::string_view name);

struct GeneratorSpec {
    Model model = Model::ErdosRenyi;
    std::size_t n = 0;
    double param1 = 0.0;  // er: edge probability p; ws: even neighbor count k; ba: edges per arrival m
    double param2 = 0.0;  // ws: rewiring probability beta
    std::uint64_t seed = 0;
};

/// Throws InvalidArgument when the spec violates its model's constraints.
void validate(const GeneratorSpec& spec);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform on [0, bound), unbiased by rejection. bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Generated graph as ingestible events. BA edges carry the arrival step of
/// the newer endpoint as time (seed clique at 0); ER and WS use time 0.
/// Actors left without any edge appear as arrivals.
struct GeneratedEvents {
    std::vector<InteractionEvent> events;
    std::vector<ActorArrival> arrivals;
};

/// Vertex i is labelled "v" followed by i zero-padded to the width of n-1,
/// so label order equals index order.
std::string vertex_label(std::size_t index, std::size_t n);

GeneratedEvents generate_events(const GeneratorSpec& spec);
GraphSnapshot generate(const GeneratorSpec& spec, std::string label = "generated");

/// Each of the n(n-1)/2 pairs independently with probability p.
GraphSnapshot erdos_renyi(const GeneratorSpec& spec);

/// Ring lattice (k/2 neighbors per side), each lattice edge rewired with
/// probability beta to a uniform non-self, non-duplicate target. The edge is
/// kept when its source is already adjacent to everyone.
GraphSnapshot watts_strogatz(const GeneratorSpec& spec);

/// Seed clique on m+1 vertices; each arriving vertex links to m distinct
/// existing vertices drawn proportionally to degree.
GraphSnapshot barabasi_albert(const GeneratorSpec& spec);

}  // namespace netevolve
