#pragma once

#include <cstdlib>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <utility>

#include "netevolve/graph.hpp"

namespace fixtures {

using netevolve::GraphSnapshot;
using netevolve::SnapshotBuilder;

struct WeightedPair {
    const char* a;
    const char* b;
    std::uint64_t weight = 1;
};

inline GraphSnapshot graph(std::initializer_list<WeightedPair> edges, std::initializer_list<const char*> isolated = {},
                           std::string label = "g") {
    SnapshotBuilder b;
    for (const auto& e : edges) b.add_interaction(e.a, e.b, e.weight);
    for (const char* v : isolated) b.add_actor(v);
    return b.build(std::move(label));
}

inline std::string node(std::size_t i) {
    std::string s = std::to_string(i);
    return "n" + std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

/// Center "c" plus `leaves` leaves.
inline GraphSnapshot star(std::size_t leaves) {
    SnapshotBuilder b;
    for (std::size_t i = 0; i < leaves; ++i) b.add_interaction("c", "l" + node(i));
    return b.build("star");
}

inline GraphSnapshot complete(std::size_t n) {
    SnapshotBuilder b;
    for (std::size_t i = 0; i < n; ++i) {
        b.add_actor(node(i));
        for (std::size_t j = i + 1; j < n; ++j) b.add_interaction(node(i), node(j));
    }
    return b.build("complete");
}

inline GraphSnapshot path(std::size_t n) {
    SnapshotBuilder b;
    b.add_actor(node(0));
    for (std::size_t i = 0; i + 1 < n; ++i) b.add_interaction(node(i), node(i + 1));
    return b.build("path");
}

inline std::filesystem::path data_dir() {
    if (const char* dir = std::getenv("NETEVOLVE_DATA_DIR")) return dir;
    return std::filesystem::path(__FILE__).parent_path().parent_path() / "data";
}

}  // namespace fixtures
