#pragma once

// Brute-force reference implementations used only by tests. They share no code
// path with the library beyond reading the snapshot's vertices and edges.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "netevolve/graph.hpp"

namespace oracle {

using netevolve::GraphSnapshot;

inline std::vector<std::vector<char>> adjacency_matrix(const GraphSnapshot& s) {
    const std::size_t n = s.num_actors();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : s.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    return adj;
}

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// All-pairs hop distances by Floyd-Warshall.
inline std::vector<std::vector<std::uint32_t>> all_pairs(const GraphSnapshot& s) {
    const std::size_t n = s.num_actors();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : s.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

struct PathOracle {
    std::size_t diameter = 0;
    double avg_distance = 0.0;
};

/// Diameter over the largest component (ties: component containing the
/// smallest vertex index), average over reachable unordered pairs.
inline PathOracle path_stats(const GraphSnapshot& s) {
    const auto d = all_pairs(s);
    const std::size_t n = s.num_actors();
    std::size_t best_size = 0, best_root = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool is_root = true;
        for (std::size_t j = 0; j < i; ++j) is_root = is_root && d[i][j] >= kInf;
        if (!is_root) continue;
        std::size_t size = 0;
        for (std::size_t j = 0; j < n; ++j) size += d[i][j] < kInf;
        if (size > best_size) {
            best_size = size;
            best_root = i;
        }
    }
    PathOracle out;
    long double total = 0;
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d[i][j] >= kInf) continue;
            total += d[i][j];
            ++pairs;
            if (d[best_root][i] < kInf) out.diameter = std::max<std::size_t>(out.diameter, d[i][j]);
        }
    }
    out.avg_distance = static_cast<double>(total / pairs);
    return out;
}

/// Local clustering by checking every neighbor pair in the adjacency matrix.
inline std::vector<double> local_clustering(const GraphSnapshot& s) {
    const auto adj = adjacency_matrix(s);
    const std::size_t n = s.num_actors();
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> nb;
        for (std::size_t u = 0; u < n; ++u)
            if (adj[v][u]) nb.push_back(u);
        if (nb.size() < 2) continue;
        std::size_t closed = 0, all = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                ++all;
                closed += adj[nb[i]][nb[j]];
            }
        out[v] = static_cast<double>(closed) / static_cast<double>(all);
    }
    return out;
}

/// Betweenness from all-pairs distances and geodesic counts:
/// b(v) = sum over s<t of sigma_sv * sigma_vt / sigma_st when v lies on a geodesic.
inline std::vector<double> betweenness(const GraphSnapshot& s) {
    const auto d = all_pairs(s);
    const std::size_t n = s.num_actors();
    // sigma[i][j]: number of shortest paths, by increasing distance.
    std::vector<std::vector<long double>> sigma(n, std::vector<long double>(n, 0));
    const auto adj = adjacency_matrix(s);
    for (std::size_t i = 0; i < n; ++i) {
        sigma[i][i] = 1;
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; ++j)
            if (d[i][j] < kInf) order.push_back(j);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return d[i][a] < d[i][b]; });
        for (std::size_t j : order) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (adj[j][k] && d[i][k] + 1 == d[i][j]) sigma[i][j] += sigma[i][k];
        }
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        long double b = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = a + 1; c < n; ++c) {
                if (a == v || c == v || d[a][c] >= kInf) continue;
                if (d[a][v] + d[v][c] == d[a][c]) b += sigma[a][v] * sigma[v][c] / sigma[a][c];
            }
        out[v] = static_cast<double>(b);
    }
    return out;
}

/// On a tree: pairs separated by removing v.
inline std::vector<double> tree_betweenness(const GraphSnapshot& s) {
    const std::size_t n = s.num_actors();
    const auto adj = adjacency_matrix(s);
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> comp(n, -1);
        std::vector<std::uint64_t> sizes;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == v || comp[r] >= 0) continue;
            std::vector<std::size_t> stack{r};
            comp[r] = static_cast<int>(sizes.size());
            std::uint64_t size = 0;
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                ++size;
                for (std::size_t y = 0; y < n; ++y)
                    if (adj[x][y] && y != v && comp[y] < 0) {
                        comp[y] = comp[r];
                        stack.push_back(y);
                    }
            }
            sizes.push_back(size);
        }
        // Only components adjacent to v are joined through it; on a connected tree that is all of them.
        std::uint64_t sum = 0, sq = 0;
        for (auto c : sizes) {
            sum += c;
            sq += c * c;
        }
        out[v] = static_cast<double>((sum * sum - sq) / 2);
    }
    return out;
}

/// Textbook Pearson in long double: (n Sxy - Sx Sy) / sqrt((n Sxx - Sx^2)(n Syy - Sy^2)).
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    const long double n = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += (long double)x[i] * x[i];
        syy += (long double)y[i] * y[i];
        sxy += (long double)x[i] * y[i];
    }
    return static_cast<double>((n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

/// rank = 1 + #smaller + (#equal - 1) / 2, by exhaustive comparison.
inline std::vector<double> ranks(const std::vector<double>& x) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t less = 0, equal = 0;
        for (double v : x) {
            less += v < x[i];
            equal += v == x[i];
        }
        r[i] = 1.0 + static_cast<double>(less) + (static_cast<double>(equal) - 1.0) / 2.0;
    }
    return r;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(ranks(x), ranks(y));
}

struct Line {
    double slope;
    double intercept;
    double r_squared;
};

/// Least squares by the raw normal equations in long double; R^2 as squared correlation.
inline Line regression(const std::vector<std::pair<double, double>>& pts) {
    long double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const long double n = pts.size();
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += (long double)x * x;
        sxy += (long double)x * y;
        syy += (long double)y * y;
    }
    const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const long double intercept = (sy - slope * sx) / n;
    const long double r = (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
    return {static_cast<double>(slope), static_cast<double>(intercept), static_cast<double>(r * r)};
}

}  // namespace oracle
