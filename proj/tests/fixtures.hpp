#pragma once

#include <vector>

#include "ntss/instance.hpp"

namespace ntss::fixtures {

inline Instance make(int n, std::vector<std::pair<int, int>> edges, std::vector<int> tau) {
    Graph g = Graph::from_edges(n, edges);
    ThresholdMap t;
    t.tau.assign(n + 1, 0);
    for (int u = 1; u <= n; ++u)
        t.tau[u] = tau[u - 1];
    return Instance::make(std::move(g), std::move(t));
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u < n; ++u)
        e.emplace_back(u, u + 1);
    return e;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
    auto e = path_edges(n);
    e.emplace_back(1, n);
    return e;
}

inline Instance path_all_ones(int n) { return make(n, path_edges(n), std::vector<int>(n, 1)); }

inline Instance cycle_all_ones(int n) { return make(n, cycle_edges(n), std::vector<int>(n, 1)); }

// Star with center 1 and `leaves` leaves; center threshold deg, leaves threshold 1.
inline Instance star_all_full(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int l = 2; l <= leaves + 1; ++l)
        e.emplace_back(1, l);
    std::vector<int> tau(leaves + 1, 1);
    tau[0] = leaves;
    return make(leaves + 1, e, tau);
}

// c=1, b1=2, b2=3, a1=4, a2=5 with legs c-b1-a1 and c-b2-a2;
// tau = (1, 2, 2, 0, 0). Minimum target set has order 3.
inline Instance spider() { return make(5, {{1, 2}, {1, 3}, {2, 4}, {3, 5}}, {1, 2, 2, 0, 0}); }

inline Instance complete_all_ones(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            e.emplace_back(u, v);
    return make(n, e, std::vector<int>(n, 1));
}

} // namespace ntss::fixtures
