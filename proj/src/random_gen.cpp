#include "ntss/random_gen.hpp"

#include <stdexcept>

namespace ntss {

Graph random_graph(int n, int edge_percent, Lcg& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_below(100) < static_cast<std::uint64_t>(edge_percent))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

ThresholdMap random_restricted_thresholds(const Graph& g, Lcg& rng) {
    ThresholdMap tau;
    tau.tau.assign(g.vertex_count() + 1, 0);
    for (int u = 1; u <= g.vertex_count(); ++u) {
        int d = g.degree(u);
        if (d == 0)
            tau.tau[u] = 0;
        else if (d == 1)
            tau.tau[u] = static_cast<int>(rng.next_below(2));
        else {
            switch (rng.next_below(3)) {
            case 0:
                tau.tau[u] = 0;
                break;
            case 1:
                tau.tau[u] = 1;
                break;
            default:
                tau.tau[u] = d;
                break;
            }
        }
    }
    return tau;
}

Instance random_instance(int n, int edge_percent, Lcg& rng) {
    Graph g = random_graph(n, edge_percent, rng);
    ThresholdMap tau = random_restricted_thresholds(g, rng);
    return Instance::make(std::move(g), std::move(tau));
}

Instance random_tree_instance(int n, Lcg& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v)
        edges.emplace_back(static_cast<int>(rng.next_below(v - 1)) + 1, v);
    Graph g = Graph::from_edges(n, edges);
    ThresholdMap tau = random_restricted_thresholds(g, rng);
    return Instance::make(std::move(g), std::move(tau));
}

Instance random_partial_ktree_instance(int n, int k, int keep_percent, Lcg& rng) {
    if (n < 1)
        throw std::invalid_argument("random_partial_ktree_instance: need n >= 1");
    std::vector<std::pair<int, int>> ktree_edges;
    std::vector<std::vector<int>> cliques; // k-cliques available for attachment

    int base = std::min(n, k + 1);
    for (int u = 1; u <= base; ++u)
        for (int v = u + 1; v <= base; ++v)
            ktree_edges.emplace_back(u, v);
    if (base == k + 1) {
        for (int skip = 1; skip <= k + 1; ++skip) {
            std::vector<int> cl;
            for (int u = 1; u <= k + 1; ++u)
                if (u != skip)
                    cl.push_back(u);
            cliques.push_back(std::move(cl));
        }
    }
    for (int v = base + 1; v <= n; ++v) {
        const std::vector<int> attach = cliques[rng.next_below(cliques.size())];
        for (int u : attach)
            ktree_edges.emplace_back(u, v);
        for (std::size_t drop = 0; drop < attach.size(); ++drop) {
            std::vector<int> cl;
            for (std::size_t i = 0; i < attach.size(); ++i)
                if (i != drop)
                    cl.push_back(attach[i]);
            cl.push_back(v);
            cliques.push_back(std::move(cl));
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (auto e : ktree_edges)
        if (rng.next_below(100) < static_cast<std::uint64_t>(keep_percent))
            edges.push_back(e);
    Graph g = Graph::from_edges(n, edges);
    ThresholdMap tau = random_restricted_thresholds(g, rng);
    return Instance::make(std::move(g), std::move(tau));
}

} // namespace ntss
