#include "ntss/kernelize.hpp"

#include <algorithm>
#include <cassert>

namespace ntss {

std::vector<VertexSet> full_components(const Instance& inst) {
    const Graph& g = inst.graph();
    int n = g.vertex_count();
    VertexSet full(n);
    for (int u = 1; u <= n; ++u)
        if (inst.tau(u) == g.degree(u))
            full.set(u);
    std::vector<VertexSet> out;
    for (VertexSet& comp : components(g, full))
        if (comp.count() >= 2)
            out.push_back(std::move(comp));
    return out;
}

Reduction reduce_once(const Instance& inst, const VertexSet& component) {
    const Graph& g = inst.graph();
    int n = g.vertex_count();
    VertexSet removed = closed_neighborhood(g, component);

    Reduction red;
    red.forced = removed;
    red.vertex_map.push_back(0); // kernel ids are 1-based
    std::vector<int> to_new(n + 1, 0);
    for (int u = 1; u <= n; ++u)
        if (!removed.test(u)) {
            red.vertex_map.push_back(u);
            to_new[u] = static_cast<int>(red.vertex_map.size()) - 1;
        }
    int n2 = static_cast<int>(red.vertex_map.size()) - 1;

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!removed.test(u) && !removed.test(v))
            edges.emplace_back(to_new[u], to_new[v]);
    Graph g2 = Graph::from_edges(n2, edges);

    ThresholdMap tau2;
    tau2.tau.assign(n2 + 1, 0);
    for (int w = 1; w <= n2; ++w) {
        int u = red.vertex_map[w];
        int lost = 0;
        for (int v : g.neighbors(u))
            if (removed.test(v))
                ++lost;
        tau2.tau[w] = std::max(0, inst.tau(u) - lost);
    }

    // Instance::make re-checks the restricted regime, which the reduction preserves.
    red.reduced = Instance::make(std::move(g2), std::move(tau2));
    return red;
}

Kernelization kernelize(const Instance& inst) {
    Kernelization k;
    k.forced = VertexSet(inst.n());
    k.kernel = inst;
    // cur_to_orig[current id] = original id
    std::vector<int> cur_to_orig(inst.n() + 1);
    for (int u = 0; u <= inst.n(); ++u)
        cur_to_orig[u] = u;

    for (;;) {
        std::vector<VertexSet> comps = full_components(k.kernel);
        if (comps.empty())
            break;
        const VertexSet& u_cur = comps.front();
        Reduction red = reduce_once(k.kernel, u_cur);

        ReductionRound round;
        round.component = VertexSet(inst.n());
        round.closed_neighborhood = VertexSet(inst.n());
        u_cur.for_each([&](int v) { round.component.set(cur_to_orig[v]); });
        red.forced.for_each([&](int v) {
            int orig = cur_to_orig[v];
            round.closed_neighborhood.set(orig);
            k.forced.set(orig);
        });
        k.rounds.push_back(std::move(round));

        std::vector<int> next_map(red.vertex_map.size());
        for (std::size_t w = 1; w < red.vertex_map.size(); ++w)
            next_map[w] = cur_to_orig[red.vertex_map[w]];
        cur_to_orig = std::move(next_map);
        k.kernel = std::move(red.reduced);
    }

    k.vertex_map = std::move(cur_to_orig);
    assert(is_kernelized(k.kernel));
    return k;
}

bool is_kernelized(const Instance& inst) {
    const Graph& g = inst.graph();
    for (auto [u, v] : g.edges())
        if (inst.tau(u) == g.degree(u) && inst.tau(v) == g.degree(v))
            return false;
    return true;
}

} // namespace ntss
