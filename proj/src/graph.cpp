#include "ntss/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ntss {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw std::runtime_error("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n + 1, {});
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::runtime_error("graph: vertex id out of range in edge " + std::to_string(u) + " " +
                                     std::to_string(v));
        if (u == v)
            throw std::runtime_error("graph: self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int u = 1; u <= n; ++u) {
        auto& a = g.adj_[u];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::runtime_error("graph: duplicate edge at vertex " + std::to_string(u));
    }
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& subset) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    std::vector<int> stack;
    subset.for_each([&](int s) {
        if (seen.test(s))
            return;
        VertexSet comp(n);
        stack.push_back(s);
        seen.set(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.set(u);
            for (int v : g.neighbors(u))
                if (subset.test(v) && !seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
        }
        out.push_back(std::move(comp));
    });
    // for_each visits ascending ids, so components come out ordered by smallest member
    return out;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g, const VertexSet& component) {
    int n = g.vertex_count();
    if (component.empty())
        return std::make_pair(VertexSet(n), VertexSet(n));
    int root = component.smallest();
    std::vector<int> color(n + 1, -1);
    std::vector<int> queue{root};
    color[root] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (int v : g.neighbors(u)) {
            if (!component.test(v))
                continue;
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return std::nullopt;
            }
        }
    }
    VertexSet a(n), b(n);
    component.for_each([&](int v) {
        if (color[v] == 0)
            a.set(v);
        else
            b.set(v);
    });
    return std::make_pair(std::move(a), std::move(b));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](int u) {
        for (int v : g.neighbors(u))
            out.set(v);
    });
    out -= s;
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = open_neighborhood(g, s);
    out |= s;
    return out;
}

} // namespace ntss
