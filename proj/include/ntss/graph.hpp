#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ntss/vertex_set.hpp"

namespace ntss {

// Finite simple undirected graph on vertices 1..n with sorted adjacency lists.
// Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates: ids in range, no self-loops, no duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, sorted

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_; // adj_[0] unused
};

// Connected components of the subgraph induced by `subset`,
// ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& subset);

// Unique 2-coloring of a connected induced component, canonicalized so that
// A contains the smallest vertex. Absent iff the component has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g, const VertexSet& component);

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);   // N(S)
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s); // N[S]

} // namespace ntss
