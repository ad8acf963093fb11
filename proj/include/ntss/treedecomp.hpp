#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ntss/instance.hpp"

namespace ntss {

// Bags indexed by node id 0..k-1; tree_edges form a tree over the nodes.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

// .td format: comment lines `c ...`, header `s td <#bags> <max-bag-size> <n>`,
// bag lines `b <bag-id> <v1> <v2> ...`, then tree edges `<i> <j>` (all 1-based).
TreeDecomposition parse_td(const std::string& text, const Instance& inst);

// Throws std::runtime_error describing the first violated decomposition property.
void validate_td(const TreeDecomposition& td, const Graph& g);

// Min-fill elimination ordering, ties broken by lowest vertex id.
// For the empty graph returns a single empty bag.
TreeDecomposition heuristic_td(const Graph& g);

// Intersects every bag with `keep`; the tree is unchanged.
TreeDecomposition restrict_td(const TreeDecomposition& td, const VertexSet& keep);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    std::vector<int> bag; // sorted ascending
    int child0 = -1;
    int child1 = -1;
    int vertex = 0; // introduced/forgotten vertex
};

// Rooted binary tree; leaves and the root carry empty bags.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td);

// Checks the node-type invariants and that the tree still is a valid
// decomposition of g.
void validate_nice(const NiceTreeDecomposition& ntd, const Graph& g);

TreeDecomposition nice_to_td(const NiceTreeDecomposition& ntd, int n);

} // namespace ntss
