#pragma once

#include <vector>

#include "ntss/instance.hpp"

namespace ntss {

// One reduction round, recorded in original vertex ids.
struct ReductionRound {
    VertexSet component;           // U: removed component of adjacent full-threshold vertices
    VertexSet closed_neighborhood; // N[U]: the vertices forced into every target set
};

// Result of a single reduction step. The reduced instance uses fresh dense ids;
// vertex_map[reduced id] = id in the input instance.
struct Reduction {
    Instance reduced;
    VertexSet forced; // N[U], input ids
    std::vector<int> vertex_map;
};

// Fixpoint of the reduction. forced and the image of vertex_map partition the
// original vertex set; the kernel has no edge joining two vertices with
// tau(u) = deg(u), and still satisfies the restricted-threshold regime.
struct Kernelization {
    Instance kernel;
    VertexSet forced;            // original ids
    std::vector<int> vertex_map; // kernel id -> original id
    std::vector<ReductionRound> rounds;
};

// Components of order >= 2 of the subgraph induced on {u : tau(u) = deg(u)},
// ascending by smallest member.
std::vector<VertexSet> full_components(const Instance& inst);

// Removes N[U] and rethresholds tau'(u) = max{0, tau(u) - |N(u) ∩ N[U]|}.
// `component` must be an output of full_components.
Reduction reduce_once(const Instance& inst, const VertexSet& component);

// Repeats reduce_once on the first full component until none remains.
Kernelization kernelize(const Instance& inst);

// True iff no edge joins two vertices with tau(u) = deg(u).
bool is_kernelized(const Instance& inst);

} // namespace ntss
