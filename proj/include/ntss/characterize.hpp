#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ntss/instance.hpp"

namespace ntss {

// A connected all-threshold-1 component of order >= 2 whose induced subgraph
// is not bipartite, together with its closed neighborhood.
struct PComponent {
    VertexSet members;
    VertexSet closed_nbhd;
};

// The bipartite counterpart. With parts A and B:
//   A' = N(B) \ N[A],  B' = N(A) \ N[B],  C = N(A) ∩ N(B),
//   Ā = A ∪ A' ∪ C,    B̄ = B ∪ B' ∪ C.
// A is the side containing the smallest vertex id.
struct QComponent {
    VertexSet members;
    VertexSet a, b;
    VertexSet a_prime, b_prime, c;
    VertexSet a_bar, b_bar;
};

// Structure of a kernelized instance relevant to target-set membership.
// Sentinels are threshold-1 vertices all of whose neighbors are Full-class;
// components that have order 1 or contain a threshold-0 vertex impose no
// condition and are not stored.
struct Classification {
    std::vector<PComponent> p_components;
    std::vector<QComponent> q_components;
    std::vector<int> sentinels;
    VertexSet full_vertices; // Full-class vertices (tau = deg >= 2)
};

// Requires a kernelized instance (throws std::invalid_argument otherwise).
Classification classify(const Instance& inst);

struct SentinelCondition {
    int vertex;
    std::vector<std::pair<int, VertexSet>> neighbors; // (v, N(v))
};

// X is a target set iff every hitting set intersects X, every pair is hit on
// both sides, and every sentinel u has neighbors v1 ∈ X and v2 with N(v2) ⊆ X.
struct ConditionSet {
    std::vector<VertexSet> hitting;                          // N[U] per p-component
    std::vector<std::pair<VertexSet, VertexSet>> pair_hitting; // (Ā, B̄) per q-component
    std::vector<SentinelCondition> sentinel_constraints;
};

ConditionSet extract_conditions(const Classification& cls, const Graph& g);
bool satisfies(const ConditionSet& cond, const VertexSet& x);

// Kernelize, require forced ⊆ x, then check the kernel conditions on the
// restriction of x. Agrees with is_target_set.
bool decide_target_set_fast(const Instance& inst, const VertexSet& x);

// Stable text form, one condition per line (CLI `conditions` output).
std::string format_conditions(const ConditionSet& cond);

} // namespace ntss
