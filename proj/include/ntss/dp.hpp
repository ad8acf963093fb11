#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ntss/characterize.hpp"
#include "ntss/instance.hpp"
#include "ntss/treedecomp.hpp"

namespace ntss {

constexpr std::int32_t kInfCost = INT32_MAX / 4;

// Per-node pattern space. A pattern is (S, bits) where S is a subset of the
// bag (one bit per bag position, ascending) and bits holds, in order: one bit
// per non-bipartite component touching the bag, a bit pair (Ā, B̄) per
// bipartite component touching the bag, a bit pair (v1, v2) per sentinel in
// the bag, and one bit per Full-class bag vertex. Table index = (bits << |bag|) | S.
//
// Table semantics at a node t with bag B, subtree graph G_t, and V- = V(G_t)\B:
// cost(S, bits) is the minimum of |X \ B| over the X ⊆ V(G_t) such that
//   - X ∩ B = S;
//   - every fully-forgotten non-bipartite component U (U ⊆ V-) has X ∩ N[U] ≠ ∅,
//     and every fully-forgotten bipartite one has X hitting both Ā and B̄;
//   - every forgotten sentinel u has neighbors v1, v2 in G_t with v1 ∈ X and
//     N_{G_t}(v2) ⊆ X, where a bag witness v2 only counts if its bit is 1;
//   - a set component/sentinel bit additionally demands the corresponding
//     witness inside V- (hitting vertex, selected neighbor, covered neighbor);
//     a clear bit demands nothing;
//   - a set Full-vertex bit demands N_{G_t}(u) ⊆ X.
// Bits record promises about the forgotten part, so obligations created when a
// vertex leaves the bag can be discharged by material found elsewhere later.
struct PatternLayout {
    std::vector<int> bag;     // ascending
    std::vector<int> p_idx;   // global indices of p-components with a bag vertex
    std::vector<int> q_idx;
    std::vector<int> r_idx;   // sentinel indices whose vertex is in the bag
    std::vector<int> d_verts; // Full-class bag vertices, ascending

    int s_bits() const { return static_cast<int>(bag.size()); }
    int family_bits() const {
        return static_cast<int>(p_idx.size() + 2 * q_idx.size() + 2 * r_idx.size());
    }
    int cond_bits() const { return family_bits() + static_cast<int>(d_verts.size()); }

    int p_bit(int a) const { return a; }
    int q_bit(int a) const { return static_cast<int>(p_idx.size()) + 2 * a; } // +1 for the B̄ bit
    int r_bit(int a) const { return static_cast<int>(p_idx.size() + 2 * q_idx.size()) + 2 * a; }
    int d_bit(int a) const { return family_bits() + a; }

    std::size_t table_size() const { return std::size_t{1} << (s_bits() + cond_bits()); }
    std::size_t index(std::uint32_t s, std::uint32_t bits) const {
        return (static_cast<std::size_t>(bits) << s_bits()) | s;
    }

    int bag_pos(int v) const;
    int p_pos(int i) const;
    int q_pos(int i) const;
    int r_pos(int i) const;
    int d_pos(int v) const;
};

struct DpNode {
    PatternLayout layout;
    std::vector<std::int32_t> cost;
    VertexSet subtree_vertices;
};

struct DpTables {
    std::vector<DpNode> nodes; // parallel to NiceTreeDecomposition::nodes
    std::int32_t root_cost = kInfCost;
};

// Bottom-up pattern DP on a kernelized instance along a nice decomposition.
DpTables run_dp(const Instance& kernel, const Classification& cls, const NiceTreeDecomposition& ntd);

// Optimal target set of the kernel (kernel ids), reconstructed from the tables.
VertexSet dp_witness(const Instance& kernel, const Classification& cls, const NiceTreeDecomposition& ntd,
                     const DpTables& tables);

struct SolveResult {
    long long min_size = 0;
    VertexSet witness; // original ids, simulation-verified
};

// Full pipeline: reduce, decompose (or restrict the supplied decomposition to
// the kernel), classify, run the DP, reconstruct and verify the witness.
SolveResult solve(const Instance& inst, const std::optional<TreeDecomposition>& td = std::nullopt);

} // namespace ntss
