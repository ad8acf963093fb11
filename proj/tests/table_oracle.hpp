#pragma once

#include <cstdint>
#include <vector>

#include "ntss/dp.hpp"

namespace ntss::testing {

// Definition-level table oracle. For one DP node it enumerates every X inside
// the node's subtree and evaluates the table-semantics conditions stated in
// dp.hpp literally, so it is independent of the transition rules used by
// run_dp. Subtrees are limited to 10 vertices.
struct TableOracle {
    const Instance& kernel;
    const Classification& cls;

    std::vector<std::int32_t> table_for(const DpNode& dn) const {
        const Graph& g = kernel.graph();
        const PatternLayout& lay = dn.layout;
        int k = lay.s_bits();
        int cb = lay.cond_bits();
        std::vector<std::int32_t> expect(lay.table_size(), kInfCost);

        std::vector<int> verts = dn.subtree_vertices.to_vector();
        int nv = static_cast<int>(verts.size());
        if (nv > 10)
            throw std::runtime_error("table oracle: subtree too large");

        VertexSet bag_set = VertexSet::from_vector(kernel.n(), lay.bag);
        VertexSet below = dn.subtree_vertices - bag_set;

        auto gt_nbhd = [&](int v) { // N_{G_t}(v)
            VertexSet out(kernel.n());
            for (int w : g.neighbors(v))
                if (dn.subtree_vertices.test(w))
                    out.set(w);
            return out;
        };

        // fully-forgotten components and sentinels: their conditions are unconditional
        std::vector<int> p_below, q_below, r_below;
        for (std::size_t i = 0; i < cls.p_components.size(); ++i)
            if (!cls.p_components[i].members.empty() && cls.p_components[i].members.is_subset_of(below))
                p_below.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < cls.q_components.size(); ++i)
            if (!cls.q_components[i].members.empty() && cls.q_components[i].members.is_subset_of(below))
                q_below.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < cls.sentinels.size(); ++i)
            if (below.test(cls.sentinels[i]))
                r_below.push_back(static_cast<int>(i));

        for (unsigned xmask = 0; xmask < (1u << nv); ++xmask) {
            VertexSet x(kernel.n());
            for (int i = 0; i < nv; ++i)
                if (xmask & (1u << i))
                    x.set(verts[i]);

            // the bag intersection is fixed by X
            std::uint32_t s = 0;
            for (int p = 0; p < k; ++p)
                if (x.test(lay.bag[p]))
                    s |= std::uint32_t{1} << p;

            // fully-forgotten components impose their hitting conditions outright
            bool global_ok = true;
            for (int i : p_below)
                global_ok = global_ok && cls.p_components[i].closed_nbhd.intersects(x);
            for (int i : q_below)
                global_ok = global_ok && cls.q_components[i].a_bar.intersects(x) &&
                            cls.q_components[i].b_bar.intersects(x);
            if (!global_ok)
                continue;

            // forgotten sentinels need a selected neighbor and a covered neighbor;
            // covered bag neighbors only count when their pattern bit is set
            struct SentinelNeed {
                bool v2_below = false;
                std::uint32_t v2_bag_dbits = 0;
            };
            std::vector<SentinelNeed> needs;
            bool v1_ok = true;
            for (int i : r_below) {
                SentinelNeed need;
                bool has_v1 = false;
                int u = cls.sentinels[i];
                for (int v : g.neighbors(u)) {
                    if (!dn.subtree_vertices.test(v))
                        continue;
                    has_v1 = has_v1 || x.test(v);
                    if (gt_nbhd(v).is_subset_of(x)) {
                        if (below.test(v))
                            need.v2_below = true;
                        else
                            need.v2_bag_dbits |= std::uint32_t{1} << lay.d_bit(lay.d_pos(v));
                    }
                }
                v1_ok = v1_ok && has_v1;
                needs.push_back(need);
            }
            if (!v1_ok)
                continue;

            // which pattern bits this X can honor
            std::uint32_t allowed = 0;
            for (std::size_t a = 0; a < lay.p_idx.size(); ++a)
                if ((cls.p_components[lay.p_idx[a]].closed_nbhd & below).intersects(x))
                    allowed |= std::uint32_t{1} << lay.p_bit(static_cast<int>(a));
            for (std::size_t a = 0; a < lay.q_idx.size(); ++a) {
                const QComponent& q = cls.q_components[lay.q_idx[a]];
                if ((q.a_bar & below).intersects(x))
                    allowed |= std::uint32_t{1} << lay.q_bit(static_cast<int>(a));
                if ((q.b_bar & below).intersects(x))
                    allowed |= std::uint32_t{1} << (lay.q_bit(static_cast<int>(a)) + 1);
            }
            for (std::size_t a = 0; a < lay.r_idx.size(); ++a) {
                int u = cls.sentinels[lay.r_idx[a]];
                bool v1 = false, v2 = false;
                for (int v : g.neighbors(u)) {
                    if (!below.test(v))
                        continue;
                    v1 = v1 || x.test(v);
                    v2 = v2 || gt_nbhd(v).is_subset_of(x);
                }
                if (v1)
                    allowed |= std::uint32_t{1} << lay.r_bit(static_cast<int>(a));
                if (v2)
                    allowed |= std::uint32_t{1} << (lay.r_bit(static_cast<int>(a)) + 1);
            }
            for (std::size_t a = 0; a < lay.d_verts.size(); ++a)
                if (gt_nbhd(lay.d_verts[a]).is_subset_of(x))
                    allowed |= std::uint32_t{1} << lay.d_bit(static_cast<int>(a));

            std::int32_t cost = static_cast<std::int32_t>((x - bag_set).count());
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cb); ++bits) {
                if ((bits & allowed) != bits)
                    continue;
                bool ok = true;
                for (const SentinelNeed& need : needs)
                    if (!need.v2_below && (bits & need.v2_bag_dbits) == 0) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                std::int32_t& slot = expect[lay.index(s, bits)];
                slot = std::min(slot, cost);
            }
        }
        return expect;
    }
};

// Runs the DP on a kernelized instance and compares every node table against
// the definition. Returns the number of table entries compared; throws on the
// first mismatch.
inline std::size_t verify_tables(const Instance& kernel,
                                 const TreeDecomposition* td = nullptr) {
    Classification cls = classify(kernel);
    NiceTreeDecomposition ntd = make_nice(td ? *td : heuristic_td(kernel.graph()));
    DpTables tables = run_dp(kernel, cls, ntd);
    TableOracle oracle{kernel, cls};
    std::size_t compared = 0;
    for (const DpNode& dn : tables.nodes) {
        std::vector<std::int32_t> expect = oracle.table_for(dn);
        for (std::size_t idx = 0; idx < expect.size(); ++idx) {
            if (dn.cost[idx] != expect[idx])
                throw std::runtime_error("table oracle: DP entry disagrees with the definition");
            ++compared;
        }
    }
    return compared;
}

} // namespace ntss::testing
