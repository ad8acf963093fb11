#include "ntss/dp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ntss/kernelize.hpp"
#include "ntss/simulate.hpp"

namespace ntss {

namespace {

int find_pos(const std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return it != v.end() && *it == x ? static_cast<int>(it - v.begin()) : -1;
}

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint32_t insert_bit(std::uint32_t s, int pos, bool value) {
    std::uint32_t low = s & ((std::uint32_t{1} << pos) - 1);
    std::uint32_t high = (s >> pos) << (pos + 1);
    return low | high | (std::uint32_t{value} << pos);
}

std::uint32_t remove_bit(std::uint32_t s, int pos) {
    std::uint32_t low = s & ((std::uint32_t{1} << pos) - 1);
    std::uint32_t high = (s >> (pos + 1)) << pos;
    return low | high;
}

enum class Role { Free, PMember, QMemberA, QMemberB, Sentinel, Full };

struct VertexRoles {
    std::vector<Role> role;
    std::vector<int> index; // component/sentinel index, -1 for Free/Full
};

VertexRoles compute_roles(const Instance& kernel, const Classification& cls) {
    VertexRoles r;
    r.role.assign(kernel.n() + 1, Role::Free);
    r.index.assign(kernel.n() + 1, -1);
    for (std::size_t i = 0; i < cls.p_components.size(); ++i)
        cls.p_components[i].members.for_each([&](int v) {
            r.role[v] = Role::PMember;
            r.index[v] = static_cast<int>(i);
        });
    for (std::size_t i = 0; i < cls.q_components.size(); ++i) {
        cls.q_components[i].a.for_each([&](int v) {
            r.role[v] = Role::QMemberA;
            r.index[v] = static_cast<int>(i);
        });
        cls.q_components[i].b.for_each([&](int v) {
            r.role[v] = Role::QMemberB;
            r.index[v] = static_cast<int>(i);
        });
    }
    for (std::size_t i = 0; i < cls.sentinels.size(); ++i) {
        r.role[cls.sentinels[i]] = Role::Sentinel;
        r.index[cls.sentinels[i]] = static_cast<int>(i);
    }
    cls.full_vertices.for_each([&](int v) { r.role[v] = Role::Full; });
    return r;
}

PatternLayout build_layout(std::vector<int> bag, const VertexRoles& roles) {
    PatternLayout layout;
    layout.bag = std::move(bag);
    for (int v : layout.bag) {
        switch (roles.role[v]) {
        case Role::PMember:
            layout.p_idx.push_back(roles.index[v]);
            break;
        case Role::QMemberA:
        case Role::QMemberB:
            layout.q_idx.push_back(roles.index[v]);
            break;
        case Role::Sentinel:
            layout.r_idx.push_back(roles.index[v]);
            break;
        case Role::Full:
            layout.d_verts.push_back(v);
            break;
        case Role::Free:
            break;
        }
    }
    sort_unique(layout.p_idx);
    sort_unique(layout.q_idx);
    sort_unique(layout.r_idx);
    // d_verts follows the ascending bag order and is already sorted
    std::size_t families =
        layout.p_idx.size() + layout.q_idx.size() + layout.r_idx.size() + layout.d_verts.size();
    if (families > layout.bag.size())
        throw std::logic_error("dp: per-bag index families exceed bag size");
    if (layout.s_bits() + layout.cond_bits() > 26)
        throw std::runtime_error("dp: decomposition too wide for the pattern tables");
    return layout;
}

// Bit positions of `from` entries inside `to`; every `from` index must exist in `to`.
std::vector<int> bit_positions_in(const PatternLayout& from, const PatternLayout& to) {
    std::vector<int> map(from.cond_bits(), -1);
    for (std::size_t a = 0; a < from.p_idx.size(); ++a)
        map[from.p_bit(static_cast<int>(a))] = to.p_bit(to.p_pos(from.p_idx[a]));
    for (std::size_t a = 0; a < from.q_idx.size(); ++a) {
        int pos = to.q_bit(to.q_pos(from.q_idx[a]));
        map[from.q_bit(static_cast<int>(a))] = pos;
        map[from.q_bit(static_cast<int>(a)) + 1] = pos + 1;
    }
    for (std::size_t a = 0; a < from.r_idx.size(); ++a) {
        int pos = to.r_bit(to.r_pos(from.r_idx[a]));
        map[from.r_bit(static_cast<int>(a))] = pos;
        map[from.r_bit(static_cast<int>(a)) + 1] = pos + 1;
    }
    for (std::size_t a = 0; a < from.d_verts.size(); ++a)
        map[from.d_bit(static_cast<int>(a))] = to.d_bit(to.d_pos(from.d_verts[a]));
    for (int m : map)
        if (m < 0)
            throw std::logic_error("dp: pattern bit has no image in the related layout");
    return map;
}

std::uint32_t remap_bits(std::uint32_t bits, const std::vector<int>& map) {
    std::uint32_t out = 0;
    while (bits) {
        int j = __builtin_ctz(bits);
        out |= std::uint32_t{1} << map[j];
        bits &= bits - 1;
    }
    return out;
}

// Forget-node transition. Candidates are tried in a fixed order; each candidate
// names the child pattern, the cost increment, and whether the forgotten vertex
// joins the target set.
struct ForgetCandidate {
    std::uint32_t child_s = 0;
    std::uint32_t child_bits = 0;
    std::int32_t add = 0;
    bool include = false;
};

struct ForgetRules {
    const PatternLayout* parent = nullptr;
    const PatternLayout* child = nullptr;
    int u = 0;
    Role role = Role::Free;
    int u_child_pos = 0;           // bag position of u in the child
    std::vector<int> up_map;       // parent bit -> child bit position

    // role-specific data (parent-side positions/masks)
    bool index_in_parent = false;  // the forgotten vertex's component still touches the bag
    int parent_own_bit = -1;       // component bit (p) or side bit (q) in the parent
    int child_extra_bit = -1;      // first extra child bit (component/sentinel/full)
    int child_extra_bit2 = -1;     // second bit of an extra pair
    bool side_is_a = false;        // q: u in part A
    std::uint32_t s_hit_own = 0;   // bag positions of N[U]/own bar set (S-mask, parent)
    std::uint32_t s_hit_other = 0; // bag positions of the other bar set
    std::uint32_t s_nbrs = 0;      // bag positions of N(u) (sentinel case)
    std::uint32_t d_nbr_bits = 0;  // parent d-bits of Full bag neighbors of u (sentinel case)
    std::uint32_t clear_hit = 0;   // parent bits discharged when u joins X (Full case)
    std::uint32_t clear_v2 = 0;    // parent v2-bits discharged when N(u) ⊆ X (Full case)

    int candidates(std::uint32_t s, std::uint32_t bits, ForgetCandidate out[4]) const;
};

int ForgetRules::candidates(std::uint32_t s, std::uint32_t bits, ForgetCandidate out[4]) const {
    std::uint32_t s_excl = insert_bit(s, u_child_pos, false);
    std::uint32_t s_incl = insert_bit(s, u_child_pos, true);

    switch (role) {
    case Role::Free: {
        std::uint32_t base = remap_bits(bits, up_map);
        out[0] = {s_excl, base, 0, false};
        out[1] = {s_incl, base, 1, true};
        return 2;
    }
    case Role::PMember: {
        if (index_in_parent) {
            out[0] = {s_excl, remap_bits(bits, up_map), 0, false};
            out[1] = {s_incl, remap_bits(bits & ~(std::uint32_t{1} << parent_own_bit), up_map), 1, true};
        } else {
            std::uint32_t base = remap_bits(bits, up_map);
            bool unhit = (s & s_hit_own) == 0;
            out[0] = {s_excl, base | (std::uint32_t{unhit} << child_extra_bit), 0, false};
            out[1] = {s_incl, base, 1, true};
        }
        return 2;
    }
    case Role::QMemberA:
    case Role::QMemberB: {
        if (index_in_parent) {
            int own = side_is_a ? parent_own_bit : parent_own_bit + 1;
            out[0] = {s_excl, remap_bits(bits, up_map), 0, false};
            out[1] = {s_incl, remap_bits(bits & ~(std::uint32_t{1} << own), up_map), 1, true};
        } else {
            std::uint32_t base = remap_bits(bits, up_map);
            int own = side_is_a ? child_extra_bit : child_extra_bit2;
            int other = side_is_a ? child_extra_bit2 : child_extra_bit;
            bool own_unhit = (s & s_hit_own) == 0;
            bool other_unhit = (s & s_hit_other) == 0;
            out[0] = {s_excl,
                      base | (std::uint32_t{own_unhit} << own) | (std::uint32_t{other_unhit} << other), 0,
                      false};
            out[1] = {s_incl, base | (std::uint32_t{other_unhit} << other), 1, true};
        }
        return 2;
    }
    case Role::Sentinel: {
        std::uint32_t base = remap_bits(bits, up_map);
        bool v1_below = (s & s_nbrs) == 0;
        bool v2_below = (bits & d_nbr_bits) == 0;
        out[0] = {s_incl,
                  base | (std::uint32_t{v1_below} << child_extra_bit) |
                      (std::uint32_t{v2_below} << child_extra_bit2),
                  1, true};
        return 1;
    }
    case Role::Full: {
        std::uint32_t one = std::uint32_t{1} << child_extra_bit; // u's own bit in the child
        out[0] = {s_excl, remap_bits(bits, up_map), 0, false};
        out[1] = {s_excl, remap_bits(bits & ~clear_v2, up_map) | one, 0, false};
        out[2] = {s_incl, remap_bits(bits & ~clear_hit, up_map), 1, true};
        out[3] = {s_incl, remap_bits(bits & ~(clear_hit | clear_v2), up_map) | one, 1, true};
        return 4;
    }
    }
    return 0;
}

struct DpContext {
    const Instance& kernel;
    const Classification& cls;
    const NiceTreeDecomposition& ntd;
    VertexRoles roles;

    ForgetRules make_forget_rules(const PatternLayout& parent, const PatternLayout& child, int u) const;
    std::vector<int> intro_map(const PatternLayout& child, const PatternLayout& parent) const {
        return bit_positions_in(child, parent);
    }
};

ForgetRules DpContext::make_forget_rules(const PatternLayout& parent, const PatternLayout& child,
                                         int u) const {
    const Graph& g = kernel.graph();
    ForgetRules fr;
    fr.parent = &parent;
    fr.child = &child;
    fr.u = u;
    fr.role = roles.role[u];
    fr.u_child_pos = child.bag_pos(u);
    fr.up_map = bit_positions_in(parent, child);

    auto s_mask_of = [&](const VertexSet& set) {
        std::uint32_t m = 0;
        for (std::size_t p = 0; p < parent.bag.size(); ++p)
            if (set.test(parent.bag[p]))
                m |= std::uint32_t{1} << p;
        return m;
    };

    switch (fr.role) {
    case Role::Free:
        break;
    case Role::PMember: {
        int i = roles.index[u];
        int pp = parent.p_pos(i);
        fr.index_in_parent = pp >= 0;
        if (fr.index_in_parent) {
            fr.parent_own_bit = parent.p_bit(pp);
        } else {
            fr.child_extra_bit = child.p_bit(child.p_pos(i));
            fr.s_hit_own = s_mask_of(cls.p_components[i].closed_nbhd);
        }
        break;
    }
    case Role::QMemberA:
    case Role::QMemberB: {
        int i = roles.index[u];
        fr.side_is_a = fr.role == Role::QMemberA;
        int qp = parent.q_pos(i);
        fr.index_in_parent = qp >= 0;
        if (fr.index_in_parent) {
            fr.parent_own_bit = parent.q_bit(qp); // Ā bit; B̄ is +1
        } else {
            int cq = child.q_bit(child.q_pos(i));
            fr.child_extra_bit = cq;      // Ā bit
            fr.child_extra_bit2 = cq + 1; // B̄ bit
            const QComponent& q = cls.q_components[i];
            fr.s_hit_own = s_mask_of(fr.side_is_a ? q.a_bar : q.b_bar);
            fr.s_hit_other = s_mask_of(fr.side_is_a ? q.b_bar : q.a_bar);
        }
        break;
    }
    case Role::Sentinel: {
        int i = roles.index[u];
        int cr = child.r_bit(child.r_pos(i));
        fr.child_extra_bit = cr;      // v1 bit
        fr.child_extra_bit2 = cr + 1; // v2 bit
        std::uint32_t s_nbrs = 0;
        for (std::size_t p = 0; p < parent.bag.size(); ++p)
            if (g.adjacent(u, parent.bag[p]))
                s_nbrs |= std::uint32_t{1} << p;
        fr.s_nbrs = s_nbrs;
        for (std::size_t a = 0; a < parent.d_verts.size(); ++a)
            if (g.adjacent(u, parent.d_verts[a]))
                fr.d_nbr_bits |= std::uint32_t{1} << parent.d_bit(static_cast<int>(a));
        break;
    }
    case Role::Full: {
        fr.child_extra_bit = child.d_bit(child.d_pos(u));
        for (std::size_t a = 0; a < parent.p_idx.size(); ++a)
            if (cls.p_components[parent.p_idx[a]].closed_nbhd.test(u))
                fr.clear_hit |= std::uint32_t{1} << parent.p_bit(static_cast<int>(a));
        for (std::size_t a = 0; a < parent.q_idx.size(); ++a) {
            const QComponent& q = cls.q_components[parent.q_idx[a]];
            if (q.a_bar.test(u))
                fr.clear_hit |= std::uint32_t{1} << parent.q_bit(static_cast<int>(a));
            if (q.b_bar.test(u))
                fr.clear_hit |= std::uint32_t{1} << (parent.q_bit(static_cast<int>(a)) + 1);
        }
        for (std::size_t a = 0; a < parent.r_idx.size(); ++a)
            if (g.adjacent(u, cls.sentinels[parent.r_idx[a]])) {
                fr.clear_hit |= std::uint32_t{1} << parent.r_bit(static_cast<int>(a));      // v1
                fr.clear_v2 |= std::uint32_t{1} << (parent.r_bit(static_cast<int>(a)) + 1); // v2
            }
        break;
    }
    }
    return fr;
}

void check_monotone(const PatternLayout& layout, const std::vector<std::int32_t>& cost) {
    int k = layout.s_bits();
    int f = layout.family_bits();
    std::uint32_t s_mask = (std::uint32_t{1} << k) - 1;
    for (std::size_t idx = 0; idx < cost.size(); ++idx) {
        if (cost[idx] >= kInfCost)
            continue;
        std::uint32_t s = static_cast<std::uint32_t>(idx) & s_mask;
        std::uint32_t bits = static_cast<std::uint32_t>(idx) >> k;
        for (int j = 0; j < f; ++j)
            if (bits & (std::uint32_t{1} << j))
                if (cost[layout.index(s, bits & ~(std::uint32_t{1} << j))] > cost[idx])
                    throw std::logic_error("dp: table violates pointwise pattern monotonicity");
    }
}

} // namespace

int PatternLayout::bag_pos(int v) const { return find_pos(bag, v); }
int PatternLayout::p_pos(int i) const { return find_pos(p_idx, i); }
int PatternLayout::q_pos(int i) const { return find_pos(q_idx, i); }
int PatternLayout::r_pos(int i) const { return find_pos(r_idx, i); }
int PatternLayout::d_pos(int v) const { return find_pos(d_verts, v); }

DpTables run_dp(const Instance& kernel, const Classification& cls, const NiceTreeDecomposition& ntd) {
    DpContext ctx{kernel, cls, ntd, compute_roles(kernel, cls)};
    const Graph& g = kernel.graph();
    int n = g.vertex_count();

    DpTables tables;
    tables.nodes.resize(ntd.nodes.size());

    // reverse preorder = children before parents
    std::vector<int> order;
    order.reserve(ntd.nodes.size());
    std::vector<int> stack{ntd.root};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int c : {ntd.nodes[t].child0, ntd.nodes[t].child1})
            if (c != -1)
                stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());

    for (int t : order) {
        const NiceNode& node = ntd.nodes[t];
        DpNode& dn = tables.nodes[t];
        dn.layout = build_layout(node.bag, ctx.roles);
        dn.cost.assign(dn.layout.table_size(), kInfCost);
        int k = dn.layout.s_bits();
        int cb = dn.layout.cond_bits();

        switch (node.kind) {
        case NodeKind::Leaf: {
            dn.subtree_vertices = VertexSet(n);
            dn.cost[0] = 0;
            break;
        }
        case NodeKind::Introduce: {
            const DpNode& ch = tables.nodes[node.child0];
            int u = node.vertex;
            if (ch.subtree_vertices.test(u))
                throw std::logic_error("dp: introduced vertex already below");
            dn.subtree_vertices = ch.subtree_vertices;
            dn.subtree_vertices.set(u);

            std::vector<int> up = ctx.intro_map(ch.layout, dn.layout);
            int upos = dn.layout.bag_pos(u);
            bool u_full = ctx.roles.role[u] == Role::Full;
            int u_dbit = u_full ? dn.layout.d_bit(dn.layout.d_pos(u)) : -1;

            // child d-bits of Full bag vertices adjacent to u (statement: if u
            // is not in S they may not be set)
            std::uint32_t child_dnbr = 0;
            for (std::size_t a = 0; a < ch.layout.d_verts.size(); ++a)
                if (g.adjacent(u, ch.layout.d_verts[a]))
                    child_dnbr |= std::uint32_t{1} << ch.layout.d_bit(static_cast<int>(a));
            // child S positions of bag neighbors of u (b(u)=1 requires them in S)
            std::uint32_t child_snbr = 0;
            for (std::size_t p = 0; p < ch.layout.bag.size(); ++p)
                if (g.adjacent(u, ch.layout.bag[p]))
                    child_snbr |= std::uint32_t{1} << p;

            int ck = ch.layout.s_bits();
            int ccb = ch.layout.cond_bits();
            for (std::uint32_t cbits = 0; cbits < (std::uint32_t{1} << ccb); ++cbits) {
                std::uint32_t base = remap_bits(cbits, up);
                for (std::uint32_t cs = 0; cs < (std::uint32_t{1} << ck); ++cs) {
                    std::int32_t c = ch.cost[ch.layout.index(cs, cbits)];
                    if (c >= kInfCost)
                        continue;
                    bool nbrs_in_s = (cs & child_snbr) == child_snbr;
                    for (int in_s = 0; in_s <= 1; ++in_s) {
                        if (!in_s && (cbits & child_dnbr) != 0)
                            continue; // a covered bag neighbor would need u active
                        std::uint32_t s = insert_bit(cs, upos, in_s != 0);
                        dn.cost[dn.layout.index(s, base)] = c;
                        if (u_full && nbrs_in_s)
                            dn.cost[dn.layout.index(s, base | (std::uint32_t{1} << u_dbit))] = c;
                    }
                }
            }
            break;
        }
        case NodeKind::Forget: {
            const DpNode& ch = tables.nodes[node.child0];
            int u = node.vertex;
            for (int v : g.neighbors(u))
                if (!ch.subtree_vertices.test(v))
                    throw std::logic_error("dp: forgotten vertex still has unseen neighbors");
            dn.subtree_vertices = ch.subtree_vertices;

            ForgetRules rules = ctx.make_forget_rules(dn.layout, ch.layout, u);
            ForgetCandidate cand[4];
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cb); ++bits)
                for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
                    int cnt = rules.candidates(s, bits, cand);
                    std::int32_t best = kInfCost;
                    for (int a = 0; a < cnt; ++a) {
                        std::int32_t c = ch.cost[ch.layout.index(cand[a].child_s, cand[a].child_bits)];
                        if (c < kInfCost)
                            best = std::min(best, c + cand[a].add);
                    }
                    dn.cost[dn.layout.index(s, bits)] = best;
                }
            break;
        }
        case NodeKind::Join: {
            const DpNode& c0 = tables.nodes[node.child0];
            const DpNode& c1 = tables.nodes[node.child1];
            if (c0.layout.p_idx != dn.layout.p_idx || c0.layout.q_idx != dn.layout.q_idx ||
                c0.layout.r_idx != dn.layout.r_idx || c0.layout.d_verts != dn.layout.d_verts ||
                c1.layout.p_idx != dn.layout.p_idx || c1.layout.q_idx != dn.layout.q_idx ||
                c1.layout.r_idx != dn.layout.r_idx || c1.layout.d_verts != dn.layout.d_verts)
                throw std::logic_error("dp: join children disagree on the pattern layout");
            dn.subtree_vertices = c0.subtree_vertices | c1.subtree_vertices;

            int f = dn.layout.family_bits();
            int db = cb - f;
            // phase 1: combine child patterns, every family bit b = min{1, b' + b''}
            for (std::uint32_t d = 0; d < (std::uint32_t{1} << db); ++d)
                for (std::uint32_t b0 = 0; b0 < (std::uint32_t{1} << f); ++b0)
                    for (std::uint32_t b1 = 0; b1 < (std::uint32_t{1} << f); ++b1) {
                        std::uint32_t bits0 = b0 | (d << f);
                        std::uint32_t bits1 = b1 | (d << f);
                        std::uint32_t bits = (b0 | b1) | (d << f);
                        for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
                            std::int32_t x0 = c0.cost[c0.layout.index(s, bits0)];
                            if (x0 >= kInfCost)
                                continue;
                            std::int32_t x1 = c1.cost[c1.layout.index(s, bits1)];
                            if (x1 >= kInfCost)
                                continue;
                            std::int32_t& slot = dn.cost[dn.layout.index(s, bits)];
                            slot = std::min(slot, x0 + x1);
                        }
                    }
            // phase 2: close the family bits downward
            for (std::uint32_t d = 0; d < (std::uint32_t{1} << db); ++d)
                for (std::uint32_t bf = 1; bf < (std::uint32_t{1} << f); ++bf) {
                    for (std::uint32_t sub = (bf - 1) & bf;; sub = (sub - 1) & bf) {
                        for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
                            std::int32_t src = dn.cost[dn.layout.index(s, bf | (d << f))];
                            std::int32_t& dst = dn.cost[dn.layout.index(s, sub | (d << f))];
                            dst = std::min(dst, src);
                        }
                        if (sub == 0)
                            break;
                    }
                }
            break;
        }
        }
        check_monotone(dn.layout, dn.cost);
    }

    tables.root_cost = tables.nodes[ntd.root].cost[0];
    if (tables.root_cost >= kInfCost)
        throw std::logic_error("dp: root table is infeasible");
    return tables;
}

VertexSet dp_witness(const Instance& kernel, const Classification& cls, const NiceTreeDecomposition& ntd,
                     const DpTables& tables) {
    DpContext ctx{kernel, cls, ntd, compute_roles(kernel, cls)};
    VertexSet witness(kernel.n());

    struct Item {
        int node;
        std::uint32_t s, bits;
    };
    std::vector<Item> stack{{ntd.root, 0, 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const NiceNode& node = ntd.nodes[it.node];
        const DpNode& dn = tables.nodes[it.node];
        std::int32_t cost = dn.cost[dn.layout.index(it.s, it.bits)];
        if (cost >= kInfCost)
            throw std::logic_error("dp: witness walk reached an infeasible pattern");

        switch (node.kind) {
        case NodeKind::Leaf:
            break;
        case NodeKind::Introduce: {
            const DpNode& ch = tables.nodes[node.child0];
            std::vector<int> up = ctx.intro_map(ch.layout, dn.layout);
            std::uint32_t cs = remove_bit(it.s, dn.layout.bag_pos(node.vertex));
            std::uint32_t cbits = 0;
            for (int j = 0; j < ch.layout.cond_bits(); ++j)
                if (it.bits & (std::uint32_t{1} << up[j]))
                    cbits |= std::uint32_t{1} << j;
            stack.push_back({node.child0, cs, cbits});
            break;
        }
        case NodeKind::Forget: {
            const DpNode& ch = tables.nodes[node.child0];
            ForgetRules rules = ctx.make_forget_rules(dn.layout, ch.layout, node.vertex);
            ForgetCandidate cand[4];
            int cnt = rules.candidates(it.s, it.bits, cand);
            bool matched = false;
            for (int a = 0; a < cnt && !matched; ++a) {
                std::int32_t c = ch.cost[ch.layout.index(cand[a].child_s, cand[a].child_bits)];
                if (c < kInfCost && c + cand[a].add == cost) {
                    if (cand[a].include)
                        witness.set(node.vertex);
                    stack.push_back({node.child0, cand[a].child_s, cand[a].child_bits});
                    matched = true;
                }
            }
            if (!matched)
                throw std::logic_error("dp: witness walk found no matching forget branch");
            break;
        }
        case NodeKind::Join: {
            const DpNode& c0 = tables.nodes[node.child0];
            const DpNode& c1 = tables.nodes[node.child1];
            int f = dn.layout.family_bits();
            std::uint32_t fmask = (std::uint32_t{1} << f) - 1;
            std::uint32_t want = it.bits & fmask;
            std::uint32_t d = it.bits >> f;
            bool matched = false;
            for (std::uint32_t b0 = 0; b0 <= fmask && !matched; ++b0) {
                std::int32_t x0 = c0.cost[c0.layout.index(it.s, b0 | (d << f))];
                if (x0 >= kInfCost)
                    continue;
                for (std::uint32_t b1 = 0; b1 <= fmask && !matched; ++b1) {
                    if (((b0 | b1) & want) != want)
                        continue;
                    std::int32_t x1 = c1.cost[c1.layout.index(it.s, b1 | (d << f))];
                    if (x1 < kInfCost && x0 + x1 == cost) {
                        stack.push_back({node.child0, it.s, b0 | (d << f)});
                        stack.push_back({node.child1, it.s, b1 | (d << f)});
                        matched = true;
                    }
                }
            }
            if (!matched)
                throw std::logic_error("dp: witness walk found no matching join split");
            break;
        }
        }
    }
    return witness;
}

SolveResult solve(const Instance& inst, const std::optional<TreeDecomposition>& td) {
    Kernelization kern = kernelize(inst);
    const Instance& kernel = kern.kernel;

    TreeDecomposition ktd;
    if (td) {
        validate_td(*td, inst.graph());
        VertexSet keep(inst.n());
        std::vector<int> orig_to_kernel(inst.n() + 1, 0);
        for (int w = 1; w <= kernel.n(); ++w) {
            keep.set(kern.vertex_map[w]);
            orig_to_kernel[kern.vertex_map[w]] = w;
        }
        TreeDecomposition restricted = restrict_td(*td, keep);
        ktd.tree_edges = restricted.tree_edges;
        ktd.bags.reserve(restricted.bags.size());
        for (const VertexSet& bag : restricted.bags) {
            VertexSet kbag(kernel.n());
            bag.for_each([&](int v) { kbag.set(orig_to_kernel[v]); });
            ktd.bags.push_back(std::move(kbag));
        }
        validate_td(ktd, kernel.graph());
    } else {
        ktd = heuristic_td(kernel.graph());
    }

    Classification cls = classify(kernel);
    NiceTreeDecomposition ntd = make_nice(ktd);
    DpTables tables = run_dp(kernel, cls, ntd);

    SolveResult res;
    res.min_size = kern.forced.count() + tables.root_cost;
    VertexSet kernel_witness = dp_witness(kernel, cls, ntd, tables);
    res.witness = kern.forced;
    kernel_witness.for_each([&](int w) { res.witness.set(kern.vertex_map[w]); });

    if (res.witness.count() != res.min_size)
        throw std::logic_error("dp: witness size disagrees with the computed minimum");
    if (!is_target_set(inst, res.witness))
        throw std::logic_error("dp: reconstructed witness fails simulation");
    return res;
}

} // namespace ntss
