#include "ntss/characterize.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "ntss/kernelize.hpp"

namespace ntss {

Classification classify(const Instance& inst) {
    if (!is_kernelized(inst))
        throw std::invalid_argument("classify: instance has an edge between two full-threshold vertices; "
                                    "apply the reduction first");

    const Graph& g = inst.graph();
    int n = g.vertex_count();

    Classification cls;
    cls.full_vertices = VertexSet(n);
    VertexSet low(n); // threshold in {0, 1}
    for (int u = 1; u <= n; ++u) {
        switch (inst.vertex_class(u)) {
        case VertexClass::Full:
            cls.full_vertices.set(u);
            break;
        case VertexClass::Zero:
        case VertexClass::One:
            low.set(u);
            break;
        }
    }

    for (VertexSet& comp : components(g, low)) {
        bool all_one = true;
        comp.for_each([&](int u) { all_one = all_one && inst.tau(u) == 1; });
        if (comp.count() == 1) {
            int u = comp.smallest();
            if (all_one) {
                // order-1 component of a threshold-1 vertex: all neighbors are Full-class
                assert(g.degree(u) >= 2);
                cls.sentinels.push_back(u);
            }
            continue;
        }
        if (!all_one)
            continue; // contains a threshold-0 vertex; self-activating, no condition
        auto parts = bipartition(g, comp);
        if (!parts) {
            PComponent p;
            p.closed_nbhd = closed_neighborhood(g, comp);
            p.members = std::move(comp);
            cls.p_components.push_back(std::move(p));
        } else {
            QComponent q;
            q.a = std::move(parts->first);
            q.b = std::move(parts->second);
            VertexSet na = open_neighborhood(g, q.a);
            VertexSet nb = open_neighborhood(g, q.b);
            q.a_prime = nb - (na | q.a); // N(B) \ N[A]
            q.b_prime = na - (nb | q.b); // N(A) \ N[B]
            q.c = na & nb;
            q.a_bar = q.a | q.a_prime | q.c;
            q.b_bar = q.b | q.b_prime | q.c;
            q.members = std::move(comp);
            cls.q_components.push_back(std::move(q));
        }
    }
    return cls;
}

ConditionSet extract_conditions(const Classification& cls, const Graph& g) {
    ConditionSet cond;
    for (const PComponent& p : cls.p_components)
        cond.hitting.push_back(p.closed_nbhd);
    for (const QComponent& q : cls.q_components)
        cond.pair_hitting.emplace_back(q.a_bar, q.b_bar);
    for (int u : cls.sentinels) {
        SentinelCondition sc;
        sc.vertex = u;
        for (int v : g.neighbors(u))
            sc.neighbors.emplace_back(v, VertexSet::from_vector(g.vertex_count(), g.neighbors(v)));
        cond.sentinel_constraints.push_back(std::move(sc));
    }
    return cond;
}

bool satisfies(const ConditionSet& cond, const VertexSet& x) {
    for (const VertexSet& s : cond.hitting)
        if (!s.intersects(x))
            return false;
    for (const auto& [a_bar, b_bar] : cond.pair_hitting)
        if (!a_bar.intersects(x) || !b_bar.intersects(x))
            return false;
    for (const SentinelCondition& sc : cond.sentinel_constraints) {
        bool v1 = false, v2 = false;
        for (const auto& [v, nbhd] : sc.neighbors) {
            v1 = v1 || x.test(v);
            v2 = v2 || nbhd.is_subset_of(x);
        }
        if (!v1 || !v2)
            return false;
    }
    return true;
}

bool decide_target_set_fast(const Instance& inst, const VertexSet& x) {
    Kernelization k = kernelize(inst);
    if (!k.forced.is_subset_of(x))
        return false;
    VertexSet x_kernel(k.kernel.n());
    for (int w = 1; w <= k.kernel.n(); ++w)
        if (x.test(k.vertex_map[w]))
            x_kernel.set(w);
    Classification cls = classify(k.kernel);
    return satisfies(extract_conditions(cls, k.kernel.graph()), x_kernel);
}

std::string format_conditions(const ConditionSet& cond) {
    std::ostringstream out;
    for (const VertexSet& s : cond.hitting)
        out << "hit " << format_vertex_set(s) << '\n';
    for (const auto& [a_bar, b_bar] : cond.pair_hitting)
        out << "pair " << format_vertex_set(a_bar) << '|' << format_vertex_set(b_bar) << '\n';
    for (const SentinelCondition& sc : cond.sentinel_constraints) {
        out << "sentinel " << sc.vertex;
        for (const auto& [v, nbhd] : sc.neighbors)
            out << " nbr " << v << ':' << format_vertex_set(nbhd);
        out << '\n';
    }
    return out.str();
}

} // namespace ntss
