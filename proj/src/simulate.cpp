#include "ntss/simulate.hpp"

#include <unordered_map>

namespace ntss {

VertexSet step(const Instance& inst, const VertexSet& active) {
    const Graph& g = inst.graph();
    int n = g.vertex_count();
    std::vector<int> hits(n + 1, 0);
    active.for_each([&](int u) {
        for (int v : g.neighbors(u))
            ++hits[v];
    });
    VertexSet next(n);
    for (int u = 1; u <= n; ++u)
        if (hits[u] >= inst.tau(u))
            next.set(u);
    return next;
}

ProcessOutcome run(const Instance& inst, const VertexSet& start, bool record_trace, long long max_states) {
    int n = inst.n();
    const VertexSet everyone = VertexSet::all(n);

    ProcessOutcome out;
    if (record_trace)
        out.trace.emplace();

    std::unordered_map<VertexSet, long long, VertexSetHash> seen_at;
    VertexSet cur = start;
    long long t = 0;
    for (;;) {
        if (cur == everyone) {
            // tau <= deg makes the all-active state a fixed point, so the decision is made
            out.reached_all = true;
            out.t0 = t;
            out.cycle_start = t;
            out.cycle_length = 1;
            if (record_trace)
                out.trace->push_back(cur);
            out.distinct_states = t + 1;
            return out;
        }
        auto [it, inserted] = seen_at.emplace(cur, t);
        if (!inserted) {
            out.reached_all = false;
            out.cycle_start = it->second;
            out.cycle_length = t - it->second;
            out.distinct_states = t;
            return out;
        }
        if (record_trace)
            out.trace->push_back(cur);
        if (max_states > 0 && t + 1 > max_states)
            throw StateBudgetExceeded("simulation state budget of " + std::to_string(max_states) +
                                      " states exceeded");
        cur = step(inst, cur);
        ++t;
    }
}

bool is_target_set(const Instance& inst, const VertexSet& seed) {
    return run(inst, seed).reached_all;
}

} // namespace ntss
