#pragma once

#include <string>
#include <vector>

#include "ntss/graph.hpp"

namespace ntss {

struct ThresholdMap {
    std::vector<int> tau; // index 0 unused

    int operator()(int v) const { return tau[v]; }
    bool operator==(const ThresholdMap&) const = default;
};

// Classification precedence: Zero > One > Full. A vertex with tau(u)=1=deg(u)
// is One; tau(u)=0 is Zero even when deg(u)=0. Full means tau(u)=deg(u) >= 2.
enum class VertexClass { Zero, One, Full };

// Graph plus thresholds in the restricted regime tau(u) in {0, 1, deg(u)}.
// Immutable after construction; safe to share across threads.
class Instance {
public:
    Instance() = default;

    // Validates 0 <= tau(u) <= deg(u) and tau(u) in {0, 1, deg(u)}.
    static Instance make(Graph g, ThresholdMap tau);

    const Graph& graph() const { return graph_; }
    const ThresholdMap& thresholds() const { return tau_; }
    int tau(int v) const { return tau_.tau[v]; }
    int n() const { return graph_.vertex_count(); }

    VertexClass vertex_class(int v) const {
        int t = tau_.tau[v];
        if (t == 0)
            return VertexClass::Zero;
        if (t == 1)
            return VertexClass::One;
        return VertexClass::Full;
    }

    bool operator==(const Instance&) const = default;

private:
    Instance(Graph g, ThresholdMap t) : graph_(std::move(g)), tau_(std::move(t)) {}

    Graph graph_;
    ThresholdMap tau_;
};

// Instance file format (line-oriented, '#' starts a comment line):
//   p ntss <n> <m>
//   t <vertex-id> <threshold>       exactly n lines; threshold is an integer or "deg"
//   e <u> <v>                       exactly m lines, 1 <= u < v <= n
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

} // namespace ntss
