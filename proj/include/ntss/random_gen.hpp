#pragma once

#include <cstdint>

#include "ntss/instance.hpp"

namespace ntss {

// 64-bit linear congruential generator, fixed for reproducibility:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// next() returns the upper 31 bits of the new state; next_below(k) reduces by
// modulo. Identical seeds give identical streams on every platform.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_ >> 33;
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// G(n, p) with p = edge_percent/100.
Graph random_graph(int n, int edge_percent, Lcg& rng);

// Per vertex a uniform pick from the thresholds valid for its degree:
// {0} for degree 0, {0, 1} for degree 1, {0, 1, deg} otherwise.
ThresholdMap random_restricted_thresholds(const Graph& g, Lcg& rng);

Instance random_instance(int n, int edge_percent, Lcg& rng);

// Uniform random recursive tree: vertex i attaches to a uniform vertex below it.
Instance random_tree_instance(int n, Lcg& rng);

// Random k-tree construction followed by edge deletion (each edge kept with
// probability keep_percent/100); treewidth at most k.
Instance random_partial_ktree_instance(int n, int k, int keep_percent, Lcg& rng);

} // namespace ntss
