#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ntss/instance.hpp"

namespace ntss {

struct StateBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Outcome of the deterministic activation process. Invariants:
//   reached_all <=> t0 present; then the all-active state is a fixed point and cycle_length = 1.
//   cycle_start + cycle_length = distinct_states <= 2^n.
struct ProcessOutcome {
    bool reached_all = false;
    std::optional<long long> t0;
    long long cycle_start = 0;
    long long cycle_length = 0;
    long long distinct_states = 0;
    std::optional<std::vector<VertexSet>> trace;
};

// One synchronous update: { u : |N(u) ∩ active| >= tau(u) }.
VertexSet step(const Instance& inst, const VertexSet& active);

// Iterates step() from `start`, storing each distinct state exactly, until the
// all-active state or the first repeated state. `max_states` = 0 means no cap;
// exceeding a positive cap throws StateBudgetExceeded.
ProcessOutcome run(const Instance& inst, const VertexSet& start, bool record_trace = false,
                   long long max_states = 0);

// True iff the process from `seed` reaches (and then stays at) the all-active state.
bool is_target_set(const Instance& inst, const VertexSet& seed);

} // namespace ntss
