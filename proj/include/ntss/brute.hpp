#pragma once

#include <stdexcept>

#include "ntss/instance.hpp"

namespace ntss {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// witness is the first target set in the enumeration order (increasing
// cardinality, lexicographic within a cardinality); subsets_examined is its
// position in that order.
struct OracleResult {
    int min_size = 0;
    VertexSet witness;
    unsigned long long subsets_examined = 0;
};

// Ground-truth minimum by subset enumeration and simulation; never consults
// the condition checker. Throws BudgetExceeded when n exceeds `budget`.
// `threads` > 1 splits each cardinality class by combination rank; the result
// is independent of the thread count.
OracleResult min_target_bruteforce(const Instance& inst, int budget = 20, int threads = 1);

struct CrossValidationReport {
    bool consistent = true;
    unsigned long long subsets_checked = 0;
    VertexSet mismatch; // first mismatching subset when !consistent
    bool sim_value = false;
    bool fast_value = false;
};

// Compares is_target_set against decide_target_set_fast on every subset.
CrossValidationReport cross_validate(const Instance& inst, int budget = 16);

} // namespace ntss
