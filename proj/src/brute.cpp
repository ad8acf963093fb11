#include "ntss/brute.hpp"

#include <atomic>
#include <thread>

#include "ntss/characterize.hpp"
#include "ntss/kernelize.hpp"
#include "ntss/simulate.hpp"

namespace ntss {

namespace {

unsigned long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return r;
}

// Lexicographically rank-th k-subset of {1..n} (rank 0-based).
std::vector<int> unrank_combination(int n, int k, unsigned long long rank) {
    std::vector<int> out;
    out.reserve(k);
    int v = 1;
    for (int slot = k; slot >= 1; --slot) {
        for (;;) {
            unsigned long long below = binom(n - v, slot - 1); // subsets starting with v
            if (rank < below) {
                out.push_back(v);
                ++v;
                break;
            }
            rank -= below;
            ++v;
        }
    }
    return out;
}

// Advance to the next k-subset in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - 1 - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

constexpr unsigned long long kNoRank = ~0ull;

} // namespace

OracleResult min_target_bruteforce(const Instance& inst, int budget, int threads) {
    int n = inst.n();
    if (n > budget)
        throw BudgetExceeded("brute force limited to " + std::to_string(budget) + " vertices, instance has " +
                             std::to_string(n));
    if (threads < 1)
        threads = 1;

    unsigned long long skipped = 0; // subsets of smaller cardinalities
    for (int k = 0; k <= n; ++k) {
        unsigned long long total = binom(n, k);
        std::atomic<unsigned long long> best{kNoRank};

        auto scan = [&](unsigned long long from, unsigned long long to) {
            if (from >= to)
                return;
            std::vector<int> comb = unrank_combination(n, k, from);
            for (unsigned long long r = from; r < to; ++r) {
                if (r >= best.load(std::memory_order_relaxed))
                    break;
                if (is_target_set(inst, VertexSet::from_vector(n, comb))) {
                    unsigned long long cur = best.load(std::memory_order_relaxed);
                    while (r < cur && !best.compare_exchange_weak(cur, r, std::memory_order_relaxed)) {
                    }
                    break;
                }
                if (!next_combination(comb, n))
                    break;
            }
        };

        if (threads == 1 || total < 64) {
            scan(0, total);
        } else {
            unsigned long long chunk = (total + threads - 1) / threads;
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(scan, t * chunk, std::min<unsigned long long>(total, (t + 1) * chunk));
            for (auto& th : pool)
                th.join();
        }

        unsigned long long found = best.load();
        if (found != kNoRank) {
            OracleResult res;
            res.min_size = k;
            res.witness = VertexSet::from_vector(n, unrank_combination(n, k, found));
            res.subsets_examined = skipped + found + 1;
            return res;
        }
        skipped += total;
    }
    // unreachable: the full vertex set is always a target set when tau <= deg
    throw std::logic_error("brute force found no target set");
}

CrossValidationReport cross_validate(const Instance& inst, int budget) {
    int n = inst.n();
    if (n > budget)
        throw BudgetExceeded("cross-validation limited to " + std::to_string(budget) +
                             " vertices, instance has " + std::to_string(n));

    // Same computation as decide_target_set_fast, with the reduction hoisted
    // out of the subset loop.
    Kernelization kern = kernelize(inst);
    ConditionSet cond = extract_conditions(classify(kern.kernel), kern.kernel.graph());

    CrossValidationReport rep;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        VertexSet x(n);
        for (int v = 1; v <= n; ++v)
            if (mask & (1ull << (v - 1)))
                x.set(v);
        bool sim = is_target_set(inst, x);

        bool fast = kern.forced.is_subset_of(x);
        if (fast) {
            VertexSet x_kernel(kern.kernel.n());
            for (int w = 1; w <= kern.kernel.n(); ++w)
                if (x.test(kern.vertex_map[w]))
                    x_kernel.set(w);
            fast = satisfies(cond, x_kernel);
        }

        ++rep.subsets_checked;
        if (sim != fast) {
            rep.consistent = false;
            rep.mismatch = x;
            rep.sim_value = sim;
            rep.fast_value = fast;
            return rep;
        }
    }
    return rep;
}

} // namespace ntss
