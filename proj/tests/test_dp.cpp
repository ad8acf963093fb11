#include <doctest.h>

#include "fixtures.hpp"
#include "ntss/brute.hpp"
#include "ntss/dp.hpp"
#include "ntss/kernelize.hpp"
#include "ntss/random_gen.hpp"
#include "ntss/simulate.hpp"
#include "table_oracle.hpp"

using namespace ntss;

namespace {

void check_solve_against_oracle(const Instance& inst) {
    SolveResult res = solve(inst);
    OracleResult oracle = min_target_bruteforce(inst);
    CHECK(res.min_size == oracle.min_size);
    CHECK(res.witness.count() == res.min_size);
    CHECK(is_target_set(inst, res.witness));
}

} // namespace

TEST_CASE("solve matches the worked examples") {
    CHECK(solve(fixtures::path_all_ones(4)).min_size == 2);
    CHECK(solve(fixtures::spider()).min_size == 3);
    // fully reducible instance: the DP runs on an empty kernel
    CHECK(solve(fixtures::make(5, fixtures::path_edges(5), {1, 2, 1, 2, 1})).min_size == 5);
    CHECK(solve(fixtures::make(0, {}, {})).min_size == 0);
}

TEST_CASE("pattern tables equal their definition on small fixtures") {
    CHECK(testing::verify_tables(kernelize(fixtures::path_all_ones(4)).kernel) > 0);
    CHECK(testing::verify_tables(kernelize(fixtures::path_all_ones(6)).kernel) > 0);
    CHECK(testing::verify_tables(fixtures::cycle_all_ones(3)) > 0);
    CHECK(testing::verify_tables(fixtures::cycle_all_ones(4)) > 0);
    CHECK(testing::verify_tables(fixtures::cycle_all_ones(5)) > 0);
    CHECK(testing::verify_tables(fixtures::spider()) > 0);
    CHECK(testing::verify_tables(fixtures::make(3, fixtures::path_edges(3), {0, 1, 0})) > 0);

    // sentinel with one cheap and one expensive full neighbor, decomposed so
    // the sentinel is forgotten below the cheap neighbor's solo bag; the
    // bag-witness bit of the cheap neighbor is then cost-decreasing
    Instance probe = fixtures::make(8, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {4, 6}, {4, 7}, {4, 8}},
                                    {1, 2, 0, 5, 0, 0, 0, 0});
    TreeDecomposition ptd;
    ptd.bags = {VertexSet::of(8, {2, 3}), VertexSet::of(8, {1, 2}), VertexSet::of(8, {4, 1}),
                VertexSet::of(8, {4, 8}), VertexSet::of(8, {4, 7}), VertexSet::of(8, {4, 6}),
                VertexSet::of(8, {4, 5})};
    ptd.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
    CHECK(testing::verify_tables(probe, &ptd) > 0);

    Lcg rng(616);
    int done = 0;
    for (int round = 0; done < 25; ++round) {
        REQUIRE(round < 10000);
        int n = 2 + static_cast<int>(rng.next_below(6));
        Instance kernel = kernelize(random_instance(n, 45, rng)).kernel;
        if (kernel.n() == 0)
            continue;
        CHECK(testing::verify_tables(kernel) > 0);
        ++done;
    }
}

TEST_CASE("solve agrees with the oracle on random trees") {
    Lcg rng(617);
    for (int round = 0; round < 30; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(12));
        check_solve_against_oracle(random_tree_instance(n, rng));
    }
}

TEST_CASE("solve agrees with the oracle on random bounded-width graphs") {
    Lcg rng(618);
    for (int round = 0; round < 30; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(12));
        check_solve_against_oracle(random_partial_ktree_instance(n, 3, 70, rng));
    }
}

TEST_CASE("solve agrees with the oracle on paths, cycles and the spider family") {
    for (int n = 2; n <= 8; ++n)
        check_solve_against_oracle(fixtures::path_all_ones(n));
    for (int n = 3; n <= 8; ++n)
        check_solve_against_oracle(fixtures::cycle_all_ones(n));
    check_solve_against_oracle(fixtures::spider());
    check_solve_against_oracle(fixtures::star_all_full(4));
}

TEST_CASE("different decompositions give the same minimum") {
    Lcg rng(619);
    for (int round = 0; round < 15; ++round) {
        int n = 2 + static_cast<int>(rng.next_below(9));
        Instance inst = random_partial_ktree_instance(n, 2, 80, rng);

        long long via_minfill = solve(inst).min_size;

        // trivial single-bag decomposition of the original graph
        TreeDecomposition trivial;
        trivial.bags.push_back(VertexSet::all(n));
        long long via_trivial = solve(inst, trivial).min_size;

        CHECK(via_minfill == via_trivial);
    }
}

TEST_CASE("solve accepts an explicit decomposition") {
    // width-1 decomposition of P4 supplied by the caller
    Instance p4 = fixtures::path_all_ones(4);
    TreeDecomposition td;
    td.bags = {VertexSet::of(4, {1, 2}), VertexSet::of(4, {2, 3}), VertexSet::of(4, {3, 4})};
    td.tree_edges = {{0, 1}, {1, 2}};
    SolveResult res = solve(p4, td);
    CHECK(res.min_size == 2);
    CHECK(is_target_set(p4, res.witness));

    // an invalid decomposition is rejected
    TreeDecomposition broken;
    broken.bags = {VertexSet::of(4, {1, 2}), VertexSet::of(4, {3, 4})};
    broken.tree_edges = {{0, 1}};
    CHECK_THROWS(solve(p4, broken));
}
