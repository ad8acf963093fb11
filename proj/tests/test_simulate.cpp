#include <doctest.h>

#include "fixtures.hpp"
#include "ntss/random_gen.hpp"
#include "ntss/simulate.hpp"

using namespace ntss;

TEST_CASE("step follows the activation rule") {
    Instance p3 = fixtures::path_all_ones(3);
    CHECK(step(p3, VertexSet::all(3)) == VertexSet::all(3));
    CHECK(step(p3, VertexSet(3)) == VertexSet(3));
    CHECK(step(p3, VertexSet::of(3, {2})) == VertexSet::of(3, {1, 3}));

    // threshold-0 vertices activate from nothing
    Instance spider = fixtures::spider();
    CHECK(step(spider, VertexSet(5)) == VertexSet::of(5, {4, 5}));
}

TEST_CASE("run detects the P2 oscillation") {
    Instance p2 = fixtures::path_all_ones(2);
    ProcessOutcome out = run(p2, VertexSet::of(2, {1}), true);
    CHECK_FALSE(out.reached_all);
    CHECK_FALSE(out.t0.has_value());
    CHECK(out.cycle_start == 0);
    CHECK(out.cycle_length == 2);
    REQUIRE(out.trace.has_value());
    REQUIRE(out.trace->size() == 2);
    CHECK((*out.trace)[0] == VertexSet::of(2, {1}));
    CHECK((*out.trace)[1] == VertexSet::of(2, {2}));
}

TEST_CASE("starting from the full set is an immediate fixed point") {
    Instance c4 = fixtures::cycle_all_ones(4);
    ProcessOutcome out = run(c4, VertexSet::all(4));
    CHECK(out.reached_all);
    CHECK(out.t0 == 0);
    CHECK(out.cycle_length == 1);
}

TEST_CASE("triangle from one vertex activates everything at t=2") {
    Instance tri = fixtures::cycle_all_ones(3);
    ProcessOutcome out = run(tri, VertexSet::of(3, {1}), true);
    CHECK(out.reached_all);
    CHECK(out.t0 == 2);
    REQUIRE(out.trace->size() == 3);
    CHECK((*out.trace)[1] == VertexSet::of(3, {2, 3}));
    CHECK((*out.trace)[2] == VertexSet::all(3));
}

TEST_CASE("is_target_set examples") {
    Instance p2 = fixtures::path_all_ones(2);
    CHECK_FALSE(is_target_set(p2, VertexSet::of(2, {1})));
    CHECK(is_target_set(p2, VertexSet::all(2)));
    CHECK(is_target_set(fixtures::cycle_all_ones(5), VertexSet::of(5, {1})));
}

TEST_CASE("the empty instance is already all-active") {
    Instance empty = fixtures::make(0, {}, {});
    ProcessOutcome out = run(empty, VertexSet(0));
    CHECK(out.reached_all);
    CHECK(out.t0 == 0);
}

TEST_CASE("state budget aborts with an explicit error") {
    Instance p2 = fixtures::path_all_ones(2);
    CHECK_THROWS_AS(run(p2, VertexSet::of(2, {1}), false, 1), StateBudgetExceeded);
    CHECK_NOTHROW(run(p2, VertexSet::of(2, {1}), false, 2));
}

TEST_CASE("run is deterministic and eventually periodic within 2^n states") {
    Lcg rng(4242);
    for (int round = 0; round < 80; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Instance inst = random_instance(n, 40, rng);
        VertexSet x0(n);
        for (int v = 1; v <= n; ++v)
            if (rng.next_below(2))
                x0.set(v);

        ProcessOutcome a = run(inst, x0, true);
        ProcessOutcome b = run(inst, x0, true);
        CHECK(a.reached_all == b.reached_all);
        CHECK(a.cycle_start == b.cycle_start);
        CHECK(a.cycle_length == b.cycle_length);
        CHECK(*a.trace == *b.trace);

        CHECK(a.cycle_start + a.cycle_length <= (1ll << n));
        CHECK(a.distinct_states <= (1ll << n));

        // decision soundness: reached_all iff the all-active state appears in the trace
        bool saw_all = false;
        for (const VertexSet& s : *a.trace)
            saw_all = saw_all || s == VertexSet::all(n);
        CHECK(a.reached_all == saw_all);

        // the full set is a fixed point under tau <= deg
        CHECK(step(inst, VertexSet::all(n)) == VertexSet::all(n));
    }
}
