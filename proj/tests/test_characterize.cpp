#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "ntss/characterize.hpp"
#include "ntss/kernelize.hpp"
#include "ntss/random_gen.hpp"
#include "ntss/simulate.hpp"

using namespace ntss;

TEST_CASE("classify refuses instances with adjacent full vertices") {
    CHECK_THROWS_AS(classify(fixtures::path_all_ones(2)), std::invalid_argument);
    CHECK_THROWS_AS(classify(fixtures::star_all_full(3)), std::invalid_argument);
}

TEST_CASE("classify on the odd cycle, the even cycle, and the spider") {
    Classification c5 = classify(fixtures::cycle_all_ones(5));
    REQUIRE(c5.p_components.size() == 1);
    CHECK(c5.p_components[0].members == VertexSet::all(5));
    CHECK(c5.p_components[0].closed_nbhd == VertexSet::all(5));
    CHECK(c5.q_components.empty());
    CHECK(c5.sentinels.empty());
    CHECK(c5.full_vertices.empty());

    Classification c4 = classify(fixtures::cycle_all_ones(4));
    CHECK(c4.p_components.empty());
    REQUIRE(c4.q_components.size() == 1);
    const QComponent& q = c4.q_components[0];
    CHECK(q.a == VertexSet::of(4, {1, 3}));
    CHECK(q.b == VertexSet::of(4, {2, 4}));
    CHECK(q.a_prime.empty());
    CHECK(q.b_prime.empty());
    CHECK(q.c.empty());
    CHECK(q.a_bar == VertexSet::of(4, {1, 3}));
    CHECK(q.b_bar == VertexSet::of(4, {2, 4}));

    Classification sp = classify(fixtures::spider());
    CHECK(sp.p_components.empty());
    CHECK(sp.q_components.empty());
    REQUIRE(sp.sentinels.size() == 1);
    CHECK(sp.sentinels[0] == 1);
    CHECK(sp.full_vertices == VertexSet::of(5, {2, 3}));
}

TEST_CASE("extract_conditions mirrors the classification") {
    Instance c5 = fixtures::cycle_all_ones(5);
    ConditionSet cond5 = extract_conditions(classify(c5), c5.graph());
    REQUIRE(cond5.hitting.size() == 1);
    CHECK(cond5.hitting[0] == VertexSet::all(5));
    CHECK(cond5.pair_hitting.empty());
    CHECK(cond5.sentinel_constraints.empty());

    Instance c4 = fixtures::cycle_all_ones(4);
    ConditionSet cond4 = extract_conditions(classify(c4), c4.graph());
    REQUIRE(cond4.pair_hitting.size() == 1);
    CHECK(cond4.pair_hitting[0].first == VertexSet::of(4, {1, 3}));
    CHECK(cond4.pair_hitting[0].second == VertexSet::of(4, {2, 4}));

    Instance sp = fixtures::spider();
    ConditionSet conds = extract_conditions(classify(sp), sp.graph());
    REQUIRE(conds.sentinel_constraints.size() == 1);
    const SentinelCondition& sc = conds.sentinel_constraints[0];
    CHECK(sc.vertex == 1);
    REQUIRE(sc.neighbors.size() == 2);
    CHECK(sc.neighbors[0].first == 2);
    CHECK(sc.neighbors[0].second == VertexSet::of(5, {1, 4}));
    CHECK(sc.neighbors[1].first == 3);
    CHECK(sc.neighbors[1].second == VertexSet::of(5, {1, 5}));
}

TEST_CASE("satisfies matches simulation on the worked examples") {
    Instance c4 = fixtures::cycle_all_ones(4);
    ConditionSet cond4 = extract_conditions(classify(c4), c4.graph());
    CHECK_FALSE(satisfies(cond4, VertexSet::of(4, {1})));
    CHECK_FALSE(is_target_set(c4, VertexSet::of(4, {1})));

    Instance c5 = fixtures::cycle_all_ones(5);
    ConditionSet cond5 = extract_conditions(classify(c5), c5.graph());
    CHECK(satisfies(cond5, VertexSet::of(5, {1})));
    CHECK(is_target_set(c5, VertexSet::of(5, {1})));

    Instance sp = fixtures::spider();
    ConditionSet conds = extract_conditions(classify(sp), sp.graph());
    CHECK(satisfies(conds, VertexSet::of(5, {2, 1, 4})));
    CHECK(is_target_set(sp, VertexSet::of(5, {1, 2, 4})));
    CHECK_FALSE(satisfies(conds, VertexSet::of(5, {1, 2})));
    CHECK_FALSE(is_target_set(sp, VertexSet::of(5, {1, 2})));
}

TEST_CASE("decide_target_set_fast composes the reduction with the conditions") {
    Instance p4 = fixtures::make(4, fixtures::path_edges(4), {0, 2, 2, 0});
    CHECK_FALSE(decide_target_set_fast(p4, VertexSet::of(4, {1, 2, 3})));
    CHECK(decide_target_set_fast(p4, VertexSet::all(4)));

    Instance p4ones = fixtures::path_all_ones(4);
    CHECK(decide_target_set_fast(p4ones, VertexSet::of(4, {1, 2})));
}

TEST_CASE("characterization equivalence on every subset of small kernels") {
    Lcg rng(555);
    int checked = 0;
    for (int round = 0; checked < 50; ++round) {
        REQUIRE(round < 10000);
        int n = 1 + static_cast<int>(rng.next_below(8));
        Instance kernel = kernelize(random_instance(n, 45, rng)).kernel;
        int kn = kernel.n();
        if (kn == 0)
            continue;
        ConditionSet cond = extract_conditions(classify(kernel), kernel.graph());
        for (unsigned mask = 0; mask < (1u << kn); ++mask) {
            VertexSet x(kn);
            for (int v = 1; v <= kn; ++v)
                if (mask & (1u << (v - 1)))
                    x.set(v);
            CHECK(satisfies(cond, x) == is_target_set(kernel, x));
        }
        ++checked;
    }
}

TEST_CASE("decide_target_set_fast agrees with simulation, reductions included") {
    Lcg rng(556);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Instance inst = random_instance(n, 45, rng);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            VertexSet x(n);
            for (int v = 1; v <= n; ++v)
                if (mask & (1u << (v - 1)))
                    x.set(v);
            CHECK(decide_target_set_fast(inst, x) == is_target_set(inst, x));
        }
    }
}

TEST_CASE("the condition predicate is monotone under supersets") {
    Lcg rng(557);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        Instance kernel = kernelize(random_instance(n, 45, rng)).kernel;
        int kn = kernel.n();
        ConditionSet cond = extract_conditions(classify(kernel), kernel.graph());
        VertexSet x(kn), y(kn);
        for (int v = 1; v <= kn; ++v) {
            bool in_x = rng.next_below(2) == 0;
            if (in_x)
                x.set(v);
            if (in_x || rng.next_below(2) == 0)
                y.set(v);
        }
        if (satisfies(cond, x))
            CHECK(satisfies(cond, y));
    }
}

TEST_CASE("q-component set algebra") {
    Lcg rng(558);
    int seen = 0;
    for (int round = 0; seen < 30; ++round) {
        REQUIRE(round < 20000);
        int n = 3 + static_cast<int>(rng.next_below(6));
        Instance kernel = kernelize(random_instance(n, 40, rng)).kernel;
        if (kernel.n() == 0)
            continue;
        for (const QComponent& q : classify(kernel).q_components) {
            CHECK_FALSE(q.a.intersects(q.b));
            CHECK((q.a_bar & q.b_bar) == (q.c | (q.a & q.b_bar)));
            CHECK((q.a_bar & q.b_bar) == q.c);
            // A', B', C live on the outside fringe and are pairwise disjoint
            VertexSet fringe = open_neighborhood(kernel.graph(), q.members);
            CHECK(q.a_prime.is_subset_of(fringe));
            CHECK(q.b_prime.is_subset_of(fringe));
            CHECK(q.c.is_subset_of(fringe));
            CHECK_FALSE(q.a_prime.intersects(q.b_prime));
            CHECK_FALSE(q.a_prime.intersects(q.c));
            CHECK_FALSE(q.b_prime.intersects(q.c));
            // Ā ∪ B̄ stays inside the closed neighborhood of the component
            VertexSet closed = closed_neighborhood(kernel.graph(), q.members);
            CHECK((q.a_bar | q.b_bar).is_subset_of(closed));
            ++seen;
        }
    }
}
