#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntss/instance.hpp"

namespace ntss {

// Literals are signed variable ids, DIMACS style.
struct RestrictedCnf {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses;
};

RestrictedCnf parse_dimacs(const std::string& text);

// Empty iff: every clause has 2 or 3 distinct literals, no clause holds a
// complementary pair, and every variable occurs positively in exactly two
// clauses and negatively in exactly one. Planarity of the incidence graph is
// deliberately not checked; it does not affect the instance/solution
// correspondence.
std::vector<std::string> validate_restricted(const RestrictedCnf& cnf);

struct VertexLabel {
    std::string role; // pos-literal | neg-literal | gadget-a | gadget-b | gadget-c | clause | subdivision
    std::string name;
    int vertex = 0;
};

struct GeneratedInstance {
    Instance instance;
    RestrictedCnf cnf;
    int k = 0;        // = number of variables
    int distance = 1; // requested minimum distance between degree-3 vertices
    std::vector<VertexLabel> labels;
    std::vector<int> pos_literal; // var -> vertex id of the positive literal vertex
    std::vector<int> neg_literal;
};

// Per variable a 5-vertex gadget (triangle a,b,c with x pendant on a and x̄
// joined to b and c), per clause a triangle, one connection edge per literal
// occurrence to a distinct triangle vertex, every edge subdivided 2*floor(d/2)
// times. Literal vertices get threshold deg, everything else threshold 1.
GeneratedInstance generate(const RestrictedCnf& cnf, int distance);

// The n literal vertices selected by the assignment (index 1..n_vars).
VertexSet assignment_to_target(const GeneratedInstance& gen, const std::vector<bool>& assignment);

// For a target set of order at most k: the satisfying assignment read off the
// literal vertices, unset variables defaulting to true. Absent otherwise.
std::optional<std::vector<bool>> target_to_assignment(const GeneratedInstance& gen, const VertexSet& x);

bool cnf_satisfied(const RestrictedCnf& cnf, const std::vector<bool>& assignment);

std::string format_labels(const GeneratedInstance& gen); // one "<role> <name> <vertex>" line each

} // namespace ntss
