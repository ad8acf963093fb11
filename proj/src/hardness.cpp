#include "ntss/hardness.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "ntss/simulate.hpp"

namespace ntss {

RestrictedCnf parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    RestrictedCnf cnf;
    long long declared_clauses = -1;
    std::vector<int> current;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first == "c")
            continue;
        if (first == "p") {
            if (declared_clauses >= 0)
                throw std::runtime_error("dimacs: line " + std::to_string(line_no) + ": duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> cnf.n_vars >> declared_clauses) || fmt != "cnf" || cnf.n_vars < 0 ||
                declared_clauses < 0)
                throw std::runtime_error("dimacs: line " + std::to_string(line_no) + ": malformed header");
            continue;
        }
        if (declared_clauses < 0)
            throw std::runtime_error("dimacs: line " + std::to_string(line_no) + ": clause before header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > cnf.n_vars)
                    throw std::runtime_error("dimacs: line " + std::to_string(line_no) +
                                             ": literal out of range");
                current.push_back(lit);
            }
        }
        if (!ls.eof())
            throw std::runtime_error("dimacs: line " + std::to_string(line_no) + ": bad token");
    }
    if (!current.empty())
        throw std::runtime_error("dimacs: unterminated clause");
    if (declared_clauses < 0)
        throw std::runtime_error("dimacs: missing header");
    if (static_cast<long long>(cnf.clauses.size()) != declared_clauses)
        throw std::runtime_error("dimacs: expected " + std::to_string(declared_clauses) + " clauses, got " +
                                 std::to_string(cnf.clauses.size()));
    return cnf;
}

std::vector<std::string> validate_restricted(const RestrictedCnf& cnf) {
    std::vector<std::string> out;
    std::vector<int> pos(cnf.n_vars + 1, 0), neg(cnf.n_vars + 1, 0);
    for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
        const auto& cl = cnf.clauses[j];
        std::string where = "clause " + std::to_string(j + 1);
        if (cl.size() != 2 && cl.size() != 3)
            out.push_back(where + ": must contain two or three literals");
        std::vector<int> sorted = cl;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            out.push_back(where + ": duplicate literal");
        for (int lit : cl)
            if (std::find(cl.begin(), cl.end(), -lit) != cl.end()) {
                out.push_back(where + ": contains a variable and its negation");
                break;
            }
        std::vector<int> seen;
        for (int lit : cl) {
            if (std::find(seen.begin(), seen.end(), lit) != seen.end())
                continue;
            seen.push_back(lit);
            (lit > 0 ? pos[lit] : neg[-lit]) += 1;
        }
    }
    for (int v = 1; v <= cnf.n_vars; ++v) {
        if (pos[v] != 2)
            out.push_back("variable " + std::to_string(v) + ": positive literal in " +
                          std::to_string(pos[v]) + " clauses, need exactly 2");
        if (neg[v] != 1)
            out.push_back("variable " + std::to_string(v) + ": negative literal in " +
                          std::to_string(neg[v]) + " clauses, need exactly 1");
    }
    return out;
}

GeneratedInstance generate(const RestrictedCnf& cnf, int distance) {
    if (distance < 1)
        throw std::invalid_argument("generate: distance must be positive");
    if (!validate_restricted(cnf).empty())
        throw std::invalid_argument("generate: CNF does not meet the occurrence restrictions");

    int n = cnf.n_vars;
    int m = static_cast<int>(cnf.clauses.size());
    int subdivisions = 2 * (distance / 2); // per edge

    GeneratedInstance gen;
    gen.cnf = cnf;
    gen.k = n;
    gen.distance = distance;
    gen.pos_literal.assign(n + 1, 0);
    gen.neg_literal.assign(n + 1, 0);

    int next_id = 0;
    auto fresh = [&](const std::string& role, const std::string& name) {
        ++next_id;
        gen.labels.push_back({role, name, next_id});
        return next_id;
    };

    std::vector<int> a(n + 1), b(n + 1), c(n + 1);
    for (int i = 1; i <= n; ++i) {
        std::string si = std::to_string(i);
        gen.pos_literal[i] = fresh("pos-literal", "x" + si);
        gen.neg_literal[i] = fresh("neg-literal", "xbar" + si);
        a[i] = fresh("gadget-a", "a" + si);
        b[i] = fresh("gadget-b", "b" + si);
        c[i] = fresh("gadget-c", "c" + si);
    }
    std::vector<std::array<int, 3>> tri(m + 1);
    for (int j = 1; j <= m; ++j)
        for (int t = 0; t < 3; ++t)
            tri[j][t] = fresh("clause", "C" + std::to_string(j) + "." + std::to_string(t + 1));

    std::vector<std::pair<int, int>> base;
    for (int i = 1; i <= n; ++i) {
        base.emplace_back(gen.pos_literal[i], a[i]);
        base.emplace_back(a[i], b[i]);
        base.emplace_back(b[i], c[i]);
        base.emplace_back(a[i], c[i]);
        base.emplace_back(gen.neg_literal[i], b[i]);
        base.emplace_back(gen.neg_literal[i], c[i]);
    }
    for (int j = 1; j <= m; ++j) {
        base.emplace_back(tri[j][0], tri[j][1]);
        base.emplace_back(tri[j][1], tri[j][2]);
        base.emplace_back(tri[j][0], tri[j][2]);
    }
    // the l-th literal of a clause attaches to the l-th triangle vertex,
    // keeping every triangle vertex at degree <= 3
    for (int j = 1; j <= m; ++j)
        for (std::size_t l = 0; l < cnf.clauses[j - 1].size(); ++l) {
            int lit = cnf.clauses[j - 1][l];
            int lv = lit > 0 ? gen.pos_literal[lit] : gen.neg_literal[-lit];
            base.emplace_back(lv, tri[j][l]);
        }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : base) {
        if (subdivisions == 0) {
            edges.emplace_back(std::min(u, v), std::max(u, v));
            continue;
        }
        int prev = u;
        for (int s = 1; s <= subdivisions; ++s) {
            int w = fresh("subdivision",
                          "s" + std::to_string(u) + "-" + std::to_string(v) + "." + std::to_string(s));
            edges.emplace_back(std::min(prev, w), std::max(prev, w));
            prev = w;
        }
        edges.emplace_back(std::min(prev, v), std::max(prev, v));
    }

    long long expected_order = 5ll * n + 3ll * m + static_cast<long long>(subdivisions) * (9ll * n + 3ll * m);
    if (next_id != expected_order)
        throw std::logic_error("generate: order formula violated");

    Graph g = Graph::from_edges(next_id, edges);
    for (int v = 1; v <= next_id; ++v)
        if (g.degree(v) > 3)
            throw std::logic_error("generate: construction exceeded maximum degree 3");

    ThresholdMap tau;
    tau.tau.assign(next_id + 1, 1);
    for (int i = 1; i <= n; ++i) {
        tau.tau[gen.pos_literal[i]] = g.degree(gen.pos_literal[i]);
        tau.tau[gen.neg_literal[i]] = g.degree(gen.neg_literal[i]);
    }
    gen.instance = Instance::make(std::move(g), std::move(tau));
    return gen;
}

VertexSet assignment_to_target(const GeneratedInstance& gen, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != gen.k + 1)
        throw std::invalid_argument("assignment_to_target: assignment must cover variables 1..n");
    VertexSet x(gen.instance.n());
    for (int i = 1; i <= gen.k; ++i)
        x.set(assignment[i] ? gen.pos_literal[i] : gen.neg_literal[i]);
    return x;
}

std::optional<std::vector<bool>> target_to_assignment(const GeneratedInstance& gen, const VertexSet& x) {
    if (x.count() > gen.k)
        return std::nullopt;
    if (!is_target_set(gen.instance, x))
        return std::nullopt;
    std::vector<bool> assignment(gen.k + 1, true);
    for (int i = 1; i <= gen.k; ++i) {
        bool has_pos = x.test(gen.pos_literal[i]);
        bool has_neg = x.test(gen.neg_literal[i]);
        if (has_pos && has_neg)
            throw std::logic_error("target_to_assignment: both literal vertices selected");
        if (has_neg)
            assignment[i] = false;
    }
    if (!cnf_satisfied(gen.cnf, assignment))
        throw std::logic_error("target_to_assignment: small target set does not decode to a satisfying "
                               "assignment");
    return assignment;
}

bool cnf_satisfied(const RestrictedCnf& cnf, const std::vector<bool>& assignment) {
    for (const auto& cl : cnf.clauses) {
        bool sat = false;
        for (int lit : cl)
            if (lit > 0 ? assignment[lit] : !assignment[-lit]) {
                sat = true;
                break;
            }
        if (!sat)
            return false;
    }
    return true;
}

std::string format_labels(const GeneratedInstance& gen) {
    std::ostringstream out;
    for (const VertexLabel& l : gen.labels)
        out << l.role << ' ' << l.name << ' ' << l.vertex << '\n';
    return out.str();
}

} // namespace ntss
