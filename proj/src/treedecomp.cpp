#include "ntss/treedecomp.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ntss {

int TreeDecomposition::width() const {
    int w = -1;
    for (const VertexSet& bag : bags)
        w = std::max(w, bag.count() - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const NiceNode& node : nodes)
        w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

TreeDecomposition parse_td(const std::string& text, const Instance& inst) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int k = -1, declared_max = 0, n_decl = -1;
    std::vector<VertexSet> bags;
    std::vector<bool> bag_seen;
    std::vector<std::pair<int, int>> edges;

    auto fail = [&](const std::string& what) -> void {
        throw std::runtime_error("td: line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        if (head == "c")
            continue;
        if (head == "s") {
            if (k >= 0)
                fail("duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> k >> declared_max >> n_decl) || fmt != "td" || k < 0 || declared_max < 0 ||
                n_decl < 0)
                fail("malformed header, expected 's td <#bags> <max-bag-size> <n>'");
            if (n_decl != inst.n())
                fail("header vertex count " + std::to_string(n_decl) + " does not match instance n=" +
                     std::to_string(inst.n()));
            bags.assign(k, VertexSet(inst.n()));
            bag_seen.assign(k, false);
        } else if (head == "b") {
            if (k < 0)
                fail("bag line before header");
            int id;
            if (!(ls >> id))
                fail("malformed bag line");
            if (id < 1 || id > k)
                fail("bag id out of range");
            if (bag_seen[id - 1])
                fail("duplicate bag " + std::to_string(id));
            bag_seen[id - 1] = true;
            int v;
            while (ls >> v) {
                if (v < 1 || v > inst.n())
                    fail("vertex id out of range in bag " + std::to_string(id));
                if (bags[id - 1].test(v))
                    fail("duplicate vertex in bag " + std::to_string(id));
                bags[id - 1].set(v);
            }
            if (!ls.eof())
                fail("bad token in bag line");
            if (bags[id - 1].count() > declared_max)
                fail("bag " + std::to_string(id) + " exceeds declared maximum size");
        } else {
            if (k < 0)
                fail("edge line before header");
            int i = 0, j = 0;
            std::istringstream es(line);
            if (!(es >> i >> j))
                fail("malformed tree edge line");
            std::string rest;
            if (es >> rest)
                fail("trailing tokens on tree edge line");
            if (i < 1 || i > k || j < 1 || j > k)
                fail("tree edge endpoint out of range");
            edges.emplace_back(i - 1, j - 1);
        }
    }
    if (k < 0)
        throw std::runtime_error("td: missing header");
    for (int i = 0; i < k; ++i)
        if (!bag_seen[i])
            throw std::runtime_error("td: missing bag " + std::to_string(i + 1));

    TreeDecomposition td;
    td.bags = std::move(bags);
    td.tree_edges = std::move(edges);
    validate_td(td, inst.graph());
    return td;
}

void validate_td(const TreeDecomposition& td, const Graph& g) {
    int k = static_cast<int>(td.bags.size());
    int n = g.vertex_count();
    if (k == 0)
        throw std::runtime_error("td: no bags");
    if (static_cast<int>(td.tree_edges.size()) != k - 1)
        throw std::runtime_error("td: tree must have exactly #bags-1 edges");

    std::vector<std::vector<int>> nbr(k);
    for (auto [i, j] : td.tree_edges) {
        if (i < 0 || i >= k || j < 0 || j >= k || i == j)
            throw std::runtime_error("td: bad tree edge");
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }
    std::vector<bool> seen(k, false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    int reached = 0;
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop();
        ++reached;
        for (int j : nbr[i])
            if (!seen[j]) {
                seen[j] = true;
                bfs.push(j);
            }
    }
    if (reached != k)
        throw std::runtime_error("td: tree edges do not connect all bags");

    std::vector<std::vector<int>> occ(n + 1);
    for (int b = 0; b < k; ++b)
        td.bags[b].for_each([&](int v) { occ[v].push_back(b); });
    for (int v = 1; v <= n; ++v)
        if (occ[v].empty())
            throw std::runtime_error("td: vertex " + std::to_string(v) + " not covered by any bag");

    // a vertex occurring in c bags spans a subtree iff exactly c-1 tree edges
    // join two bags that both contain it
    std::vector<int> shared(n + 1, 0);
    for (auto [i, j] : td.tree_edges)
        (td.bags[i] & td.bags[j]).for_each([&](int v) { ++shared[v]; });
    for (int v = 1; v <= n; ++v)
        if (shared[v] != static_cast<int>(occ[v].size()) - 1)
            throw std::runtime_error("td: occurrences of vertex " + std::to_string(v) +
                                     " do not induce a subtree");

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int b : occ[u])
            if (td.bags[b].test(v)) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::runtime_error("td: edge " + std::to_string(u) + " " + std::to_string(v) +
                                     " not covered by any bag");
    }
}

TreeDecomposition heuristic_td(const Graph& g) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back(0);
        return td;
    }

    std::vector<std::set<int>> adj(n + 1);
    for (int u = 1; u <= n; ++u)
        adj[u] = std::set<int>(g.neighbors(u).begin(), g.neighbors(u).end());

    auto fill_count = [&](int v) {
        long long miss = 0;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
            for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                if (!adj[*it].count(*jt))
                    ++miss;
        return miss;
    };

    std::vector<long long> fill(n + 1);
    using Entry = std::pair<long long, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    for (int v = 1; v <= n; ++v) {
        fill[v] = fill_count(v);
        pq.emplace(fill[v], v);
    }

    std::vector<bool> alive(n + 1, true);
    std::vector<int> pos(n + 1, 0); // elimination index, 0-based
    std::vector<std::vector<int>> bag_of(n);
    std::vector<int> order;
    order.reserve(n);

    while (static_cast<int>(order.size()) < n) {
        auto [f, v] = pq.top();
        pq.pop();
        if (!alive[v] || f != fill[v])
            continue;

        int idx = static_cast<int>(order.size());
        pos[v] = idx;
        order.push_back(v);
        alive[v] = false;

        std::vector<int> nb(adj[v].begin(), adj[v].end());
        bag_of[idx] = nb;
        bag_of[idx].push_back(v);
        std::sort(bag_of[idx].begin(), bag_of[idx].end());

        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (int u : nb)
            adj[u].erase(v);

        std::set<int> affected(nb.begin(), nb.end());
        for (int u : nb)
            affected.insert(adj[u].begin(), adj[u].end());
        for (int u : affected)
            if (alive[u]) {
                fill[u] = fill_count(u);
                pq.emplace(fill[u], u);
            }
    }

    td.bags.reserve(n);
    for (int i = 0; i < n; ++i)
        td.bags.push_back(VertexSet::from_vector(n, bag_of[i]));
    for (int i = 0; i < n - 1; ++i) {
        int parent = -1;
        for (int u : bag_of[i])
            if (u != order[i] && (parent == -1 || pos[u] < pos[parent]))
                parent = u;
        td.tree_edges.emplace_back(i, parent == -1 ? i + 1 : pos[parent]);
    }
    return td;
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const VertexSet& keep) {
    TreeDecomposition out;
    out.bags.reserve(td.bags.size());
    for (const VertexSet& bag : td.bags)
        out.bags.push_back(bag & keep);
    out.tree_edges = td.tree_edges;
    return out;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode>& nodes;

    int add(NodeKind kind, std::vector<int> bag, int child0, int child1, int vertex) {
        NiceNode node;
        node.kind = kind;
        node.bag = std::move(bag);
        node.child0 = child0;
        node.child1 = child1;
        node.vertex = vertex;
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    // leaf + introduce chain up to `bag`
    int build_up(const std::vector<int>& bag) {
        int cur = add(NodeKind::Leaf, {}, -1, -1, 0);
        std::vector<int> have;
        for (int v : bag) {
            have.push_back(v);
            cur = add(NodeKind::Introduce, have, cur, -1, v);
        }
        return cur;
    }

    // forget everything in `from` not in `to`, then introduce the rest of `to`
    int reshape(int cur, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> have = from;
        std::vector<int> drop;
        std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(drop));
        for (int v : drop) {
            have.erase(std::find(have.begin(), have.end(), v));
            cur = add(NodeKind::Forget, have, cur, -1, v);
        }
        std::vector<int> gain;
        std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(gain));
        for (int v : gain) {
            have.insert(std::upper_bound(have.begin(), have.end(), v), v);
            cur = add(NodeKind::Introduce, have, cur, -1, v);
        }
        return cur;
    }
};

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    int k = static_cast<int>(td.bags.size());
    assert(k > 0);

    std::vector<std::vector<int>> nbr(k);
    for (auto [i, j] : td.tree_edges) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }
    for (auto& v : nbr)
        std::sort(v.begin(), v.end());

    // root the tree at node 0, children in ascending id order
    std::vector<int> parent(k, -1), dfs_order;
    dfs_order.reserve(k);
    std::vector<int> stack{0};
    std::vector<bool> visited(k, false);
    visited[0] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        dfs_order.push_back(t);
        for (int c : nbr[t])
            if (!visited[c]) {
                visited[c] = true;
                parent[c] = t;
                stack.push_back(c);
            }
    }

    std::vector<std::vector<int>> children(k);
    for (int t = 0; t < k; ++t)
        if (parent[t] >= 0)
            children[parent[t]].push_back(t);
    for (auto& c : children)
        std::sort(c.begin(), c.end());

    NiceTreeDecomposition ntd;
    NiceBuilder builder{ntd.nodes};
    std::vector<int> top(k, -1); // nice-subtree top per td node, bag = td bag

    for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
        int t = *it;
        std::vector<int> bag = td.bags[t].to_vector();
        if (children[t].empty()) {
            top[t] = builder.build_up(bag);
            continue;
        }
        int combined = -1;
        for (int c : children[t]) {
            int chain = builder.reshape(top[c], td.bags[c].to_vector(), bag);
            combined = combined < 0 ? chain : builder.add(NodeKind::Join, bag, combined, chain, 0);
        }
        top[t] = combined;
    }

    // forget the root bag so the root is empty
    ntd.root = builder.reshape(top[0], td.bags[0].to_vector(), {});
    return ntd;
}

void validate_nice(const NiceTreeDecomposition& ntd, const Graph& g) {
    int k = static_cast<int>(ntd.nodes.size());
    if (ntd.root < 0 || ntd.root >= k)
        throw std::runtime_error("nice td: bad root");
    std::vector<int> indeg(k, 0);
    for (const NiceNode& node : ntd.nodes) {
        for (int c : {node.child0, node.child1})
            if (c != -1) {
                if (c < 0 || c >= k)
                    throw std::runtime_error("nice td: bad child index");
                ++indeg[c];
            }
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
            throw std::runtime_error("nice td: bag not a sorted set");
    }
    for (int i = 0; i < k; ++i) {
        int expected = i == ntd.root ? 0 : 1;
        if (indeg[i] != expected)
            throw std::runtime_error("nice td: nodes do not form a tree rooted at root");
    }
    std::vector<int> stack{ntd.root};
    int reached = 0;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        ++reached;
        for (int c : {ntd.nodes[t].child0, ntd.nodes[t].child1})
            if (c != -1)
                stack.push_back(c);
    }
    if (reached != k)
        throw std::runtime_error("nice td: unreachable nodes");

    if (!ntd.nodes[ntd.root].bag.empty())
        throw std::runtime_error("nice td: root bag not empty");

    auto diff_one = [](const std::vector<int>& big, const std::vector<int>& small, int v) {
        if (big.size() != small.size() + 1)
            return false;
        std::vector<int> d;
        std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(d));
        return d.size() == 1 && d[0] == v && std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    for (const NiceNode& node : ntd.nodes) {
        switch (node.kind) {
        case NodeKind::Leaf:
            if (node.child0 != -1 || node.child1 != -1 || !node.bag.empty())
                throw std::runtime_error("nice td: malformed leaf");
            break;
        case NodeKind::Introduce: {
            if (node.child0 == -1 || node.child1 != -1)
                throw std::runtime_error("nice td: introduce must have one child");
            if (!diff_one(node.bag, ntd.nodes[node.child0].bag, node.vertex))
                throw std::runtime_error("nice td: introduce bag mismatch");
            break;
        }
        case NodeKind::Forget: {
            if (node.child0 == -1 || node.child1 != -1)
                throw std::runtime_error("nice td: forget must have one child");
            if (!diff_one(ntd.nodes[node.child0].bag, node.bag, node.vertex))
                throw std::runtime_error("nice td: forget bag mismatch");
            break;
        }
        case NodeKind::Join:
            if (node.child0 == -1 || node.child1 == -1)
                throw std::runtime_error("nice td: join must have two children");
            if (ntd.nodes[node.child0].bag != node.bag || ntd.nodes[node.child1].bag != node.bag)
                throw std::runtime_error("nice td: join bags differ");
            break;
        }
    }

    validate_td(nice_to_td(ntd, g.vertex_count()), g);
}

TreeDecomposition nice_to_td(const NiceTreeDecomposition& ntd, int n) {
    TreeDecomposition td;
    td.bags.reserve(ntd.nodes.size());
    for (const NiceNode& node : ntd.nodes)
        td.bags.push_back(VertexSet::from_vector(n, node.bag));
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
        for (int c : {ntd.nodes[i].child0, ntd.nodes[i].child1})
            if (c != -1)
                td.tree_edges.emplace_back(static_cast<int>(i), c);
    return td;
}

} // namespace ntss
