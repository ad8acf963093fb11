#include "ntss/instance.hpp"

#include <sstream>
#include <stdexcept>

namespace ntss {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("instance: line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Instance Instance::make(Graph g, ThresholdMap tau) {
    int n = g.vertex_count();
    if (static_cast<int>(tau.tau.size()) != n + 1)
        throw std::runtime_error("instance: threshold map size mismatch");
    for (int u = 1; u <= n; ++u) {
        int t = tau.tau[u];
        int d = g.degree(u);
        if (t < 0)
            throw std::runtime_error("instance: negative threshold at vertex " + std::to_string(u));
        if (t > d)
            throw std::runtime_error("instance: threshold " + std::to_string(t) + " exceeds degree " +
                                     std::to_string(d) + " at vertex " + std::to_string(u));
        if (t != 0 && t != 1 && t != d)
            throw std::runtime_error("instance: threshold not in {0,1,deg} at vertex " + std::to_string(u));
    }
    return Instance(std::move(g), std::move(tau));
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1;
    long long m = -1;
    std::vector<std::string> thr_token;       // 1-based, "" = unseen
    std::vector<std::pair<int, int>> edges;
    long long t_lines = 0, e_lines = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue; // blank line
        if (head[0] == '#')
            continue;
        if (head == "p") {
            if (n >= 0)
                parse_fail(line_no, "duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "ntss" || n < 0 || m < 0)
                parse_fail(line_no, "malformed header, expected 'p ntss <n> <m>'");
            std::string rest;
            if (ls >> rest)
                parse_fail(line_no, "trailing tokens after header");
            thr_token.assign(n + 1, "");
        } else if (head == "t") {
            if (n < 0)
                parse_fail(line_no, "threshold line before header");
            int u;
            std::string tok;
            if (!(ls >> u >> tok))
                parse_fail(line_no, "malformed threshold line");
            std::string rest;
            if (ls >> rest)
                parse_fail(line_no, "trailing tokens on threshold line");
            if (u < 1 || u > n)
                parse_fail(line_no, "vertex id out of range");
            if (!thr_token[u].empty())
                parse_fail(line_no, "duplicate threshold for vertex " + std::to_string(u));
            thr_token[u] = tok;
            ++t_lines;
        } else if (head == "e") {
            if (n < 0)
                parse_fail(line_no, "edge line before header");
            int u, v;
            if (!(ls >> u >> v))
                parse_fail(line_no, "malformed edge line");
            std::string rest;
            if (ls >> rest)
                parse_fail(line_no, "trailing tokens on edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(line_no, "vertex id out of range");
            if (u >= v)
                parse_fail(line_no, "edge must satisfy u < v");
            edges.emplace_back(u, v);
            ++e_lines;
        } else {
            parse_fail(line_no, "unknown line type '" + head + "'");
        }
    }

    if (n < 0)
        throw std::runtime_error("instance: missing header");
    if (t_lines != n)
        throw std::runtime_error("instance: expected " + std::to_string(n) + " threshold lines, got " +
                                 std::to_string(t_lines));
    if (e_lines != m)
        throw std::runtime_error("instance: expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(e_lines));

    Graph g = Graph::from_edges(n, edges);

    ThresholdMap tau;
    tau.tau.assign(n + 1, 0);
    for (int u = 1; u <= n; ++u) {
        const std::string& tok = thr_token[u];
        if (tok == "deg") {
            tau.tau[u] = g.degree(u);
        } else {
            std::size_t used = 0;
            int t = 0;
            try {
                t = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("instance: bad threshold token '" + tok + "' for vertex " +
                                         std::to_string(u));
            }
            if (used != tok.size() || t < 0)
                throw std::runtime_error("instance: bad threshold token '" + tok + "' for vertex " +
                                         std::to_string(u));
            tau.tau[u] = t;
        }
    }

    return Instance::make(std::move(g), std::move(tau));
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    const Graph& g = inst.graph();
    out << "p ntss " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 1; u <= g.vertex_count(); ++u)
        out << "t " << u << ' ' << inst.tau(u) << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

} // namespace ntss
