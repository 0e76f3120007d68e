#include "shockmetrics/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "shockmetrics/errors.hpp"

namespace shockmetrics {

int AttackDefenseGraph::node_index(const std::string& id) const {
    auto it = index.find(id);
    if (it == index.end())
        throw validation_error("unknown node id '" + id + "'");
    return it->second;
}

bool AttackDefenseGraph::has_edge(int u, int v) const {
    const auto& in = in_neighbors[v];
    return std::find(in.begin(), in.end(), u) != in.end();
}

namespace {

int intern(AttackDefenseGraph& g, const std::string& id) {
    auto it = g.index.find(id);
    if (it != g.index.end()) return it->second;
    int i = g.size();
    g.index.emplace(id, i);
    g.nodes.push_back(id);
    g.in_neighbors.emplace_back();
    return i;
}

void add_edge(AttackDefenseGraph& g, int u, int v) {
    if (!g.has_edge(u, v)) {
        g.edges.emplace_back(u, v);
        g.in_neighbors[v].push_back(u);
    }
}

}  // namespace

AttackDefenseGraph parse_graph(std::istream& in, const std::string& source_name) {
    AttackDefenseGraph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (!(ls >> b)) {
            intern(g, a);  // isolated-node declaration
            continue;
        }
        if (ls >> extra)
            throw parse_error(source_name + ":" + std::to_string(lineno) +
                              ": expected 'u v' edge, found extra token '" + extra + "'");
        if (a == b)
            throw parse_error(source_name + ":" + std::to_string(lineno) +
                              ": self-loop on node '" + a + "' is not allowed");
        int u = intern(g, a);
        int v = intern(g, b);
        add_edge(g, u, v);
    }
    return g;
}

AttackDefenseGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open graph file '" + path + "'");
    return parse_graph(f, path);
}

AttackDefenseGraph make_regular(int k, int n) {
    if (n < 1) throw validation_error("regular graph needs n >= 1 nodes");
    if (k < 1 || k >= n)
        throw validation_error("regular graph needs 1 <= k < n (got k=" +
                               std::to_string(k) + ", n=" + std::to_string(n) + ")");
    if (k % 2 != 0 && n % 2 != 0 && k != n - 1)
        throw validation_error(
            "no k-regular circulant exists for odd k with odd n (got k=" +
            std::to_string(k) + ", n=" + std::to_string(n) + ")");
    AttackDefenseGraph g;
    for (int i = 0; i < n; ++i) intern(g, std::to_string(i));
    if (k == n - 1) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) add_edge(g, u, v);
        return g;
    }
    for (int u = 0; u < n; ++u) {
        for (int j = 1; j <= k / 2; ++j) {
            add_edge(g, u, (u + j) % n);
            add_edge(g, u, (u - j + n) % n);
        }
        // Odd degree on an even cycle: close with the antipodal chord.
        if (k % 2 != 0) add_edge(g, u, (u + n / 2) % n);
    }
    return g;
}

}  // namespace shockmetrics
