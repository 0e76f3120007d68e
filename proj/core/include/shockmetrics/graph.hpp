#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace shockmetrics {

// Directed attack-defense graph: edge (u, v) means "u can attack v directly".
// Node order is first-appearance order in the source file.
struct AttackDefenseGraph {
    std::vector<std::string> nodes;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> in_neighbors;  // per target node

    int size() const { return static_cast<int>(nodes.size()); }
    int degree(int v) const { return static_cast<int>(in_neighbors[v].size()); }

    // Index lookup; throws validation_error naming the id when absent.
    int node_index(const std::string& id) const;

    bool has_edge(int u, int v) const;
};

// Edge-list text format: one directed edge "u v" per line; a line with a
// single token declares an isolated node; "#" starts a comment; blank lines
// ignored.  Self-loops and lines with three or more tokens are errors.
AttackDefenseGraph parse_graph(std::istream& in, const std::string& source_name);
AttackDefenseGraph load_graph(const std::string& path);

// Circulant k-regular graph on n nodes ("0".."n-1"): each node attacks and is
// attacked by its floor(k/2) nearest neighbors on each side, plus the antipodal
// node when k is odd (which needs n even).  Requires 1 <= k < n; odd k with odd
// n is rejected unless k == n-1 (the complete graph).
AttackDefenseGraph make_regular(int k, int n);

}  // namespace shockmetrics
