#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace depcodec {

// A labeled dependency arc. head is in [0, n] (0 = dummy root), dep in [1, n].
struct Arc {
    int head = 0;
    int dep = 0;
    std::string label;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.head == b.head && a.dep == b.dep && a.label == b.label;
    }
};

// Unlabeled (head, dep) pair, the decoder's raw output unit.
struct RawArc {
    int head = 0;
    int dep = 0;

    friend bool operator==(const RawArc& a, const RawArc& b) {
        return a.head == b.head && a.dep == b.dep;
    }
};

// A dependency tree over tokens 1..n rooted at the dummy node 0.
// arcs is sorted by dependent: arcs[d-1].dep == d.
struct DepTree {
    int n = 0;
    std::vector<Arc> arcs;

    int head_of(int dep) const { return arcs[static_cast<size_t>(dep) - 1].head; }
    const std::string& label_of(int dep) const { return arcs[static_cast<size_t>(dep) - 1].label; }

    friend bool operator==(const DepTree& a, const DepTree& b) {
        return a.n == b.n && a.arcs == b.arcs;
    }
};

class TreeError : public std::runtime_error {
public:
    enum class Kind { invalid_arc, multiple_heads, cycle, disconnected };

    TreeError(Kind kind, std::vector<int> nodes, const std::string& msg)
        : std::runtime_error(msg), kind(kind), nodes(std::move(nodes)) {}

    Kind kind;
    std::vector<int> nodes;  // offending dependents / cycle members / unreachable nodes
};

// Checks single-headedness, acyclicity and reachability from node 0.
// Throws TreeError naming the offenders; on success returns the tree with
// arcs sorted by dependent.
DepTree validate_tree(std::vector<Arc> arcs, int n);

// Non-throwing convenience wrapper around validate_tree.
bool is_valid_tree(const std::vector<Arc>& arcs, int n);

// Strict endpoint interleaving. Arcs sharing an endpoint do not cross.
// Node 0 is an ordinary endpoint here.
bool arcs_cross(const Arc& a, const Arc& b);

// Vertices are arc ids (dep - 1), edges join crossing arc pairs.
struct CrossingsGraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;     // id pairs, first < second
    std::vector<std::vector<int>> neighbors;    // adjacency, id -> ids
};

CrossingsGraph crossings_graph(const DepTree& t);

// Breadth-first 2-coloring of the crossings graph; true iff bipartite.
bool is_two_planar(const DepTree& t);

// Arcs crossed by at least one other arc, sorted by dependent.
// The sentence is non-projective iff this is non-empty.
std::vector<Arc> nonprojective_arcs(const DepTree& t);

// Enumeration oracle: visits every head function {1..n} -> {0..n} that forms
// a tree rooted at 0, exactly once, with empty labels. Throws for n outside
// [1, 8]. The number of visited trees is tree_count(n).
void for_each_tree(int n, const std::function<void(const DepTree&)>& fn);

// (n+1)^(n-1), the number of labeled trees on {0..n} rooted at 0.
std::int64_t tree_count(int n);

}  // namespace depcodec
