#include "depcodec/tree.hpp"

#include <algorithm>
#include <sstream>

namespace depcodec {

namespace {

std::string join_nodes(const std::vector<int>& nodes) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) os << ",";
        os << nodes[i];
    }
    os << "}";
    return os.str();
}

}  // namespace

DepTree validate_tree(std::vector<Arc> arcs, int n) {
    for (const Arc& a : arcs) {
        if (a.dep < 1 || a.dep > n || a.head < 0 || a.head > n || a.head == a.dep) {
            throw TreeError(TreeError::Kind::invalid_arc, {a.dep},
                            "invalid arc (" + std::to_string(a.head) + "," +
                                std::to_string(a.dep) + ") for n=" + std::to_string(n));
        }
    }

    std::vector<int> head(static_cast<size_t>(n) + 1, -1);
    for (const Arc& a : arcs) {
        if (head[static_cast<size_t>(a.dep)] != -1) {
            throw TreeError(TreeError::Kind::multiple_heads, {a.dep},
                            "dependent " + std::to_string(a.dep) + " has more than one head");
        }
        head[static_cast<size_t>(a.dep)] = a.head;
    }

    // Cycle check: chase heads from every node; a walk of n steps that never
    // reaches 0 or a headless node must have entered a cycle.
    for (int start = 1; start <= n; ++start) {
        int x = start;
        int steps = 0;
        while (x != 0 && head[static_cast<size_t>(x)] != -1) {
            x = head[static_cast<size_t>(x)];
            if (++steps > n) {
                // Re-walk to find a node that repeats, then collect the cycle.
                std::vector<int> mark(static_cast<size_t>(n) + 1, 0);
                int y = start;
                while (!mark[static_cast<size_t>(y)]) {
                    mark[static_cast<size_t>(y)] = 1;
                    y = head[static_cast<size_t>(y)];
                }
                std::vector<int> cycle;
                int z = y;
                do {
                    cycle.push_back(z);
                    z = head[static_cast<size_t>(z)];
                } while (z != y);
                std::sort(cycle.begin(), cycle.end());
                throw TreeError(TreeError::Kind::cycle, cycle,
                                "cycle through nodes " + join_nodes(cycle));
            }
        }
    }

    std::vector<int> headless;
    for (int d = 1; d <= n; ++d) {
        if (head[static_cast<size_t>(d)] == -1) headless.push_back(d);
    }
    if (!headless.empty()) {
        throw TreeError(TreeError::Kind::disconnected, headless,
                        "nodes not reachable from root: " + join_nodes(headless));
    }

    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.dep < b.dep; });
    DepTree t;
    t.n = n;
    t.arcs = std::move(arcs);
    return t;
}

bool is_valid_tree(const std::vector<Arc>& arcs, int n) {
    try {
        validate_tree(arcs, n);
        return true;
    } catch (const TreeError&) {
        return false;
    }
}

bool arcs_cross(const Arc& a, const Arc& b) {
    const auto [i, j] = std::minmax(a.head, a.dep);
    const auto [k, l] = std::minmax(b.head, b.dep);
    if (i == k || i == l || j == k || j == l) return false;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

CrossingsGraph crossings_graph(const DepTree& t) {
    CrossingsGraph g;
    g.node_count = static_cast<int>(t.arcs.size());
    g.neighbors.resize(t.arcs.size());
    for (size_t a = 0; a < t.arcs.size(); ++a) {
        for (size_t b = a + 1; b < t.arcs.size(); ++b) {
            if (arcs_cross(t.arcs[a], t.arcs[b])) {
                g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                g.neighbors[a].push_back(static_cast<int>(b));
                g.neighbors[b].push_back(static_cast<int>(a));
            }
        }
    }
    return g;
}

bool is_two_planar(const DepTree& t) {
    const CrossingsGraph g = crossings_graph(t);
    std::vector<int> color(static_cast<size_t>(g.node_count), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.node_count; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : g.neighbors[static_cast<size_t>(u)]) {
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Arc> nonprojective_arcs(const DepTree& t) {
    const CrossingsGraph g = crossings_graph(t);
    std::vector<Arc> out;
    for (size_t a = 0; a < t.arcs.size(); ++a) {
        if (!g.neighbors[a].empty()) out.push_back(t.arcs[a]);
    }
    return out;
}

void for_each_tree(int n, const std::function<void(const DepTree&)>& fn) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("for_each_tree: n must be in [1,8], got " +
                                    std::to_string(n));
    }
    std::vector<int> head(static_cast<size_t>(n) + 1, 0);
    DepTree t;
    t.n = n;
    t.arcs.resize(static_cast<size_t>(n));
    for (;;) {
        bool ok = true;
        for (int start = 1; start <= n && ok; ++start) {
            int x = start;
            int steps = 0;
            while (x != 0) {
                x = head[static_cast<size_t>(x)];
                if (++steps > n) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            for (int d = 1; d <= n; ++d) {
                Arc& a = t.arcs[static_cast<size_t>(d) - 1];
                a.head = head[static_cast<size_t>(d)];
                a.dep = d;
            }
            fn(t);
        }
        int d = 1;
        while (d <= n) {
            int& h = head[static_cast<size_t>(d)];
            ++h;
            if (h == d) ++h;
            if (h <= n) break;
            h = 0;
            ++d;
        }
        if (d > n) break;
    }
}

std::int64_t tree_count(int n) {
    std::int64_t c = 1;
    for (int i = 0; i < n - 1; ++i) c *= n + 1;
    return c;
}

}  // namespace depcodec
