#include "depcodec/planes.hpp"

#include <algorithm>
#include <numeric>

namespace depcodec {

PlanePartition single_plane(const DepTree& t) {
    PlanePartition p;
    p.plane.assign(t.arcs.size(), Plane::one);
    return p;
}

bool arc_order_less(const Arc& a, const Arc& b) {
    const auto [al, ar] = std::minmax(a.head, a.dep);
    const auto [bl, br] = std::minmax(b.head, b.dep);
    if (ar != br) return ar < br;
    return al > bl;  // shorter arc first when right endpoints coincide
}

std::vector<int> arc_order(const DepTree& t) {
    std::vector<int> ids(t.arcs.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return arc_order_less(t.arcs[static_cast<size_t>(a)], t.arcs[static_cast<size_t>(b)]);
    });
    return ids;
}

namespace {

Plane pick_plane(bool one_ok, bool two_ok, bool switch_averse, Plane last_used) {
    if (one_ok && two_ok) return switch_averse ? last_used : Plane::one;
    if (one_ok) return Plane::one;
    if (two_ok) return Plane::two;
    return Plane::unassigned;
}

}  // namespace

PlanePartition assign_greedy(const DepTree& t, bool switch_averse) {
    const CrossingsGraph g = crossings_graph(t);
    PlanePartition p;
    p.plane.assign(t.arcs.size(), Plane::unassigned);
    Plane last_used = Plane::one;
    for (int id : arc_order(t)) {
        bool one_ok = true;
        bool two_ok = true;
        for (int nb : g.neighbors[static_cast<size_t>(id)]) {
            if (p.plane[static_cast<size_t>(nb)] == Plane::one) one_ok = false;
            if (p.plane[static_cast<size_t>(nb)] == Plane::two) two_ok = false;
        }
        const Plane chosen = pick_plane(one_ok, two_ok, switch_averse, last_used);
        p.plane[static_cast<size_t>(id)] = chosen;
        if (chosen != Plane::unassigned) last_used = chosen;
    }
    return p;
}

PlanePartition assign_prop(const DepTree& t, bool switch_averse) {
    const CrossingsGraph g = crossings_graph(t);
    PlanePartition p;
    p.plane.assign(t.arcs.size(), Plane::unassigned);

    // forbidden[0][a]: a may not go to plane 1; forbidden[1][a]: not plane 2.
    std::vector<char> forbidden[2];
    forbidden[0].assign(t.arcs.size(), 0);
    forbidden[1].assign(t.arcs.size(), 0);

    // Iterative Propagate: mark (arc, plane) forbidden and alternate outward
    // over crossing neighbors. Each (arc, plane) pair is processed at most
    // once, so total work is linear in the crossing count.
    std::vector<std::pair<int, int>> work;
    const auto propagate = [&](int arc, int plane_idx) {
        work.clear();
        work.emplace_back(arc, plane_idx);
        while (!work.empty()) {
            const auto [x, px] = work.back();
            work.pop_back();
            if (forbidden[px][static_cast<size_t>(x)]) continue;
            forbidden[px][static_cast<size_t>(x)] = 1;
            for (int nb : g.neighbors[static_cast<size_t>(x)]) {
                if (!forbidden[1 - px][static_cast<size_t>(nb)]) {
                    work.emplace_back(nb, 1 - px);
                }
            }
        }
    };

    Plane last_used = Plane::one;
    for (int id : arc_order(t)) {
        const bool one_ok = !forbidden[0][static_cast<size_t>(id)];
        const bool two_ok = !forbidden[1][static_cast<size_t>(id)];
        const Plane chosen = pick_plane(one_ok, two_ok, switch_averse, last_used);
        p.plane[static_cast<size_t>(id)] = chosen;
        if (chosen == Plane::one) {
            last_used = Plane::one;
            propagate(id, 1);  // taken by plane 1: forbid 2 here, 1 on neighbors, ...
        } else if (chosen == Plane::two) {
            last_used = Plane::two;
            propagate(id, 0);
        }
    }
    return p;
}

bool partition_is_valid(const DepTree& t, const PlanePartition& p) {
    if (p.plane.size() != t.arcs.size()) return false;
    for (size_t a = 0; a < t.arcs.size(); ++a) {
        for (size_t b = a + 1; b < t.arcs.size(); ++b) {
            if (p.plane[a] == Plane::unassigned || p.plane[a] != p.plane[b]) continue;
            if (arcs_cross(t.arcs[a], t.arcs[b])) return false;
        }
    }
    return true;
}

}  // namespace depcodec
