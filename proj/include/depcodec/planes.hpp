#pragma once

#include <cstdint>
#include <vector>

#include "depcodec/tree.hpp"

namespace depcodec {

enum class Plane : std::uint8_t { unassigned = 0, one = 1, two = 2 };

// Assignment of every arc to plane 1, plane 2 or no plane.
// Indexed like DepTree::arcs (arc id = dep - 1).
struct PlanePartition {
    std::vector<Plane> plane;

    int unassigned_count() const {
        int c = 0;
        for (Plane p : plane) c += (p == Plane::unassigned);
        return c;
    }
};

// Everything in plane 1 (the single-plane encoding mode).
PlanePartition single_plane(const DepTree& t);

// Traversal order shared by both assignment strategies and the decoder:
// left-to-right by right endpoint, shortest arc first on ties.
bool arc_order_less(const Arc& a, const Arc& b);

// Arc ids of t in traversal order.
std::vector<int> arc_order(const DepTree& t);

// Greedy assignment: each arc takes the first admissible plane, no plane if
// already-assigned arcs crossing it occupy both. switch_averse prefers the
// plane of the most recent assignment when both are admissible (initially 1).
PlanePartition assign_greedy(const DepTree& t, bool switch_averse = false);

// Restriction propagation on the crossings graph: assigning an arc forbids
// the opposite plane for it and alternates the forbidding outward over its
// crossing neighbors. Leaves no arc unassigned whenever the tree is
// 2-planar.
PlanePartition assign_prop(const DepTree& t, bool switch_averse = false);

// True iff the partition covers exactly t's arcs and no two arcs that share
// a plane cross.
bool partition_is_valid(const DepTree& t, const PlanePartition& p);

}  // namespace depcodec
