#ifndef NACURVE_DISK_TREE_HPP
#define NACURVE_DISK_TREE_HPP

#include <string>
#include <vector>

#include "nacurve/disk.hpp"
#include "nacurve/skeleton.hpp"

namespace nacurve {

// Rooted containment tree of a closed collection of disks. The distinguished
// boundary root v0 carries no disk and is encoded as parent index -1; disk
// vertices are canonical and sorted by (radius_val, center), so construction is
// deterministic. thickness(w -> v) = radius_val(v) - radius_val(w), with
// radius_val(v0) = 0.
struct DiskTreeEdge {
    int parent = -1;  // -1 = boundary root v0
    int child = 0;
    Rational thickness;
};

struct DiskTree {
    Int prime;
    std::vector<ClosedDisk> vertices;
    std::vector<DiskTreeEdge> edges;  // one per vertex, ordered by child index

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    // Parent vertex index of a disk vertex (-1 for the child of v0).
    int parent_of(int v) const { return edges[v].parent; }
    // The unique child of the boundary root (the maximal disk).
    int root_child() const;
    std::vector<int> children_of(int v) const;  // v = -1 for the root
    // Index of the canonical equal vertex disk, or -1.
    int find_vertex(const ClosedDisk& d) const;
};

// Builds the containment tree of a *closed* collection. Throws
// std::invalid_argument naming a witness pair when the collection is not closed.
DiskTree build_tree(const std::vector<ClosedDisk>& disks);

// build_tree(closure(disks)): the minimal semistable model supporting every disk.
DiskTree minimal_supporting_model(const std::vector<ClosedDisk>& disks);

// Every disk of u is (canonically equal to) a vertex disk of the model.
bool supports(const DiskTree& model, const std::vector<ClosedDisk>& u);

// Dual graph of the corresponding semistable model: one genus-0 vertex per disk,
// one edge per disk-to-disk tree edge, one leg on the child of v0 (the unique
// end of the open disk). Always tree-like.
Skeleton tree_to_skeleton(const DiskTree& t);

// DOT export: square boundary node, disk vertices labeled "D(c, v)", edges
// labeled with their thickness.
std::string tree_to_dot(const DiskTree& t);

}  // namespace nacurve

#endif
