#include "nacurve/disk_tree.hpp"

#include <sstream>
#include <stdexcept>

namespace nacurve {

int DiskTree::root_child() const {
    for (const auto& e : edges)
        if (e.parent == -1) return e.child;
    throw std::logic_error("disk tree: no root edge");
}

std::vector<int> DiskTree::children_of(int v) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.parent == v) out.push_back(e.child);
    return out;
}

int DiskTree::find_vertex(const ClosedDisk& d) const {
    ClosedDisk c = canonicalize(d);
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i].radius_val() == c.radius_val() && vertices[i].center() == c.center())
            return i;
    return -1;
}

DiskTree build_tree(const std::vector<ClosedDisk>& disks) {
    if (disks.empty()) throw std::invalid_argument("build_tree: empty collection");
    std::vector<ClosedDisk> set = canonical_set(disks);

    // closedness: pairwise joins must already be present
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j) {
            ClosedDisk jn = join(set[i], set[j]);
            bool present = false;
            for (const auto& e : set)
                if (e.radius_val() == jn.radius_val() && e.center() == jn.center()) {
                    present = true;
                    break;
                }
            if (!present)
                throw std::invalid_argument("build_tree: collection is not closed; join of " +
                                            set[i].str() + " and " + set[j].str() + " = " +
                                            jn.str() + " is missing");
        }

    DiskTree t;
    t.prime = set.front().prime();
    t.vertices = std::move(set);

    int root_children = 0;
    for (int v = 0; v < t.vertex_count(); ++v) {
        // strict containers of v; for a closed collection they are totally ordered
        int parent = -1;
        for (int w = 0; w < t.vertex_count(); ++w) {
            if (w == v) continue;
            if (!contains(t.vertices[w], t.vertices[v])) continue;
            if (parent == -1) {
                parent = w;
                continue;
            }
            if (contains(t.vertices[parent], t.vertices[w])) {
                parent = w;  // w is smaller, hence closer
            } else if (!contains(t.vertices[w], t.vertices[parent])) {
                throw std::logic_error("build_tree: containers of " + t.vertices[v].str() +
                                       " are not totally ordered (canonicalization bug)");
            }
        }
        Rational parent_radius = parent == -1 ? Rational(0) : t.vertices[parent].radius_val();
        t.edges.push_back({parent, v, t.vertices[v].radius_val() - parent_radius});
        if (parent == -1) ++root_children;
    }
    if (root_children != 1)
        throw std::logic_error("build_tree: closed collection must have a unique maximal disk, found " +
                               std::to_string(root_children));
    return t;
}

DiskTree minimal_supporting_model(const std::vector<ClosedDisk>& disks) {
    return build_tree(closure(disks));
}

bool supports(const DiskTree& model, const std::vector<ClosedDisk>& u) {
    for (const auto& d : u) {
        if (d.prime() != model.prime)
            throw std::invalid_argument("supports: disk prime differs from model prime");
        if (model.find_vertex(d) == -1) return false;
    }
    return true;
}

Skeleton tree_to_skeleton(const DiskTree& t) {
    Skeleton s;
    s.genus.assign(t.vertex_count(), 0);
    for (const auto& e : t.edges) {
        if (e.parent == -1)
            s.legs.push_back(e.child);  // the unique end of the open disk
        else
            s.edges.push_back({e.parent, e.child, e.thickness});
    }
    return s;
}

std::string tree_to_dot(const DiskTree& t) {
    std::ostringstream os;
    os << "digraph disk_tree {\n";
    os << "  v0 [shape=square, label=\"∂\"];\n";
    for (int v = 0; v < t.vertex_count(); ++v)
        os << "  d" << v << " [label=\"" << t.vertices[v].str() << "\"];\n";
    for (const auto& e : t.edges) {
        if (e.parent == -1)
            os << "  v0 -> d" << e.child;
        else
            os << "  d" << e.parent << " -> d" << e.child;
        os << " [label=\"" << e.thickness.str() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace nacurve
