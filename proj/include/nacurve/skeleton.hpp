#ifndef NACURVE_SKELETON_HPP
#define NACURVE_SKELETON_HPP

#include <optional>
#include <string>
#include <vector>

#include "nacurve/rational.hpp"

namespace nacurve {

struct SkeletonEdge {
    int u = 0;
    int v = 0;
    std::optional<Rational> thickness;  // annulus modulus, when known
};

// Dual-graph model of a semistable curve or an open analytic curve: vertices
// carry genera, edges are nodes/annuli (loops and multi-edges allowed), legs
// mark ends or boundary points.
struct Skeleton {
    std::vector<int> genus;          // per vertex, >= 0
    std::vector<SkeletonEdge> edges;
    std::vector<int> legs;           // attachment vertex per leg

    int vertex_count() const { return static_cast<int>(genus.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int leg_count() const { return static_cast<int>(legs.size()); }

    // Index ranges and genus signs. Throws
    // std::invalid_argument on violation.
    void validate() const;
};

// Component id per vertex (0-based, in order of first appearance).
std::vector<int> components(const Skeleton& s);
int component_count(const Skeleton& s);
bool is_connected(const Skeleton& s);

// First Betti number of the underlying graph: |E| - |V| + #components.
int betti1(const Skeleton& s);

// Total (arithmetic) genus of a connected skeleton: sum of vertex genera plus b1.
// Throws std::invalid_argument when disconnected; see the per-component variant.
int total_genus(const Skeleton& s);
std::vector<int> total_genus_per_component(const Skeleton& s);

// Per-leg / per-component counts used by the dimension formulas.
std::vector<int> legs_per_component(const Skeleton& s);

// Dimension formulas for the cohomology of the open analytic curve the skeleton
// models. All of them require every connected component to carry at least one
// leg and throw std::domain_error("not an open analytic curve skeleton") otherwise.
int dim_h1c(const Skeleton& s);              // sum of 2g(C) + #legs - 1 per component
int dim_boundary_module(const Skeleton& s);  // #legs - #components
int dim_h1(const Skeleton& s);               // csp + boundary module; equals dim_h1c
int dim_h1_csp(const Skeleton& s);           // sum of 2g(C) per component

// H^1 of the proper nodal curve with this dual graph (legs ignored): 2*sum(g) + b1.
int dim_h1_proper(const Skeleton& s);

// b1 == 0, i.e. the component graph is a forest.
bool is_tree_like(const Skeleton& s);

// --- contraction ------------------------------------------------------------

struct ContractionFiber {
    std::vector<int> fine_vertices;  // the collapsed connected subgraph W_z
    int genus_sum = 0;
    int betti1 = 0;
    int coarse_vertex = -1;  // collapsed vertex, or the attachment vertex when absorbed
    bool absorbed = false;   // hanging fiber merged into its attachment vertex
};

// A map Z' -> Z of skeletons with connected fibers, modeling an admissible blowup.
struct Contraction {
    Skeleton fine;
    Skeleton coarse;
    std::vector<int> vertex_map;  // fine vertex -> coarse vertex
    std::vector<ContractionFiber> fibers;
};

// Collapse each piece (a disjoint, connected set of fine vertices) to a point of
// the coarse skeleton. Collapsed vertices get genus 0 (the fiber's own genus data
// stays on the Contraction record); a fiber attached to the rest by exactly one
// edge whose far endpoint survives is absorbed into that vertex. Throws
// std::invalid_argument on overlapping, empty, out-of-range or disconnected pieces.
Contraction contract(const Skeleton& fine, const std::vector<std::vector<int>>& pieces);

// Every fiber W_z has arithmetic genus zero.
bool is_almost_semistable(const Contraction& c);

// dim H^1(Z) == dim H^1(X)^csp at the dimension level:
// 2*(coarse-resident genus) + b1(coarse) == 2*total genus of the fine skeleton.
// Requires every fine component to carry a leg.
bool cohomological_test(const Contraction& c);

// --- stabilization -----------------------------------------------------------

enum class ComponentKind { Stable, Disk, Annulus };

const char* component_kind_name(ComponentKind k);

struct StableComponent {
    ComponentKind kind = ComponentKind::Stable;
    Skeleton skeleton;  // canonical one-vertex form for Disk/Annulus outcomes
};

struct StabilizeResult {
    std::vector<StableComponent> components;
    Skeleton combined;  // all component skeletons reassembled
};

// Repeatedly removes genus-0 vertices of valence <= 2 (valence = incident edge
// slots + legs, loops counting twice): valence-1 vertices are deleted with their
// edge, valence-2 vertices with two distinct edges are smoothed (thicknesses
// added), and a vertex with one edge and one leg is removed with its leg moving
// to the neighbor. Loop-only vertices are never contracted. Components that
// shrink to a single 1-leg (resp. 2-leg) genus-0 vertex are classified Disk
// (resp. Annulus). Requires every component to carry at least one leg.
StabilizeResult stabilize(const Skeleton& s);

// DOT export: vertices labeled "g=..", legs as arrowless stubs.
std::string skeleton_to_dot(const Skeleton& s);

}  // namespace nacurve

#endif
