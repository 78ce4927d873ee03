#ifndef NACURVE_COVER_HPP
#define NACURVE_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "nacurve/character.hpp"
#include "nacurve/disk_tree.hpp"
#include "nacurve/perm_group.hpp"
#include "nacurve/skeleton.hpp"

namespace nacurve {

// Decomposition/inertia pair attached to a vertex disk or an edge end. All group
// data is meaningful up to conjugacy only; no validator requires on-the-nose
// equality.
struct SiteGroups {
    Subgroup decomposition;
    Subgroup inertia;
};

struct VertexCoverData {
    SiteGroups groups;
    bool good_reduction_in_x = false;
};

struct EdgeCoverData {
    SiteGroups outer;  // end xi_1, toward the parent
    SiteGroups inner;  // end xi_2, toward the child
};

// User-supplied evidence that F_tau is resolved over the union of the named
// vertex disks; surjectivity has no general decision procedure, so it is only
// ever accepted through these records and every dependent verdict reports them.
struct ResolvedAssertion {
    std::string tau;
    std::vector<int> vertex_set;  // indices into the base tree's vertices
    std::string claim;            // "resolved"
    std::string note;             // provenance
};

// A finite Galois cover of the open disk described over a tree of disks: the
// group, decomposition/inertia data per vertex and per edge end, optional
// character of H^1 of the total space, and resolution assertions.
struct CoverSpec {
    Int prime;
    GroupPtr group;
    DiskTree base;
    std::vector<VertexCoverData> vertex_data;  // parallel to base.vertices
    std::vector<EdgeCoverData> edge_data;      // parallel to base.edges
    std::vector<std::pair<std::string, Character>> characters;  // supplied irreducibles
    std::optional<Character> h1_character;
    std::vector<ResolvedAssertion> assertions;

    // Sizes, group identity and index ranges; throws
    // std::invalid_argument. The mathematical relations live in validate_cover.
    void validate_shape() const;
    int root_edge_index() const;
    const Character* find_character(const std::string& name) const;
};

struct Violation {
    std::string site;
    std::string relation;
};

// Empty iff every inertia subgroup is a p-group and normal in its decomposition
// group, every edge satisfies G(xi_2) ~ G(D_v2), I(xi_1) ~ I(D_v1) and
// G(D_v2) conjugate-into I(D_v1) (end-level data standing in at the root), and,
// for a p-group G, the root end carries G(xi) = I(xi) = G.
std::vector<Violation> validate_cover(const CoverSpec& c);

// G(D_v2) conjugate to I(D_v1) (to I(xi_1) on the root edge) -- the formal fiber
// over the edge's double point is an open annulus. Requires a clean validate and
// a p-group G; throws std::invalid_argument otherwise.
bool edge_is_annulus(const CoverSpec& c, int edge_index);

struct SemistableVerdict {
    bool semistable = false;
    std::vector<int> failing_edges;
};

// Per-edge annulus test over every edge including the root edge. Standing
// hypothesis: the almost-semistable verdict is expected to hold already; the CLI
// enforces that ordering and reports accordingly.
SemistableVerdict check_semistable(const CoverSpec& c);

enum class ResidualVia { GoodReduction, InertiaTrivial, Unknown };

const char* residual_via_name(ResidualVia v);

// Sufficient conditions only: Unknown never means "not residual".
ResidualVia residual_status(const CoverSpec& c, const std::vector<int>& vertex_set,
                            const Character& tau);

enum class ResolvedState { Resolved, ResidualOnly, Unknown };

const char* resolved_state_name(ResolvedState s);

struct ResolvedOutcome {
    ResolvedState state = ResolvedState::Unknown;
    ResidualVia via = ResidualVia::Unknown;
    int assertion_index = -1;  // the record that supplied surjectivity, if any
};

ResolvedOutcome resolved_status(const CoverSpec& c, const std::vector<int>& vertex_set,
                                const std::string& tau_name);

struct TauReport {
    std::string tau;
    long isotypic_dim = 0;
    ResolvedState state = ResolvedState::Unknown;
    ResidualVia via = ResidualVia::Unknown;
    std::vector<int> vertex_set;  // witness V' when resolved
    int assertion_index = -1;
};

struct AlmostSemistableVerdict {
    bool established = false;  // almost semistable and tree-like reduction
    std::vector<TauReport> per_tau;
    std::vector<std::string> conditional_on;  // every assertion consumed
    std::vector<std::string> blocking;        // taus without a resolved witness
};

// Criterion driver: every irreducible tau with isotypic_dim(tau, h1) > 0 must be
// resolved over some vertex set (assertion-listed candidates first, then all
// nonempty subsets when the tree has at most max_subset vertices). The criterion
// is one-directional: a non-established verdict is inconclusive, never negative.
// Throws std::runtime_error when h1_character or the character list is missing
// or a supplied character is not irreducible.
AlmostSemistableVerdict almost_semistable_verdict(const CoverSpec& c, int max_subset = 12);

struct FiberCounts {
    std::vector<int> vertex_components;            // [G : G(D_v)] per vertex
    std::vector<std::pair<int, int>> edge_ends;    // per edge: ends over (xi_1, xi_2)
};

FiberCounts fiber_counts(const CoverSpec& c);

struct CorollaryReport {
    bool ok = false;
    std::vector<std::string> violations;
    int h1 = -1, h1c = -1, csp = -1;
};

// For a connected p-group cover: the total space has a unique end, so the three
// H^1 dimensions of its skeleton coincide. Throws std::runtime_error when G is
// not a p-group.
CorollaryReport pgroup_corollary_check(const CoverSpec& c, const Skeleton& x_skeleton);

}  // namespace nacurve

#endif
