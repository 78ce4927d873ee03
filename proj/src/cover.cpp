#include "nacurve/cover.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace nacurve {

void CoverSpec::validate_shape() const {
    if (!group) throw std::invalid_argument("cover: missing group");
    if (base.prime != prime) throw std::invalid_argument("cover: base tree prime differs");
    if (vertex_data.size() != base.vertices.size())
        throw std::invalid_argument("cover: expected vertex data for each of the " +
                                    std::to_string(base.vertices.size()) + " vertices");
    if (edge_data.size() != base.edges.size())
        throw std::invalid_argument("cover: expected end data for each of the " +
                                    std::to_string(base.edges.size()) + " edges");
    auto check_site = [&](const SiteGroups& s, const char* where) {
        if (s.decomposition.parent() != group || s.inertia.parent() != group)
            throw std::invalid_argument(std::string("cover: ") + where +
                                        " subgroup attached to a different group");
    };
    for (const auto& v : vertex_data) check_site(v.groups, "vertex");
    for (const auto& e : edge_data) {
        check_site(e.outer, "edge end");
        check_site(e.inner, "edge end");
    }
    for (const auto& [name, chi] : characters) {
        if (name.empty()) throw std::invalid_argument("cover: character with empty name");
        if (chi.group() != group)
            throw std::invalid_argument("cover: character '" + name + "' on a different group");
    }
    if (h1_character && h1_character->group() != group)
        throw std::invalid_argument("cover: h1 character on a different group");
    for (const auto& a : assertions) {
        if (a.claim != "resolved")
            throw std::invalid_argument("cover: unknown assertion claim '" + a.claim + "'");
        if (a.vertex_set.empty())
            throw std::invalid_argument("cover: assertion with empty vertex set");
        for (int v : a.vertex_set)
            if (v < 0 || v >= base.vertex_count())
                throw std::invalid_argument("cover: assertion vertex index out of range");
    }
}

int CoverSpec::root_edge_index() const {
    for (size_t i = 0; i < base.edges.size(); ++i)
        if (base.edges[i].parent == -1) return static_cast<int>(i);
    throw std::logic_error("cover: base tree has no root edge");
}

const Character* CoverSpec::find_character(const std::string& name) const {
    for (const auto& [n, chi] : characters)
        if (n == name) return &chi;
    return nullptr;
}

static std::string vertex_site(const CoverSpec& c, int v) {
    return "vertex " + std::to_string(v) + " " + c.base.vertices[v].str();
}

static std::string edge_site(const CoverSpec& c, int e) {
    const auto& ed = c.base.edges[e];
    std::string parent = ed.parent == -1 ? std::string("v0") : c.base.vertices[ed.parent].str();
    return "edge " + std::to_string(e) + " (" + parent + " -> " + c.base.vertices[ed.child].str() + ")";
}

std::vector<Violation> validate_cover(const CoverSpec& c) {
    c.validate_shape();
    std::vector<Violation> out;
    auto check_inertia = [&](const SiteGroups& s, const std::string& site) {
        if (!is_p_group(s.inertia, c.prime))
            out.push_back({site, "inertia is not a p-group"});
        if (!is_normal_in(s.inertia, s.decomposition))
            out.push_back({site, "inertia is not a normal subgroup of the decomposition group"});
    };
    for (int v = 0; v < c.base.vertex_count(); ++v)
        check_inertia(c.vertex_data[v].groups, vertex_site(c, v));
    for (size_t e = 0; e < c.edge_data.size(); ++e) {
        check_inertia(c.edge_data[e].outer, edge_site(c, static_cast<int>(e)) + " outer end");
        check_inertia(c.edge_data[e].inner, edge_site(c, static_cast<int>(e)) + " inner end");
    }

    for (size_t e = 0; e < c.base.edges.size(); ++e) {
        const auto& ed = c.base.edges[e];
        const auto& data = c.edge_data[e];
        std::string site = edge_site(c, static_cast<int>(e));
        const SiteGroups& child = c.vertex_data[ed.child].groups;
        if (!are_conjugate(data.inner.decomposition, child.decomposition))
            out.push_back({site, "G(xi_2) is not conjugate to G(D_v2)"});
        const Subgroup& outer_inertia =
            ed.parent == -1 ? data.outer.inertia : c.vertex_data[ed.parent].groups.inertia;
        if (ed.parent != -1 && !are_conjugate(data.outer.inertia, outer_inertia))
            out.push_back({site, "I(xi_1) is not conjugate to I(D_v1)"});
        if (!is_conjugate_into(child.decomposition, outer_inertia))
            out.push_back({site, "G(D_v2) is not conjugate into I(D_v1)"});
    }

    if (c.group->is_p_group(c.prime)) {
        const auto& root = c.edge_data[c.root_edge_index()].outer;
        std::string site = "root end (boundary of the open disk)";
        if (!root.decomposition.is_whole_group())
            out.push_back({site, "G(xi) != G for a p-group cover (Galois cover of the disk"
                                 " is totally inert at the boundary)"});
        if (!root.inertia.is_whole_group())
            out.push_back({site, "I(xi) != G for a p-group cover"});
    }
    return out;
}

static void require_clean_p_group(const CoverSpec& c, const char* op) {
    if (!c.group->is_p_group(c.prime))
        throw std::invalid_argument(std::string(op) + ": G is not a p-group for p = " +
                                    c.prime.get_str());
    auto violations = validate_cover(c);
    if (!violations.empty())
        throw std::invalid_argument(std::string(op) + ": cover fails validation (" +
                                    violations.front().site + ": " + violations.front().relation + ")");
}

static bool edge_is_annulus_unchecked(const CoverSpec& c, int edge_index) {
    const auto& ed = c.base.edges[edge_index];
    const Subgroup& child_dec = c.vertex_data[ed.child].groups.decomposition;
    const Subgroup& parent_inertia = ed.parent == -1
                                         ? c.edge_data[edge_index].outer.inertia
                                         : c.vertex_data[ed.parent].groups.inertia;
    return are_conjugate(child_dec, parent_inertia);
}

bool edge_is_annulus(const CoverSpec& c, int edge_index) {
    require_clean_p_group(c, "edge_is_annulus");
    if (edge_index < 0 || edge_index >= static_cast<int>(c.base.edges.size()))
        throw std::invalid_argument("edge_is_annulus: edge index out of range");
    return edge_is_annulus_unchecked(c, edge_index);
}

SemistableVerdict check_semistable(const CoverSpec& c) {
    require_clean_p_group(c, "check_semistable");
    SemistableVerdict v;
    for (int e = 0; e < static_cast<int>(c.base.edges.size()); ++e)
        if (!edge_is_annulus_unchecked(c, e)) v.failing_edges.push_back(e);
    v.semistable = v.failing_edges.empty();
    return v;
}

const char* residual_via_name(ResidualVia v) {
    switch (v) {
        case ResidualVia::GoodReduction: return "good-reduction";
        case ResidualVia::InertiaTrivial: return "inertia-trivial";
        case ResidualVia::Unknown: return "unknown";
    }
    return "?";
}

const char* resolved_state_name(ResolvedState s) {
    switch (s) {
        case ResolvedState::Resolved: return "resolved";
        case ResolvedState::ResidualOnly: return "residual-only";
        case ResolvedState::Unknown: return "unknown";
    }
    return "?";
}

ResidualVia residual_status(const CoverSpec& c, const std::vector<int>& vertex_set,
                            const Character& tau) {
    for (int v : vertex_set)
        if (v < 0 || v >= c.base.vertex_count())
            throw std::invalid_argument("residual_status: vertex index out of range");
    bool all_good = true;
    for (int v : vertex_set) all_good = all_good && c.vertex_data[v].good_reduction_in_x;
    if (all_good) return ResidualVia::GoodReduction;
    bool all_trivial = true;
    for (int v : vertex_set)
        all_trivial = all_trivial && trivial_on(tau, c.vertex_data[v].groups.inertia);
    if (all_trivial) return ResidualVia::InertiaTrivial;
    return ResidualVia::Unknown;  // the conditions are sufficient, not necessary
}

static std::vector<int> normalized_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

ResolvedOutcome resolved_status(const CoverSpec& c, const std::vector<int>& vertex_set,
                                const std::string& tau_name) {
    const Character* tau = c.find_character(tau_name);
    if (!tau) throw std::invalid_argument("resolved_status: unknown character '" + tau_name + "'");
    ResolvedOutcome out;
    out.via = residual_status(c, vertex_set, *tau);
    if (out.via == ResidualVia::Unknown) return out;  // resolved requires residual
    std::vector<int> key = normalized_set(vertex_set);
    for (size_t i = 0; i < c.assertions.size(); ++i) {
        const auto& a = c.assertions[i];
        if (a.tau == tau_name && normalized_set(a.vertex_set) == key) {
            out.state = ResolvedState::Resolved;
            out.assertion_index = static_cast<int>(i);
            return out;
        }
    }
    out.state = ResolvedState::ResidualOnly;
    return out;
}

AlmostSemistableVerdict almost_semistable_verdict(const CoverSpec& c, int max_subset) {
    c.validate_shape();
    if (!c.h1_character)
        throw std::runtime_error("almost_semistable_verdict: h1_character is required");
    if (c.characters.empty())
        throw std::runtime_error("almost_semistable_verdict: a list of irreducible characters is required");
    for (const auto& [name, chi] : c.characters)
        if (!is_irreducible(chi))
            throw std::runtime_error("almost_semistable_verdict: supplied character '" + name +
                                     "' is not irreducible");

    AlmostSemistableVerdict verdict;
    int n = c.base.vertex_count();
    for (const auto& [name, tau] : c.characters) {
        long dim = isotypic_dim(tau, *c.h1_character);
        if (dim == 0) continue;  // tau does not occur in H^1
        TauReport report;
        report.tau = name;
        report.isotypic_dim = dim;

        std::vector<std::vector<int>> candidates;
        for (const auto& a : c.assertions)
            if (a.tau == name) {
                auto key = normalized_set(a.vertex_set);
                if (std::find(candidates.begin(), candidates.end(), key) == candidates.end())
                    candidates.push_back(std::move(key));
            }
        if (n <= max_subset && n <= 20) {
            std::vector<unsigned> masks;
            for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
            std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
                return std::popcount(a) < std::popcount(b);
            });
            for (unsigned m : masks) {
                std::vector<int> set;
                for (int v = 0; v < n; ++v)
                    if (m & (1u << v)) set.push_back(v);
                if (std::find(candidates.begin(), candidates.end(), set) == candidates.end())
                    candidates.push_back(std::move(set));
            }
        }

        for (const auto& set : candidates) {
            ResolvedOutcome outcome = resolved_status(c, set, name);
            if (outcome.state == ResolvedState::Resolved) {
                report.state = ResolvedState::Resolved;
                report.via = outcome.via;
                report.vertex_set = set;
                report.assertion_index = outcome.assertion_index;
                break;
            }
            if (outcome.state == ResolvedState::ResidualOnly &&
                report.state == ResolvedState::Unknown) {
                report.state = ResolvedState::ResidualOnly;  // best seen so far, keep searching
                report.via = outcome.via;
                report.vertex_set = set;
            }
        }
        if (report.state != ResolvedState::Resolved) verdict.blocking.push_back(name);
        if (report.assertion_index >= 0) {
            const auto& a = c.assertions[report.assertion_index];
            std::ostringstream os;
            os << "assertion[" << report.assertion_index << "]: F_" << a.tau << " resolved over {";
            for (size_t i = 0; i < a.vertex_set.size(); ++i)
                os << (i ? ", " : "") << c.base.vertices[a.vertex_set[i]].str();
            os << "}";
            if (!a.note.empty()) os << " (" << a.note << ")";
            verdict.conditional_on.push_back(os.str());
        }
        verdict.per_tau.push_back(std::move(report));
    }
    verdict.established = verdict.blocking.empty();
    return verdict;
}

FiberCounts fiber_counts(const CoverSpec& c) {
    auto violations = validate_cover(c);
    if (!violations.empty())
        throw std::invalid_argument("fiber_counts: cover fails validation (" +
                                    violations.front().site + ": " + violations.front().relation + ")");
    FiberCounts out;
    for (const auto& v : c.vertex_data)
        out.vertex_components.push_back(v.groups.decomposition.index_in_parent());
    for (const auto& e : c.edge_data)
        out.edge_ends.emplace_back(e.outer.decomposition.index_in_parent(),
                                   e.inner.decomposition.index_in_parent());
    return out;
}

CorollaryReport pgroup_corollary_check(const CoverSpec& c, const Skeleton& x_skeleton) {
    c.validate_shape();
    x_skeleton.validate();
    if (!c.group->is_p_group(c.prime))
        throw std::runtime_error("pgroup_corollary_check: G is not a p-group");
    CorollaryReport report;
    if (!is_connected(x_skeleton))
        report.violations.push_back("the supplied X skeleton is not connected");
    int root_ends = c.edge_data[c.root_edge_index()].outer.decomposition.index_in_parent();
    if (root_ends != 1)
        report.violations.push_back("[G : G(xi_root)] = " + std::to_string(root_ends) +
                                    ", but a connected p-group cover of the disk has a unique end");
    if (x_skeleton.leg_count() != 1)
        report.violations.push_back("X skeleton has " + std::to_string(x_skeleton.leg_count()) +
                                    " legs, but a connected p-group cover of the disk has a unique end");
    try {
        report.h1 = dim_h1(x_skeleton);
        report.h1c = dim_h1c(x_skeleton);
        report.csp = dim_h1_csp(x_skeleton);
    } catch (const std::domain_error& e) {
        report.violations.push_back(std::string("dimension formulas inapplicable: ") + e.what());
    }
    report.ok = report.violations.empty() && report.h1 == report.h1c && report.h1 == report.csp;
    return report;
}

}  // namespace nacurve
