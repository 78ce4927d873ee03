#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nacurve/cover.hpp"
#include "nacurve/json_io.hpp"
#include "nacurve/random_instances.hpp"

namespace {

using nacurve::Json;

constexpr int kExitOk = 0;        // verdict affirmative / clean
constexpr int kExitNegative = 1;  // negative or inconclusive verdict
constexpr int kExitInput = 2;     // input / configuration error

void emit(const Json& j) { std::cout << nacurve::dump_canonical(j); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("input: cannot write '" + path + "'");
    out << content;
}

// The auxiliary prime ell: validated when supplied, auto-selected otherwise.
nacurve::Int resolve_ell(const std::optional<nacurve::Int>& requested, const nacurve::Int& p,
                         long group_order) {
    using nacurve::Int;
    if (requested) {
        const Int& ell = *requested;
        if (!nacurve::is_prime(ell)) throw std::runtime_error("input: ell is not prime");
        if (ell == p) throw std::runtime_error("input: ell must differ from p");
        if (group_order > 0 && mpz_divisible_p(Int(group_order).get_mpz_t(), ell.get_mpz_t()))
            throw std::runtime_error("input: ell divides the group order");
        return ell;
    }
    for (Int ell = 2;; mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t())) {
        if (ell != p &&
            (group_order <= 0 || !mpz_divisible_p(Int(group_order).get_mpz_t(), ell.get_mpz_t())))
            return ell;
    }
}

struct PrimeOverride {
    std::string value;  // empty = not given
    void check(const nacurve::Int& doc_prime) const {
        if (value.empty()) return;
        if (nacurve::Int(value) != doc_prime)
            throw std::runtime_error("input: --prime " + value + " does not match the document prime " +
                                     doc_prime.get_str());
    }
};

int cmd_tree(const std::string& input, const PrimeOverride& prime, bool no_closure,
             const std::string& dot_path) {
    auto doc = nacurve::parse_disks_document(nacurve::load_json(input));
    prime.check(doc.prime);
    nacurve::DiskTree tree =
        no_closure ? nacurve::build_tree(doc.disks) : nacurve::minimal_supporting_model(doc.disks);
    if (!dot_path.empty()) write_file(dot_path, nacurve::tree_to_dot(tree));
    emit(nacurve::tree_to_json(tree));
    return kExitOk;
}

int cmd_skeleton(const std::string& input, bool analyze, const std::string& dot_path) {
    nacurve::Skeleton s = nacurve::parse_skeleton_document(nacurve::load_json(input));
    if (analyze) {
        int h1c = nacurve::dim_h1c(s);
        int h1 = nacurve::dim_h1(s);
        int csp = nacurve::dim_h1_csp(s);
        int boundary = nacurve::dim_boundary_module(s);
        Json out{{"schema_version", nacurve::kSchemaVersion},
                 {"h1c", h1c},
                 {"h1", h1},
                 {"csp", csp},
                 {"B", boundary},
                 {"h1_proper", nacurve::dim_h1_proper(s)},
                 {"tree_like", nacurve::is_tree_like(s)},
                 {"components", nacurve::component_count(s)},
                 {"total_genus", nacurve::total_genus_per_component(s)}};
        if (!dot_path.empty()) write_file(dot_path, nacurve::skeleton_to_dot(s));
        emit(out);
        return kExitOk;
    }
    nacurve::StabilizeResult r = nacurve::stabilize(s);
    Json comps = Json::array();
    for (const auto& c : r.components)
        comps.push_back(Json{{"outcome", nacurve::component_kind_name(c.kind)},
                             {"skeleton", nacurve::skeleton_to_json(c.skeleton)}});
    if (!dot_path.empty()) write_file(dot_path, nacurve::skeleton_to_dot(r.combined));
    emit(Json{{"schema_version", nacurve::kSchemaVersion},
              {"components", comps},
              {"combined", nacurve::skeleton_to_json(r.combined)}});
    return kExitOk;
}

Json violations_to_json(const std::vector<nacurve::Violation>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(Json{{"site", v.site}, {"relation", v.relation}});
    return out;
}

int cmd_cover(const std::string& input, bool validate_only, const PrimeOverride& prime,
              const std::string& ell_flag, int max_subset) {
    nacurve::CoverDocument doc = nacurve::parse_cover_document(nacurve::load_json(input));
    prime.check(doc.spec.prime);
    std::optional<nacurve::Int> requested_ell = doc.ell;
    if (!ell_flag.empty()) requested_ell = nacurve::Int(ell_flag);
    nacurve::Int ell = resolve_ell(requested_ell, doc.spec.prime, doc.spec.group->size());

    auto violations = nacurve::validate_cover(doc.spec);
    Json out{{"schema_version", nacurve::kSchemaVersion},
             {"prime", nacurve::rational_to_json(nacurve::Rational(doc.spec.prime))},
             {"ell", nacurve::rational_to_json(nacurve::Rational(ell))},
             {"violations", violations_to_json(violations)}};

    if (validate_only) {
        if (violations.empty()) {
            auto counts = nacurve::fiber_counts(doc.spec);
            Json ends = Json::array();
            for (auto [outer, inner] : counts.edge_ends)
                ends.push_back(Json{{"outer", outer}, {"inner", inner}});
            out["fiber_counts"] =
                Json{{"vertex_components", counts.vertex_components}, {"edge_ends", ends}};
        }
        emit(out);
        return violations.empty() ? kExitOk : kExitNegative;
    }

    // check: the almost-semistable verdict first, then the per-edge test it licenses
    nacurve::AlmostSemistableVerdict almost =
        nacurve::almost_semistable_verdict(doc.spec, max_subset);
    out["almost_semistable"] = almost.established ? "established" : "inconclusive";
    Json per_tau = Json::array();
    for (const auto& t : almost.per_tau) {
        Json row{{"tau", t.tau},
                 {"isotypic_dim", t.isotypic_dim},
                 {"status", nacurve::resolved_state_name(t.state)}};
        if (t.state != nacurve::ResolvedState::Unknown) {
            row["via"] = nacurve::residual_via_name(t.via);
            row["vertex_set"] = t.vertex_set;
        }
        per_tau.push_back(std::move(row));
    }
    out["per_tau"] = per_tau;
    out["blocking"] = almost.blocking;
    out["conditional_on"] = almost.conditional_on;

    bool affirmative = violations.empty() && almost.established;
    if (doc.spec.group->is_p_group(doc.spec.prime) && violations.empty()) {
        nacurve::SemistableVerdict sv = nacurve::check_semistable(doc.spec);
        out["semistable"] = sv.semistable ? "semistable" : "not-by-this-test";
        Json failing = Json::array();
        for (int e : sv.failing_edges) {
            const auto& ed = doc.spec.base.edges[e];
            failing.push_back(Json{{"edge", e},
                                   {"parent", ed.parent},
                                   {"child", ed.child},
                                   {"child_disk", nacurve::disk_to_json(doc.spec.base.vertices[ed.child])}});
        }
        out["failing_edges"] = failing;
        if (!almost.established)
            out["semistable_note"] =
                "per-edge test reported under the unestablished almost-semistable hypothesis";
        affirmative = affirmative && sv.semistable;
    } else {
        out["semistable"] = "not-applicable";
    }

    if (doc.x_skeleton && doc.spec.group->is_p_group(doc.spec.prime)) {
        nacurve::CorollaryReport rep = nacurve::pgroup_corollary_check(doc.spec, *doc.x_skeleton);
        out["corollary"] = Json{{"ok", rep.ok},
                                {"violations", rep.violations},
                                {"h1", rep.h1},
                                {"h1c", rep.h1c},
                                {"csp", rep.csp}};
        affirmative = affirmative && rep.ok;
    }

    emit(out);
    return affirmative ? kExitOk : kExitNegative;
}

int cmd_fuzz(uint64_t seed, uint64_t count) {
    nacurve::VcpropFuzzSummary s = nacurve::run_vcprop_fuzz(seed, count);
    Json out{{"schema_version", nacurve::kSchemaVersion},
             {"seed", seed},
             {"count", s.count},
             {"discrepancies", s.discrepancies},
             {"almost_semistable_hits", s.almost_semistable_hits}};
    if (s.discrepancies > 0) {
        out["first_counterexample_index"] = s.first_counterexample_index;
        out["first_counterexample"] = s.first_counterexample;
    }
    emit(out);
    return s.discrepancies == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for trees of p-adic disks, skeletons of semistable "
                 "reductions, and Galois-cover semistability tests"};
    app.require_subcommand(1);

    std::string input, dot_path, ell_flag;
    PrimeOverride prime;
    bool no_closure = false;

    auto* tree = app.add_subcommand("tree", "build the containment tree of a disk collection");
    tree->add_option("--input,-i", input, "input JSON (default: stdin)");
    tree->add_option("--prime", prime.value, "session prime; must match the document")
        ->envname("NACURVE_PRIME");
    tree->add_flag("--no-closure", no_closure, "fail on non-closed input instead of closing it");
    tree->add_option("--dot", dot_path, "also write a DOT rendering to this path");

    bool analyze = false, stabilize_mode = false, validate_mode = false, check_mode = false;
    auto* skeleton = app.add_subcommand("skeleton", "dimension report or stabilization of a skeleton");
    skeleton->add_option("--input,-i", input, "input JSON (default: stdin)");
    skeleton->add_flag("--analyze", analyze, "emit the five dimension numbers and the tree-like flag");
    skeleton->add_flag("--stabilize", stabilize_mode, "emit Stable/Disk/Annulus outcomes per component");
    skeleton->add_option("--dot", dot_path, "also write a DOT rendering to this path");

    int max_subset = 12;
    auto* cover = app.add_subcommand("cover", "validate a cover spec or run the semistability criteria");
    cover->add_option("--input,-i", input, "input JSON (default: stdin)");
    cover->add_flag("--validate", validate_mode, "report validator violations and fiber counts");
    cover->add_flag("--check", check_mode, "run the almost-semistable and per-edge criteria");
    cover->add_option("--prime", prime.value, "session prime; must match the document")
        ->envname("NACURVE_PRIME");
    cover->add_option("--ell", ell_flag, "auxiliary prime (validated: prime, != p, coprime to |G|)")
        ->envname("NACURVE_ELL");
    cover->add_option("--max-subset", max_subset, "exhaustive vertex-set search bound (default 12)")
        ->envname("NACURVE_MAX_SUBSET");

    uint64_t seed = 0, count = 1000;
    auto* fuzz = app.add_subcommand("fuzz", "fuzz the contraction/cohomology equivalence");
    fuzz->add_option("--seed", seed, "RNG seed (all randomness flows from it)")
        ->envname("NACURVE_SEED");
    fuzz->add_option("--count", count, "number of instances")->envname("NACURVE_COUNT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (tree->parsed()) return cmd_tree(input, prime, no_closure, dot_path);
        if (skeleton->parsed()) {
            if (analyze == stabilize_mode) {
                std::cerr << "error: pass exactly one of --analyze / --stabilize\n";
                return kExitInput;
            }
            return cmd_skeleton(input, analyze, dot_path);
        }
        if (cover->parsed()) {
            if (validate_mode == check_mode) {
                std::cerr << "error: pass exactly one of --validate / --check\n";
                return kExitInput;
            }
            return cmd_cover(input, validate_mode, prime, ell_flag, max_subset);
        }
        if (fuzz->parsed()) return cmd_fuzz(seed, count);
        std::cerr << "error: no subcommand\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
