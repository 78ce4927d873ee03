// Acceptance suite: exercises each release criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nacurve/cover.hpp"
#include "nacurve/json_io.hpp"
#include "nacurve/random_instances.hpp"
#include "test_util.hpp"

using namespace nacurve;
using namespace nacurve::testutil;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

// 1. 500 random skeletons: per-component dimension formula and Poincare duality, exact.
bool dimension_formulas() {
    SplitMix64 rng(1001);
    for (int i = 0; i < 500; ++i) {
        Skeleton s = random_open_skeleton(rng, 10);
        auto genus = total_genus_per_component(s);
        auto legs = legs_per_component(s);
        int expected = 0;
        for (size_t c = 0; c < genus.size(); ++c) expected += 2 * genus[c] + legs[c] - 1;
        if (dim_h1c(s) != expected) return false;
        if (dim_h1(s) != dim_h1c(s)) return false;
        if (dim_h1_csp(s) + dim_boundary_module(s) != dim_h1(s)) return false;
    }
    Skeleton worked;
    worked.genus = {2};
    worked.legs = {0, 0, 0};
    return dim_h1c(worked) == 6 && dim_h1(worked) == 6 && dim_h1_csp(worked) == 4 &&
           dim_boundary_module(worked) == 2;
}

// 2. 10,000 seeded contraction instances, zero discrepancies allowed.
bool vcprop_equivalence(std::string& detail) {
    VcpropFuzzSummary s = run_vcprop_fuzz(20250808, 10000);
    std::ostringstream os;
    os << s.count << " instances, " << s.discrepancies << " discrepancies, "
       << s.almost_semistable_hits << " almost-semistable hits";
    detail = os.str();
    if (s.discrepancies != 0) {
        detail += "; first at index " + std::to_string(s.first_counterexample_index) + ": " +
                  s.first_counterexample;
        return false;
    }
    return s.almost_semistable_hits > 0;  // both branches of the equivalence must occur
}

// 3. Pairwise-saturation closure equals the all-subsets oracle.
bool closure_oracle(std::string& detail) {
    SplitMix64 rng(3003);
    const Int primes[] = {2, 3, 5};
    int instances = 0;
    for (int i = 0; i < 1200; ++i) {
        const Int& p = primes[i % 3];
        auto disks = random_disk_collection(rng, p, 6);
        ++instances;
        if (!same_disk_set(closure(disks), brute_force_closure(disks))) {
            detail = "mismatch at instance " + std::to_string(i);
            return false;
        }
    }
    detail = std::to_string(instances) + " instances over p in {2,3,5}";
    return true;
}

// 4. Tree construction: invariants, the immediate-containment oracle, telescoping.
bool tree_oracle(std::string& detail) {
    SplitMix64 rng(4004);
    const Int primes[] = {2, 3, 5};
    int instances = 0;
    for (int i = 0; i < 1200; ++i) {
        const Int& p = primes[i % 3];
        auto closed = closure(random_disk_collection(rng, p, 6));
        DiskTree t = build_tree(closed);
        ++instances;
        if (t.edges.size() != t.vertices.size()) return false;
        int root_children = 0;
        for (const auto& e : t.edges) {
            if (!(e.thickness > Rational(0))) return false;
            if (e.parent == -1)
                ++root_children;
            else if (!contains(t.vertices[e.parent], t.vertices[e.child]))
                return false;
            if (e.parent != oracle_parent(t.vertices, e.child)) {
                detail = "containment oracle mismatch at instance " + std::to_string(i);
                return false;
            }
        }
        if (root_children != 1) return false;
        for (int v = 0; v < t.vertex_count(); ++v) {
            Rational sum(0);
            for (int cur = v; cur != -1; cur = t.edges[cur].parent) sum += t.edges[cur].thickness;
            if (sum != t.vertices[v].radius_val()) return false;
        }
    }
    detail = std::to_string(instances) + " instances";
    return true;
}

// 5. Stabilization: invariants, idempotence, and the two degenerate families.
bool stabilization() {
    SplitMix64 rng(5005);
    for (int i = 0; i < 400; ++i) {
        Skeleton s = random_open_skeleton(rng, 8);
        StabilizeResult r = stabilize(s);
        if (total_genus_per_component(s) != total_genus_per_component(r.combined)) return false;
        if (legs_per_component(s) != legs_per_component(r.combined)) return false;
        if (betti1(s) != betti1(r.combined)) return false;
        StabilizeResult again = stabilize(r.combined);
        if (again.components.size() != r.components.size()) return false;
        for (size_t c = 0; c < r.components.size(); ++c) {
            if (again.components[c].kind != r.components[c].kind) return false;
            if (again.components[c].skeleton.genus != r.components[c].skeleton.genus) return false;
            if (again.components[c].skeleton.edge_count() !=
                r.components[c].skeleton.edge_count())
                return false;
        }
    }
    for (int len = 1; len <= 20; ++len) {
        Skeleton chain;
        chain.genus.assign(len, 0);
        for (int v = 0; v + 1 < len; ++v) chain.edges.push_back({v, v + 1, std::nullopt});
        Skeleton disk = chain;
        disk.legs = {len - 1};
        if (stabilize(disk).components[0].kind != ComponentKind::Disk) return false;
        Skeleton annulus = chain;
        annulus.legs = {0, len - 1};
        if (stabilize(annulus).components[0].kind != ComponentKind::Annulus) return false;
    }
    return true;
}

// 6. Group layer: exact orthogonality, conjugacy an equivalence relation,
//    inertia subgroups of the p-group cover fixtures.
bool group_layer(std::string& detail) {
    const char* files[] = {"z2.json", "z4.json", "v4.json", "s3.json", "d4.json", "q8.json"};
    for (const char* file : files) {
        GroupFixture f = load_group_fixture(file);
        if (f.group->size() != f.expected_order || f.group->class_count() != f.expected_class_count) {
            detail = std::string(file) + ": wrong order or class count";
            return false;
        }
        for (size_t i = 0; i < f.characters.size(); ++i)
            for (size_t j = 0; j < f.characters.size(); ++j)
                if (inner_product(f.characters[i].second, f.characters[j].second) !=
                    Rational(i == j ? 1 : 0)) {
                    detail = std::string(file) + ": orthogonality failure";
                    return false;
                }
        auto subs = all_subgroups(f.group);
        for (const auto& a : subs)
            if (!are_conjugate(a, a)) return false;
        for (const auto& a : subs)
            for (const auto& b : subs)
                if (are_conjugate(a, b) != are_conjugate(b, a)) return false;
        for (const auto& a : subs)
            for (const auto& b : subs)
                for (const auto& c : subs)
                    if (are_conjugate(a, b) && are_conjugate(b, c) && !are_conjugate(a, c))
                        return false;
    }
    for (const char* file :
         {"inert_z4.json", "d4_resolved.json", "d4_failing_edge.json", "trivial_cover.json"}) {
        CoverSpec c = load_cover_fixture(file);
        if (!c.group->is_p_group(c.prime)) continue;
        for (const auto& v : c.vertex_data)
            if (!is_p_group(v.groups.inertia, c.prime)) return false;
        for (const auto& e : c.edge_data)
            if (!is_p_group(e.outer.inertia, c.prime) || !is_p_group(e.inner.inertia, c.prime))
                return false;
    }
    return true;
}

// 7. Cover criteria: conjugation invariance, the two planted fixtures, and the
//    p-group corollary check.
bool cover_criteria(std::string& detail) {
    {
        CoverSpec inert = load_cover_fixture("inert_z4.json");
        if (!validate_cover(inert).empty() || !check_semistable(inert).semistable) {
            detail = "inert z4 fixture is not semistable";
            return false;
        }
    }
    {
        CoverSpec failing = load_cover_fixture("d4_failing_edge.json");
        SemistableVerdict v = check_semistable(failing);
        if (v.semistable || v.failing_edges.size() != 1 ||
            failing.base.edges[v.failing_edges[0]].parent != 0) {
            detail = "failing-edge fixture did not list exactly the planted edge";
            return false;
        }
    }
    for (const char* file : {"inert_z4.json", "d4_resolved.json", "d4_failing_edge.json"}) {
        CoverSpec base = load_cover_fixture(file);
        auto violations = validate_cover(base).size();
        SemistableVerdict sv = check_semistable(base);
        AlmostSemistableVerdict almost = almost_semistable_verdict(base);
        FiberCounts fc = fiber_counts(base);
        SplitMix64 rng(7007);
        for (int i = 0; i < 100; ++i) {
            CoverSpec twisted = conjugate_cover(base, rng, i % 2 == 0);
            if (validate_cover(twisted).size() != violations ||
                check_semistable(twisted).semistable != sv.semistable ||
                check_semistable(twisted).failing_edges != sv.failing_edges ||
                almost_semistable_verdict(twisted).established != almost.established ||
                fiber_counts(twisted).vertex_components != fc.vertex_components) {
                detail = std::string(file) + ": verdict changed under conjugation " +
                         std::to_string(i);
                return false;
            }
        }
    }
    for (const char* file : {"inert_z4.json", "d4_resolved.json", "trivial_cover.json"}) {
        CoverDocument doc = parse_cover_document(load_fixture("covers/" + std::string(file)));
        if (!doc.x_skeleton || doc.x_skeleton->leg_count() != 1) {
            detail = std::string(file) + ": expected a 1-leg x_skeleton fixture";
            return false;
        }
        if (!pgroup_corollary_check(doc.spec, *doc.x_skeleton).ok) {
            detail = std::string(file) + ": corollary check failed on a 1-leg fixture";
            return false;
        }
    }
    {
        CoverDocument doc = parse_cover_document(load_fixture("covers/d4_resolved_2leg.json"));
        CorollaryReport rep = pgroup_corollary_check(doc.spec, *doc.x_skeleton);
        bool mentions = false;
        for (const auto& v : rep.violations)
            if (v.find("unique end") != std::string::npos) mentions = true;
        if (rep.ok || !mentions) {
            detail = "planted 2-leg fixture did not raise the unique-end violation";
            return false;
        }
    }
    return true;
}

// 8. CLI end-to-end script over the fixture corpus.
bool cli_end_to_end(const std::string& cli, const std::string& tests_dir, std::string& detail) {
    if (cli.empty() || tests_dir.empty()) {
        detail = "usage: acceptance <cli-binary> <tests-dir>";
        return false;
    }
    std::string cmd = "bash '" + tests_dir + "/cli_e2e.sh' '" + cli + "' '" + tests_dir +
                      "/fixtures' > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    detail = "script exit " + std::to_string(rc);
    return rc == 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::string tests_dir = argc > 2 ? argv[2] : "";
    std::string detail;

    report(1, "dimension formulas and Poincare duality on 500 random skeletons",
           dimension_formulas());
    detail.clear();
    report(2, "contraction/cohomology equivalence on 10,000 seeded instances",
           vcprop_equivalence(detail), detail);
    detail.clear();
    report(3, "pairwise-saturation closure equals the all-subsets oracle", closure_oracle(detail),
           detail);
    detail.clear();
    report(4, "tree construction invariants and containment oracle", tree_oracle(detail), detail);
    report(5, "stabilization invariants, idempotence and degenerate families", stabilization());
    detail.clear();
    report(6, "group layer: orthogonality, conjugacy, inertia p-groups", group_layer(detail),
           detail);
    detail.clear();
    report(7, "cover criteria: conjugation invariance and planted fixtures",
           cover_criteria(detail), detail);
    detail.clear();
    report(8, "CLI round-trip, determinism and exit-code coverage",
           cli_end_to_end(cli, tests_dir, detail), detail);

    return g_failures == 0 ? 0 : 1;
}
