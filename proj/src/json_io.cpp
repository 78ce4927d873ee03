#include "nacurve/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace nacurve {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("input: " + msg); }

const Json& expect_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

void check_schema_version(const Json& j) {
    if (j.is_object() && j.contains("schema_version")) {
        const Json& v = j.at("schema_version");
        if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
            fail("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
    }
}

Int int_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(std::string("cannot parse integer '") + j.get<std::string>() + "' for " + what);
        }
    }
    fail(std::string("expected an integer for ") + what);
}

}  // namespace

Json rational_to_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p()) return Json(r.num().get_si());
    return Json(r.str());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    fail("expected a rational (integer or \"a/b\" string)");
}

Json valuation_to_json(const Valuation& v) {
    if (v.is_infinite()) return Json("inf");
    return rational_to_json(v.finite());
}

Json disk_to_json(const ClosedDisk& d) {
    return Json{{"center", rational_to_json(d.center())}, {"v", rational_to_json(d.radius_val())}};
}

ClosedDisk disk_from_json(const Json& j, const Int& prime) {
    try {
        return ClosedDisk(rational_from_json(expect_field(j, "center")),
                          rational_from_json(expect_field(j, "v")), prime);
    } catch (const std::invalid_argument& e) {
        fail(std::string("bad disk: ") + e.what());
    }
}

DisksDocument parse_disks_document(const Json& j) {
    check_schema_version(j);
    DisksDocument doc;
    doc.prime = int_from_json(expect_field(j, "prime"), "prime");
    const Json& arr = expect_field(j, "disks");
    if (!arr.is_array() || arr.empty()) fail("'disks' must be a nonempty array");
    for (const auto& d : arr) doc.disks.push_back(disk_from_json(d, doc.prime));
    return doc;
}

Json tree_to_json(const DiskTree& t) {
    Json vertices = Json::array();
    for (const auto& d : t.vertices) vertices.push_back(disk_to_json(d));
    Json edges = Json::array();
    for (const auto& e : t.edges)
        edges.push_back(Json{{"parent", e.parent},
                             {"child", e.child},
                             {"thickness", rational_to_json(e.thickness)}});
    Json prime = t.prime.fits_slong_p() ? Json(t.prime.get_si()) : Json(t.prime.get_str());
    return Json{{"schema_version", kSchemaVersion},
                {"prime", prime},
                {"vertices", vertices},
                {"edges", edges}};
}

DiskTree parse_tree_document(const Json& j) {
    check_schema_version(j);
    Int prime = int_from_json(expect_field(j, "prime"), "prime");
    std::vector<ClosedDisk> disks;
    for (const auto& d : expect_field(j, "vertices")) disks.push_back(disk_from_json(d, prime));
    // rebuild rather than trust the listed edges, then check they agree
    DiskTree t = build_tree(disks);
    const Json& edges = expect_field(j, "edges");
    if (edges.size() != t.edges.size()) fail("tree document edges do not match the vertex set");
    for (size_t i = 0; i < t.edges.size(); ++i) {
        const Json& e = edges.at(i);
        if (expect_field(e, "parent").get<int>() != t.edges[i].parent ||
            expect_field(e, "child").get<int>() != t.edges[i].child ||
            rational_from_json(expect_field(e, "thickness")) != t.edges[i].thickness)
            fail("tree document edge " + std::to_string(i) + " is inconsistent");
    }
    return t;
}

Json skeleton_to_json(const Skeleton& s) {
    Json vertices = Json::array();
    for (int g : s.genus) vertices.push_back(Json{{"g", g}});
    Json edges = Json::array();
    bool any_thickness = false;
    for (const auto& e : s.edges) {
        edges.push_back(Json::array({e.u, e.v}));
        if (e.thickness) any_thickness = true;
    }
    Json out{{"schema_version", kSchemaVersion},
             {"vertices", vertices},
             {"edges", edges},
             {"legs", s.legs}};
    if (any_thickness) {
        Json th = Json::array();
        for (const auto& e : s.edges)
            th.push_back(e.thickness ? rational_to_json(*e.thickness) : Json(nullptr));
        out["thickness"] = th;
    }
    return out;
}

Skeleton parse_skeleton_document(const Json& j) {
    check_schema_version(j);
    Skeleton s;
    for (const auto& v : expect_field(j, "vertices")) {
        if (v.is_number_integer())
            s.genus.push_back(v.get<int>());
        else
            s.genus.push_back(expect_field(v, "g").get<int>());
    }
    for (const auto& e : expect_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) fail("skeleton edge must be a [u, v] pair");
        s.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), std::nullopt});
    }
    if (j.contains("legs"))
        for (const auto& l : j.at("legs")) s.legs.push_back(l.get<int>());
    if (j.contains("thickness")) {
        const Json& th = j.at("thickness");
        if (th.size() != s.edges.size()) fail("'thickness' must be parallel to 'edges'");
        for (size_t i = 0; i < s.edges.size(); ++i)
            if (!th.at(i).is_null()) s.edges[i].thickness = rational_from_json(th.at(i));
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return s;
}

namespace {

Perm perm_from_json(const Json& j, int degree) {
    if (!j.is_array() || static_cast<int>(j.size()) != degree)
        fail("permutation must be a one-line image array of length " + std::to_string(degree));
    Perm p;
    for (const auto& img : j) {
        long long v = img.get<long long>();
        if (v < 1 || v > degree) fail("permutation image out of range (images are 1-based)");
        p.push_back(static_cast<uint8_t>(v - 1));
    }
    return p;
}

Subgroup subgroup_from_json(const Json& j, const GroupPtr& g, const std::string& site) {
    if (!j.is_array()) fail("subgroup at " + site + " must be an array");
    std::vector<int> elems;
    for (const auto& entry : j) {
        if (entry.is_array()) {
            int idx = g->index_of(perm_from_json(entry, g->degree()));
            if (idx < 0) fail("subgroup at " + site + ": permutation is not a group element");
            elems.push_back(idx);
        } else if (entry.is_number_integer()) {
            elems.push_back(entry.get<int>());
        } else {
            fail("subgroup at " + site + ": entries are element indices or one-line permutations");
        }
    }
    try {
        return Subgroup(g, std::move(elems));
    } catch (const std::invalid_argument& e) {
        fail("subgroup at " + site + ": " + e.what());
    }
}

Cyclotomic cyclotomic_from_json(const Json& j, int m) {
    if (!j.is_array()) fail("cyclotomic value must be a coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Cyclotomic::from_coeffs(m, std::move(coeffs));
}

Character character_from_json(const Json& j, const GroupPtr& g, const std::string& what) {
    int m = expect_field(j, "m").get<int>();
    if (m < 1) fail(what + ": cyclotomic order must be >= 1");
    const Json& reps = expect_field(j, "classes");
    const Json& values = expect_field(j, "values");
    if (reps.size() != values.size()) fail(what + ": 'classes' and 'values' differ in length");
    std::vector<int> class_reps;
    for (const auto& r : reps) class_reps.push_back(r.get<int>());
    std::vector<Cyclotomic> vals;
    for (const auto& v : values) vals.push_back(cyclotomic_from_json(v, m));
    try {
        return Character::from_table(g, m, class_reps, std::move(vals));
    } catch (const std::invalid_argument& e) {
        fail(what + ": " + e.what());
    }
}

}  // namespace

CoverDocument parse_cover_document(const Json& j) {
    check_schema_version(j);
    Int prime = int_from_json(expect_field(j, "prime"), "prime");

    const Json& gj = expect_field(j, "group");
    int degree = expect_field(gj, "degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : expect_field(gj, "generators")) gens.push_back(perm_from_json(g, degree));
    GroupPtr group;
    try {
        group = std::make_shared<FiniteGroup>(degree, std::move(gens));
    } catch (const std::invalid_argument& e) {
        fail(std::string("group: ") + e.what());
    }

    const Json& base = expect_field(j, "base");
    std::vector<ClosedDisk> disks;
    for (const auto& d : expect_field(base, "disks")) disks.push_back(disk_from_json(d, prime));
    DiskTree tree;
    try {
        tree = build_tree(disks);
    } catch (const std::invalid_argument& e) {
        fail(std::string("base: ") + e.what());
    } catch (const std::domain_error& e) {
        fail(std::string("base: ") + e.what());
    }

    CoverDocument doc;
    doc.spec.prime = prime;
    doc.spec.group = group;
    doc.spec.base = std::move(tree);

    auto disk_ref_index = [&](const Json& ref, const std::string& what) {
        int idx = doc.spec.base.find_vertex(disk_from_json(ref, prime));
        if (idx < 0) fail(what + ": disk is not a vertex of the base tree");
        return idx;
    };

    const Json& vertices = expect_field(j, "vertices");
    if (vertices.size() != doc.spec.base.vertices.size())
        fail("expected vertex data for each of the " +
             std::to_string(doc.spec.base.vertices.size()) + " base vertices");
    std::vector<std::optional<VertexCoverData>> vdata(doc.spec.base.vertices.size());
    for (const auto& v : vertices) {
        int idx = disk_ref_index(expect_field(v, "disk"), "vertex data");
        if (vdata[idx]) fail("duplicate vertex data for " + doc.spec.base.vertices[idx].str());
        std::string site = "vertex " + doc.spec.base.vertices[idx].str();
        VertexCoverData d{
            {subgroup_from_json(expect_field(v, "decomposition"), group, site),
             subgroup_from_json(expect_field(v, "inertia"), group, site)},
            v.contains("good_reduction_in_X") && v.at("good_reduction_in_X").get<bool>()};
        vdata[idx] = std::move(d);
    }
    for (size_t i = 0; i < vdata.size(); ++i) {
        if (!vdata[i]) fail("no vertex data for " + doc.spec.base.vertices[i].str());
        doc.spec.vertex_data.push_back(std::move(*vdata[i]));
    }

    const Json& edges = expect_field(j, "edges");
    if (edges.size() != doc.spec.base.edges.size())
        fail("expected end data for each of the " + std::to_string(doc.spec.base.edges.size()) +
             " base edges");
    std::vector<std::optional<EdgeCoverData>> edata(doc.spec.base.edges.size());
    for (const auto& e : edges) {
        int child = disk_ref_index(expect_field(e, "child"), "edge data");
        // each non-root vertex has a unique parent edge, the root child included
        int edge_index = -1;
        for (size_t k = 0; k < doc.spec.base.edges.size(); ++k)
            if (doc.spec.base.edges[k].child == child) edge_index = static_cast<int>(k);
        if (edge_index < 0) fail("edge data: no edge with that child");
        if (edata[edge_index]) fail("duplicate edge data for child " + std::to_string(child));
        std::string site = "edge to " + doc.spec.base.vertices[child].str();
        const Json& outer = expect_field(e, "outer");
        const Json& inner = expect_field(e, "inner");
        EdgeCoverData d{
            {subgroup_from_json(expect_field(outer, "decomposition"), group, site + " outer"),
             subgroup_from_json(expect_field(outer, "inertia"), group, site + " outer")},
            {subgroup_from_json(expect_field(inner, "decomposition"), group, site + " inner"),
             subgroup_from_json(expect_field(inner, "inertia"), group, site + " inner")}};
        edata[edge_index] = std::move(d);
    }
    for (size_t i = 0; i < edata.size(); ++i) {
        if (!edata[i]) fail("no end data for the edge to " +
                            doc.spec.base.vertices[doc.spec.base.edges[i].child].str());
        doc.spec.edge_data.push_back(std::move(*edata[i]));
    }

    int shared_m = -1;
    if (j.contains("characters")) {
        for (const auto& cj : j.at("characters")) {
            std::string name = expect_field(cj, "name").get<std::string>();
            Character chi = character_from_json(cj, group, "character '" + name + "'");
            if (shared_m == -1) shared_m = chi.order();
            if (chi.order() != shared_m)
                fail("character '" + name + "': all characters must share one cyclotomic order");
            if (doc.spec.find_character(name)) fail("duplicate character name '" + name + "'");
            doc.spec.characters.emplace_back(std::move(name), std::move(chi));
        }
    }
    if (j.contains("h1_character")) {
        Character h1 = character_from_json(j.at("h1_character"), group, "h1_character");
        if (shared_m != -1 && h1.order() != shared_m)
            fail("h1_character: cyclotomic order differs from the character list");
        doc.spec.h1_character = std::move(h1);
    }

    if (j.contains("assertions")) {
        for (const auto& aj : j.at("assertions")) {
            ResolvedAssertion a;
            a.tau = expect_field(aj, "tau").get<std::string>();
            if (!doc.spec.find_character(a.tau))
                fail("assertion references unknown character '" + a.tau + "'");
            for (const auto& ref : expect_field(aj, "vertices"))
                a.vertex_set.push_back(disk_ref_index(ref, "assertion"));
            a.claim = expect_field(aj, "claim").get<std::string>();
            if (aj.contains("note")) a.note = aj.at("note").get<std::string>();
            doc.spec.assertions.push_back(std::move(a));
        }
    }

    if (j.contains("x_skeleton")) doc.x_skeleton = parse_skeleton_document(j.at("x_skeleton"));
    if (j.contains("ell")) doc.ell = int_from_json(j.at("ell"), "ell");

    try {
        doc.spec.validate_shape();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return doc;
}

Json load_json(const std::string& path) {
    try {
        if (path.empty() || path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) fail("cannot open '" + path + "'");
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nacurve
