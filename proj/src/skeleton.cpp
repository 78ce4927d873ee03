#include "nacurve/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nacurve {

void Skeleton::validate() const {
    for (int g : genus)
        if (g < 0) throw std::invalid_argument("skeleton: negative genus");
    int n = vertex_count();
    for (const auto& e : edges)
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("skeleton: edge endpoint out of range");
    for (int l : legs)
        if (l < 0 || l >= n) throw std::invalid_argument("skeleton: leg attachment out of range");
    for (const auto& e : edges)
        if (e.thickness && !(*e.thickness > Rational(0)))
            throw std::invalid_argument("skeleton: edge thickness must be > 0");
}

std::vector<int> components(const Skeleton& s) {
    int n = s.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : s.edges) parent[find(e.u)] = find(e.v);
    std::vector<int> id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (id[r] == -1) id[r] = next++;
        id[v] = id[r];
    }
    return id;
}

int component_count(const Skeleton& s) {
    auto id = components(s);
    return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

bool is_connected(const Skeleton& s) { return component_count(s) == 1; }

int betti1(const Skeleton& s) {
    return s.edge_count() - s.vertex_count() + component_count(s);
}

std::vector<int> total_genus_per_component(const Skeleton& s) {
    auto id = components(s);
    int k = component_count(s);
    std::vector<int> genus_sum(k, 0), verts(k, 0), edge_cnt(k, 0);
    for (int v = 0; v < s.vertex_count(); ++v) {
        genus_sum[id[v]] += s.genus[v];
        verts[id[v]] += 1;
    }
    for (const auto& e : s.edges) edge_cnt[id[e.u]] += 1;
    std::vector<int> out(k);
    for (int c = 0; c < k; ++c) out[c] = genus_sum[c] + (edge_cnt[c] - verts[c] + 1);
    return out;
}

int total_genus(const Skeleton& s) {
    if (!is_connected(s))
        throw std::invalid_argument("total_genus: skeleton is disconnected; use the per-component variant");
    return total_genus_per_component(s)[0];
}

std::vector<int> legs_per_component(const Skeleton& s) {
    auto id = components(s);
    std::vector<int> out(component_count(s), 0);
    for (int l : s.legs) out[id[l]] += 1;
    return out;
}

static void require_open_curve(const std::vector<int>& legs_per_comp) {
    for (int c : legs_per_comp)
        if (c == 0) throw std::domain_error("not an open analytic curve skeleton: component without leg");
}

int dim_h1c(const Skeleton& s) {
    auto g = total_genus_per_component(s);
    auto l = legs_per_component(s);
    require_open_curve(l);
    int dim = 0;
    for (size_t c = 0; c < g.size(); ++c) dim += 2 * g[c] + l[c] - 1;
    return dim;
}

int dim_boundary_module(const Skeleton& s) {
    auto l = legs_per_component(s);
    require_open_curve(l);
    return s.leg_count() - component_count(s);
}

int dim_h1_csp(const Skeleton& s) {
    auto g = total_genus_per_component(s);
    require_open_curve(legs_per_component(s));
    int dim = 0;
    for (int gc : g) dim += 2 * gc;
    return dim;
}

int dim_h1(const Skeleton& s) {
    int dim = dim_h1_csp(s) + dim_boundary_module(s);
    if (dim != dim_h1c(s))
        throw std::logic_error("dim_h1: Poincare duality violated (internal error)");
    return dim;
}

int dim_h1_proper(const Skeleton& s) {
    int g = 0;
    for (int gv : s.genus) g += gv;
    return 2 * g + betti1(s);
}

bool is_tree_like(const Skeleton& s) { return betti1(s) == 0; }

// --- contraction ------------------------------------------------------------

Contraction contract(const Skeleton& fine, const std::vector<std::vector<int>>& pieces) {
    fine.validate();
    int n = fine.vertex_count();
    std::vector<int> piece_of(n, -1);
    for (size_t p = 0; p < pieces.size(); ++p) {
        if (pieces[p].empty()) throw std::invalid_argument("contract: empty piece");
        for (int v : pieces[p]) {
            if (v < 0 || v >= n) throw std::invalid_argument("contract: piece vertex out of range");
            if (piece_of[v] != -1) throw std::invalid_argument("contract: overlapping pieces");
            piece_of[v] = static_cast<int>(p);
        }
    }
    // connectivity of each piece within the fine graph
    for (size_t p = 0; p < pieces.size(); ++p) {
        std::vector<int> stack{pieces[p][0]};
        std::vector<char> seen(n, 0);
        seen[pieces[p][0]] = 1;
        size_t found = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : fine.edges) {
                int w = -1;
                if (e.u == v) w = e.v;
                else if (e.v == v) w = e.u;
                if (w >= 0 && piece_of[w] == static_cast<int>(p) && !seen[w]) {
                    seen[w] = 1;
                    ++found;
                    stack.push_back(w);
                }
            }
        }
        if (found != pieces[p].size())
            throw std::invalid_argument("contract: piece is not connected");
    }

    // Quotient: surviving vertices keep their index order, then one vertex per piece.
    std::vector<int> quotient_of(n, -1);
    Skeleton quot;
    for (int v = 0; v < n; ++v)
        if (piece_of[v] == -1) {
            quotient_of[v] = quot.vertex_count();
            quot.genus.push_back(fine.genus[v]);
        }
    std::vector<int> piece_vertex(pieces.size());
    for (size_t p = 0; p < pieces.size(); ++p) {
        piece_vertex[p] = quot.vertex_count();
        quot.genus.push_back(0);  // the fiber collapses to a point of Z
        for (int v : pieces[p]) quotient_of[v] = piece_vertex[p];
    }

    std::vector<int> internal_edges(pieces.size(), 0);
    for (const auto& e : fine.edges) {
        int cu = quotient_of[e.u], cv = quotient_of[e.v];
        if (cu == cv && piece_of[e.u] != -1) {
            internal_edges[piece_of[e.u]] += 1;  // vanishes inside the fiber
            continue;
        }
        quot.edges.push_back({cu, cv, e.thickness});
    }
    for (int l : fine.legs) quot.legs.push_back(quotient_of[l]);

    Contraction c;
    c.fine = fine;
    c.fibers.resize(pieces.size());
    for (size_t p = 0; p < pieces.size(); ++p) {
        auto& f = c.fibers[p];
        f.fine_vertices = pieces[p];
        std::sort(f.fine_vertices.begin(), f.fine_vertices.end());
        for (int v : pieces[p]) f.genus_sum += fine.genus[v];
        f.betti1 = internal_edges[p] - static_cast<int>(pieces[p].size()) + 1;
        f.coarse_vertex = piece_vertex[p];
    }

    // Absorb hanging fibers: exactly one incident edge, far endpoint surviving.
    std::vector<char> drop(quot.vertex_count(), 0);
    std::vector<char> is_piece_vertex(quot.vertex_count(), 0);
    for (int pv : piece_vertex) is_piece_vertex[pv] = 1;
    std::vector<int> absorb_into(quot.vertex_count(), -1);
    for (size_t p = 0; p < pieces.size(); ++p) {
        int pv = piece_vertex[p];
        int slots = 0, neighbor = -1;
        for (const auto& e : quot.edges) {
            if (e.u == pv) { ++slots; neighbor = e.v; }
            if (e.v == pv) { ++slots; neighbor = e.u; }
        }
        if (slots == 1 && !is_piece_vertex[neighbor]) {
            drop[pv] = 1;
            absorb_into[pv] = neighbor;
            c.fibers[p].absorbed = true;
        }
    }

    std::vector<int> final_of(quot.vertex_count(), -1);
    for (int v = 0; v < quot.vertex_count(); ++v) {
        if (drop[v]) continue;
        final_of[v] = c.coarse.vertex_count();
        c.coarse.genus.push_back(quot.genus[v]);
    }
    auto resolve = [&](int v) { return drop[v] ? final_of[absorb_into[v]] : final_of[v]; };
    for (const auto& e : quot.edges) {
        if (drop[e.u] || drop[e.v]) continue;  // only the single absorbed edge qualifies
        c.coarse.edges.push_back({final_of[e.u], final_of[e.v], e.thickness});
    }
    for (int l : quot.legs) c.coarse.legs.push_back(resolve(l));

    c.vertex_map.resize(n);
    for (int v = 0; v < n; ++v) c.vertex_map[v] = resolve(quotient_of[v]);
    for (auto& f : c.fibers) f.coarse_vertex = resolve(f.coarse_vertex);

    // bookkeeping identities the equivalence check relies on
    int fiber_b1 = 0, fiber_genus = 0, coarse_genus = 0, fine_genus = 0;
    for (const auto& f : c.fibers) {
        fiber_b1 += f.betti1;
        fiber_genus += f.genus_sum;
    }
    for (int g : c.coarse.genus) coarse_genus += g;
    for (int g : fine.genus) fine_genus += g;
    if (betti1(fine) != betti1(c.coarse) + fiber_b1 ||
        fine_genus != coarse_genus + fiber_genus)
        throw std::logic_error("contract: fiber bookkeeping identity violated (internal error)");
    return c;
}

bool is_almost_semistable(const Contraction& c) {
    for (const auto& f : c.fibers)
        if (f.genus_sum + f.betti1 != 0) return false;
    return true;
}

bool cohomological_test(const Contraction& c) {
    return dim_h1_proper(c.coarse) == dim_h1_csp(c.fine);
}

// --- stabilization -----------------------------------------------------------

const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Stable: return "Stable";
        case ComponentKind::Disk: return "Disk";
        case ComponentKind::Annulus: return "Annulus";
    }
    return "?";
}

namespace {

// Mutable working copy of one component during reduction.
struct Worklist {
    std::vector<int> genus;
    std::vector<char> vertex_alive;
    struct E {
        int u, v;
        std::optional<Rational> thickness;
        bool alive;
    };
    std::vector<E> edges;
    std::vector<int> legs;  // per leg, its current vertex

    int edge_slots(int v) const {
        int k = 0;
        for (const auto& e : edges)
            if (e.alive) {
                if (e.u == v) ++k;
                if (e.v == v) ++k;  // loop contributes 2
            }
        return k;
    }
    int leg_count(int v) const {
        int k = 0;
        for (int l : legs)
            if (l == v) ++k;
        return k;
    }
};

}  // namespace

static StableComponent stabilize_component(const Skeleton& comp) {
    Worklist w;
    w.genus = comp.genus;
    w.vertex_alive.assign(comp.vertex_count(), 1);
    for (const auto& e : comp.edges) w.edges.push_back({e.u, e.v, e.thickness, true});
    w.legs = comp.legs;

    std::optional<ComponentKind> terminal;
    bool progress = true;
    while (progress && !terminal) {
        progress = false;
        for (int v = 0; v < comp.vertex_count() && !progress && !terminal; ++v) {
            if (!w.vertex_alive[v] || w.genus[v] != 0) continue;
            int slots = w.edge_slots(v);
            int legs = w.leg_count(v);
            if (slots + legs > 2) continue;

            // collect the distinct live incident edges
            std::vector<int> inc;
            for (size_t i = 0; i < w.edges.size(); ++i)
                if (w.edges[i].alive && (w.edges[i].u == v || w.edges[i].v == v))
                    inc.push_back(static_cast<int>(i));

            if (slots == 0) {
                // isolated vertex: terminal disk/annulus classification
                if (legs == 1) terminal = ComponentKind::Disk;
                else if (legs == 2) terminal = ComponentKind::Annulus;
                // legs == 0 cannot happen (open-curve precondition)
                continue;
            }
            if (inc.size() == 1 && slots == 2) continue;  // loop-only vertex: never contracted
            if (slots == 1 && legs == 0) {
                // leaf: blow down
                w.edges[inc[0]].alive = false;
                w.vertex_alive[v] = 0;
                progress = true;
            } else if (slots == 1 && legs == 1) {
                // leaf carrying the end: the leg migrates to the neighbor
                auto& e = w.edges[inc[0]];
                int other = (e.u == v) ? e.v : e.u;
                e.alive = false;
                w.vertex_alive[v] = 0;
                for (int& l : w.legs)
                    if (l == v) l = other;
                progress = true;
            } else if (slots == 2 && legs == 0 && inc.size() == 2) {
                // valence-2 vertex between two distinct edges: smooth
                auto& e1 = w.edges[inc[0]];
                auto& e2 = w.edges[inc[1]];
                int a = (e1.u == v) ? e1.v : e1.u;
                int b = (e2.u == v) ? e2.v : e2.u;
                std::optional<Rational> t;
                if (e1.thickness && e2.thickness) t = *e1.thickness + *e2.thickness;
                e1.alive = false;
                e2.alive = false;
                w.vertex_alive[v] = 0;
                w.edges.push_back({a, b, t, true});
                progress = true;
            }
        }
    }

    StableComponent out;
    if (terminal) {
        out.kind = *terminal;
        out.skeleton.genus = {0};
        out.skeleton.legs.assign(out.kind == ComponentKind::Disk ? 1 : 2, 0);
        return out;
    }
    out.kind = ComponentKind::Stable;
    std::vector<int> remap(comp.vertex_count(), -1);
    for (int v = 0; v < comp.vertex_count(); ++v)
        if (w.vertex_alive[v]) {
            remap[v] = out.skeleton.vertex_count();
            out.skeleton.genus.push_back(w.genus[v]);
        }
    for (const auto& e : w.edges)
        if (e.alive) out.skeleton.edges.push_back({remap[e.u], remap[e.v], e.thickness});
    for (int l : w.legs) out.skeleton.legs.push_back(remap[l]);
    return out;
}

StabilizeResult stabilize(const Skeleton& s) {
    s.validate();
    require_open_curve(legs_per_component(s));

    auto id = components(s);
    int k = component_count(s);
    StabilizeResult result;
    result.components.reserve(k);
    for (int c = 0; c < k; ++c) {
        Skeleton comp;
        std::vector<int> remap(s.vertex_count(), -1);
        for (int v = 0; v < s.vertex_count(); ++v)
            if (id[v] == c) {
                remap[v] = comp.vertex_count();
                comp.genus.push_back(s.genus[v]);
            }
        for (const auto& e : s.edges)
            if (id[e.u] == c) comp.edges.push_back({remap[e.u], remap[e.v], e.thickness});
        for (int l : s.legs)
            if (id[l] == c) comp.legs.push_back(remap[l]);
        result.components.push_back(stabilize_component(comp));
    }

    for (const auto& sc : result.components) {
        int base = result.combined.vertex_count();
        for (int g : sc.skeleton.genus) result.combined.genus.push_back(g);
        for (const auto& e : sc.skeleton.edges)
            result.combined.edges.push_back({e.u + base, e.v + base, e.thickness});
        for (int l : sc.skeleton.legs) result.combined.legs.push_back(l + base);
    }
    return result;
}

std::string skeleton_to_dot(const Skeleton& s) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (int v = 0; v < s.vertex_count(); ++v)
        os << "  v" << v << " [label=\"g=" << s.genus[v] << "\"];\n";
    for (size_t i = 0; i < s.edges.size(); ++i) {
        os << "  v" << s.edges[i].u << " -- v" << s.edges[i].v;
        if (s.edges[i].thickness) os << " [label=\"" << s.edges[i].thickness->str() << "\"]";
        os << ";\n";
    }
    for (size_t i = 0; i < s.legs.size(); ++i) {
        os << "  leg" << i << " [shape=none, label=\"\"];\n";
        os << "  v" << s.legs[i] << " -- leg" << i << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace nacurve
