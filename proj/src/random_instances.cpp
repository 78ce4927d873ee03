#include "nacurve/random_instances.hpp"

#include <algorithm>
#include <sstream>

namespace nacurve {

Skeleton random_open_skeleton(SplitMix64& rng, int max_vertices) {
    Skeleton s;
    int n = rng.range(1, max_vertices);
    s.genus.reserve(n);
    for (int v = 0; v < n; ++v) {
        int g = 0;
        if (rng.chance(3, 10)) g = rng.range(1, 2);
        s.genus.push_back(g);
    }
    int m = rng.range(0, n + 2);
    for (int e = 0; e < m; ++e) {
        int u = rng.range(0, n - 1);
        int v = rng.chance(1, 8) ? u : rng.range(0, n - 1);  // occasional loop
        s.edges.push_back({u, v, std::nullopt});
    }
    auto comp = components(s);
    int k = component_count(s);
    std::vector<int> first(k, -1);
    for (int v = 0; v < n; ++v)
        if (first[comp[v]] == -1) first[comp[v]] = v;
    for (int c = 0; c < k; ++c) s.legs.push_back(first[c]);  // at least one leg each
    int extra = rng.range(0, 3);
    for (int l = 0; l < extra; ++l) s.legs.push_back(rng.range(0, n - 1));
    return s;
}

std::vector<std::vector<int>> random_pieces(SplitMix64& rng, const Skeleton& s) {
    int n = s.vertex_count();
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> pieces;
    int want = rng.range(0, std::max(1, n / 2));
    for (int p = 0; p < want; ++p) {
        int seed_vertex = rng.range(0, n - 1);
        if (used[seed_vertex]) continue;
        std::vector<int> piece{seed_vertex};
        used[seed_vertex] = 1;
        int target = rng.range(1, std::max(1, n / 2));
        while (static_cast<int>(piece.size()) < target) {
            // grow by a random unused neighbor of the piece
            std::vector<int> frontier;
            for (const auto& e : s.edges) {
                bool u_in = std::find(piece.begin(), piece.end(), e.u) != piece.end();
                bool v_in = std::find(piece.begin(), piece.end(), e.v) != piece.end();
                if (u_in && !used[e.v]) frontier.push_back(e.v);
                if (v_in && !used[e.u]) frontier.push_back(e.u);
            }
            if (frontier.empty()) break;
            int pick = frontier[rng.below(frontier.size())];
            used[pick] = 1;
            piece.push_back(pick);
        }
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

std::vector<ClosedDisk> random_disk_collection(SplitMix64& rng, const Int& p, int max_size) {
    static const long denominators[] = {1, 1, 1, 7, 11};  // occasionally non-integral centers
    int n = rng.range(1, max_size);
    std::vector<ClosedDisk> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        long den = denominators[rng.below(5)];
        if (mpz_divisible_p(Int(den).get_mpz_t(), p.get_mpz_t())) den = 1;
        Rational center = Rational(rng.range(0, 40), den) * Rational(p);
        Rational radius(rng.range(1, 6), rng.chance(1, 3) ? 2 : 1);
        out.emplace_back(center, radius, p);
    }
    return out;
}

static std::string dump_instance(const Skeleton& fine, const std::vector<std::vector<int>>& pieces) {
    std::ostringstream os;
    os << "fine: genus=[";
    for (size_t i = 0; i < fine.genus.size(); ++i) os << (i ? "," : "") << fine.genus[i];
    os << "] edges=[";
    for (size_t i = 0; i < fine.edges.size(); ++i)
        os << (i ? "," : "") << "(" << fine.edges[i].u << "," << fine.edges[i].v << ")";
    os << "] legs=[";
    for (size_t i = 0; i < fine.legs.size(); ++i) os << (i ? "," : "") << fine.legs[i];
    os << "] pieces=[";
    for (size_t p = 0; p < pieces.size(); ++p) {
        os << (p ? "," : "") << "{";
        for (size_t i = 0; i < pieces[p].size(); ++i) os << (i ? "," : "") << pieces[p][i];
        os << "}";
    }
    os << "]";
    return os.str();
}

VcpropFuzzSummary run_vcprop_fuzz(uint64_t seed, uint64_t count) {
    VcpropFuzzSummary summary;
    summary.count = count;
    for (uint64_t i = 0; i < count; ++i) {
        SplitMix64 rng = SplitMix64::for_instance(seed, i);
        Skeleton fine = random_open_skeleton(rng, 8);
        auto pieces = random_pieces(rng, fine);
        Contraction c = contract(fine, pieces);
        bool lhs = cohomological_test(c);
        bool rhs = is_almost_semistable(c) && is_tree_like(fine);
        if (lhs && rhs) ++summary.almost_semistable_hits;
        if (lhs != rhs) {
            if (summary.discrepancies == 0) {
                summary.first_counterexample_index = i;
                summary.first_counterexample = dump_instance(fine, pieces);
            }
            ++summary.discrepancies;
        }
    }
    return summary;
}

}  // namespace nacurve
