#include "nacurve/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nacurve {

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_compose: degree mismatch");
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<uint8_t>(x);
    return r;
}

static void validate_perm(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree)
        throw std::invalid_argument("group: generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (uint8_t img : p) {
        if (img >= degree || seen[img]) throw std::invalid_argument("group: not a permutation");
        seen[img] = 1;
    }
}

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree_ < 1 || degree_ > kMaxDegree)
        throw std::invalid_argument("group: degree must be in [1, " + std::to_string(kMaxDegree) + "]");
    for (const auto& g : generators_) validate_perm(g, degree_);

    // breadth-first closure from the identity
    elements_.push_back(perm_identity(degree_));
    index_[elements_[0]] = 0;
    for (size_t head = 0; head < elements_.size(); ++head) {
        for (const auto& g : generators_) {
            Perm next = perm_compose(elements_[head], g);
            if (index_.find(next) == index_.end()) {
                if (static_cast<int>(elements_.size()) >= kMaxOrder)
                    throw std::invalid_argument("group: order exceeds the cap of " +
                                                std::to_string(kMaxOrder));
                index_[next] = static_cast<int>(elements_.size());
                elements_.push_back(std::move(next));
            }
        }
    }

    int n = size();
    mul_.resize(static_cast<size_t>(n) * n);
    inv_.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int k = index_of(perm_compose(elements_[i], elements_[j]));
            mul_[static_cast<size_t>(i) * n + j] = static_cast<uint16_t>(k);
        }
        inv_[i] = static_cast<uint16_t>(index_of(perm_inverse(elements_[i])));
    }

    // conjugacy classes by orbit of conjugation
    class_of_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (class_of_[i] != -1) continue;
        int c = static_cast<int>(classes_.size());
        std::vector<int> cls;
        for (int g = 0; g < n; ++g) {
            int x = conjugate(g, i);
            if (class_of_[x] == -1) {
                class_of_[x] = c;
                cls.push_back(x);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
}

int FiniteGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::order_of(int i) const {
    int ord = 1, x = i;
    while (x != 0) {
        x = mul(x, i);
        ++ord;
    }
    return ord;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int i = 0; i < size(); ++i) e = std::lcm(e, static_cast<long long>(order_of(i)));
    return static_cast<int>(e);
}

bool FiniteGroup::is_p_group(const Int& p) const {
    Int n(size());
    while (n > 1) {
        if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return false;
        n /= p;
    }
    return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
    if (!parent_) throw std::invalid_argument("subgroup: null parent group");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (int i : elems_)
        if (i < 0 || i >= parent_->size())
            throw std::invalid_argument("subgroup: element index out of range");
    if (elems_.empty() || elems_[0] != 0)
        throw std::invalid_argument("subgroup: missing identity");
    for (int a : elems_) {
        if (!contains(parent_->inv(a)))
            throw std::invalid_argument("subgroup: not closed under inverse");
        for (int b : elems_)
            if (!contains(parent_->mul(a, b)))
                throw std::invalid_argument("subgroup: not closed under multiplication");
    }
}

bool Subgroup::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
    std::set<int> elems{0};
    std::vector<int> work{0};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int s : gens) {
            if (s < 0 || s >= g->size())
                throw std::invalid_argument("subgroup_generated: generator index out of range");
            for (int y : {g->mul(x, s), g->mul(x, g->inv(s))}) {
                if (elems.insert(y).second) work.push_back(y);
            }
        }
    }
    return Subgroup(g, std::vector<int>(elems.begin(), elems.end()));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    std::vector<int> out;
    out.reserve(h.size());
    for (int x : h.elements()) out.push_back(h.parent()->conjugate(g, x));
    return Subgroup(h.parent(), std::move(out));
}

static void require_same_parent(const Subgroup& a, const Subgroup& b, const char* op) {
    if (a.parent() != b.parent())
        throw std::invalid_argument(std::string(op) + ": subgroups of different groups");
}

bool are_conjugate(const Subgroup& h1, const Subgroup& h2) {
    require_same_parent(h1, h2, "are_conjugate");
    if (h1.size() != h2.size()) return false;
    const auto& g = *h1.parent();
    for (int c = 0; c < g.size(); ++c) {
        bool all = true;
        for (int x : h1.elements())
            if (!h2.contains(g.conjugate(c, x))) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

bool is_conjugate_into(const Subgroup& h, const Subgroup& k) {
    require_same_parent(h, k, "is_conjugate_into");
    if (h.size() > k.size()) return false;
    const auto& g = *h.parent();
    for (int c = 0; c < g.size(); ++c) {
        bool all = true;
        for (int x : h.elements())
            if (!k.contains(g.conjugate(c, x))) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

bool is_subset(const Subgroup& h, const Subgroup& k) {
    require_same_parent(h, k, "is_subset");
    for (int x : h.elements())
        if (!k.contains(x)) return false;
    return true;
}

bool is_normal_in(const Subgroup& n, const Subgroup& g) {
    require_same_parent(n, g, "is_normal_in");
    if (!is_subset(n, g)) return false;
    for (int c : g.elements())
        for (int x : n.elements())
            if (!n.contains(n.parent()->conjugate(c, x))) return false;
    return true;
}

bool is_p_group(const Subgroup& h, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("is_p_group: p is not prime");
    Int n(h.size());
    while (n > 1) {
        if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return false;
        n /= p;
    }
    return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    auto add = [&](const Subgroup& s) {
        if (seen.insert(s.elements()).second) work.push_back(s.elements());
    };
    add(subgroup_generated(g, {}));
    while (!work.empty()) {
        std::vector<int> cur = std::move(work.back());
        work.pop_back();
        for (int x = 0; x < g->size(); ++x) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            std::vector<int> gens = cur;
            gens.push_back(x);
            add(subgroup_generated(g, gens));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& e : seen) out.emplace_back(g, e);
    return out;
}

}  // namespace nacurve
