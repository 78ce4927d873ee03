#ifndef NACURVE_PERM_GROUP_HPP
#define NACURVE_PERM_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nacurve/rational.hpp"

namespace nacurve {

// One-line permutation on {0..degree-1}; images stored directly.
using Perm = std::vector<uint8_t>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a[b[x]]
Perm perm_inverse(const Perm& a);

inline constexpr int kMaxDegree = 16;
inline constexpr int kMaxOrder = 4096;  // desk-scale cap

// Finite permutation group given by generators; elements are enumerated
// breadth-first from the identity (index 0), applying generators in input order.
// That enumeration order is the contract for element indices in JSON documents.
class FiniteGroup {
public:
    FiniteGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Perm>& generators() const { return generators_; }
    const Perm& element(int i) const { return elements_[i]; }
    int index_of(const Perm& p) const;  // -1 when not an element

    int mul(int i, int j) const { return mul_[static_cast<size_t>(i) * size() + j]; }
    int inv(int i) const { return inv_[i]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

    int order_of(int i) const;
    int exponent() const;
    bool is_p_group(const Int& p) const;

    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of(int i) const { return class_of_[i]; }
    const std::vector<int>& class_elements(int c) const { return classes_[c]; }
    int class_rep(int c) const { return classes_[c].front(); }

private:
    int degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::map<Perm, int> index_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup as a sorted list of element indices; closed, with identity.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> elements);  // validates closure

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool contains(int i) const;
    bool is_whole_group() const { return size() == parent_->size(); }
    int index_in_parent() const { return parent_->size() / size(); }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elems_ == b.elems_;
    }

private:
    GroupPtr parent_;
    std::vector<int> elems_;
};

// Closure of a generating set (empty set gives the trivial subgroup).
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);

Subgroup conjugate_subgroup(const Subgroup& h, int g);

// Exists g in G with g H1 g^-1 = H2 (brute force over G).
bool are_conjugate(const Subgroup& h1, const Subgroup& h2);

// Exists g in G with g H g^-1 a subset of K.
bool is_conjugate_into(const Subgroup& h, const Subgroup& k);

bool is_subset(const Subgroup& h, const Subgroup& k);
bool is_normal_in(const Subgroup& n, const Subgroup& g);

// |H| is a power of p.
bool is_p_group(const Subgroup& h, const Int& p);

// All subgroups, by closure under one-generator extensions (desk-scale groups).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

}  // namespace nacurve

#endif
