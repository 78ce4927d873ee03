#ifndef NACURVE_CHARACTER_HPP
#define NACURVE_CHARACTER_HPP

#include <string>
#include <vector>

#include "nacurve/cyclotomic.hpp"
#include "nacurve/perm_group.hpp"

namespace nacurve {

// Class function on a finite group with exact cyclotomic values. Characters,
// virtual characters and the zero class function all live here; genuineness
// (positive integral degree, integral positive self-pairing) is a separate
// validation applied where an operation requires an actual character.
class Character {
public:
    // Values listed per conjugacy class of the group, in the group's class order.
    Character(GroupPtr group, int order, std::vector<Cyclotomic> values_by_class);

    // Values listed against explicit class representatives (element indices);
    // every class must be covered exactly once.
    static Character from_table(GroupPtr group, int order, const std::vector<int>& class_reps,
                                std::vector<Cyclotomic> values);

    static Character zero(GroupPtr group, int order);
    static Character trivial(GroupPtr group, int order);

    const GroupPtr& group() const { return group_; }
    int order() const { return m_; }
    const Cyclotomic& value_at_class(int c) const { return values_[c]; }
    const Cyclotomic& value_of(int element) const { return values_[group_->class_of(element)]; }
    const Cyclotomic& value_at_inverse(int element) const {
        return values_[group_->class_of(group_->inv(element))];
    }

    bool is_zero() const;
    // chi(1), which for genuine characters is the degree.
    const Cyclotomic& degree_value() const { return values_[group_->class_of(0)]; }

    friend bool operator==(const Character& a, const Character& b) {
        return a.group_ == b.group_ && a.m_ == b.m_ && a.values_ == b.values_;
    }

private:
    GroupPtr group_;
    int m_;
    std::vector<Cyclotomic> values_;  // indexed by class id
};

// (1/|G|) sum over g of chi(g) psi(g^-1), which must land in Q; throws
// std::runtime_error("input is not a virtual character pair") otherwise.
Rational inner_product(const Character& chi, const Character& psi);

// <chi, chi> == 1.
bool is_irreducible(const Character& chi);

// chi(h) == chi(1) for all h in the subgroup.
bool trivial_on(const Character& chi, const Subgroup& h);

// <tau, v> as a nonnegative integer; throws std::runtime_error when the inner
// product is not a nonnegative integer.
long isotypic_dim(const Character& tau, const Character& v);

// Degree is a positive rational integer and <chi,chi> is a positive integer.
bool is_genuine_character(const Character& chi);

}  // namespace nacurve

#endif
