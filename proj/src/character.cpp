#include "nacurve/character.hpp"

#include <stdexcept>

namespace nacurve {

Character::Character(GroupPtr group, int order, std::vector<Cyclotomic> values_by_class)
    : group_(std::move(group)), m_(order), values_(std::move(values_by_class)) {
    if (!group_) throw std::invalid_argument("character: null group");
    if (static_cast<int>(values_.size()) != group_->class_count())
        throw std::invalid_argument("character: expected one value per conjugacy class (" +
                                    std::to_string(group_->class_count()) + "), got " +
                                    std::to_string(values_.size()));
    for (const auto& v : values_)
        if (v.order() != m_)
            throw std::invalid_argument("character: value with mismatched cyclotomic order");
}

Character Character::from_table(GroupPtr group, int order, const std::vector<int>& class_reps,
                                std::vector<Cyclotomic> values) {
    if (!group) throw std::invalid_argument("character: null group");
    if (class_reps.size() != values.size())
        throw std::invalid_argument("character: class representative / value count mismatch");
    std::vector<Cyclotomic> by_class(static_cast<size_t>(group->class_count()), Cyclotomic(order));
    std::vector<char> seen(group->class_count(), 0);
    for (size_t i = 0; i < class_reps.size(); ++i) {
        int rep = class_reps[i];
        if (rep < 0 || rep >= group->size())
            throw std::invalid_argument("character: class representative out of range");
        int c = group->class_of(rep);
        if (seen[c]) throw std::invalid_argument("character: duplicate class representative");
        seen[c] = 1;
        by_class[c] = std::move(values[i]);
    }
    for (int c = 0; c < group->class_count(); ++c)
        if (!seen[c])
            throw std::invalid_argument("character: class of element " +
                                        std::to_string(group->class_rep(c)) + " has no value");
    return Character(std::move(group), order, std::move(by_class));
}

Character Character::zero(GroupPtr group, int order) {
    std::vector<Cyclotomic> v(static_cast<size_t>(group->class_count()), Cyclotomic(order));
    return Character(std::move(group), order, std::move(v));
}

Character Character::trivial(GroupPtr group, int order) {
    std::vector<Cyclotomic> v(static_cast<size_t>(group->class_count()),
                              Cyclotomic::from_rational(order, Rational(1)));
    return Character(std::move(group), order, std::move(v));
}

bool Character::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

Rational inner_product(const Character& chi, const Character& psi) {
    if (chi.group() != psi.group())
        throw std::invalid_argument("inner_product: characters of different groups");
    const auto& g = *chi.group();
    Cyclotomic acc(chi.order());
    for (int c = 0; c < g.class_count(); ++c) {
        int rep = g.class_rep(c);
        Cyclotomic term = chi.value_at_class(c) * psi.value_at_inverse(rep);
        Cyclotomic weighted =
            Cyclotomic::from_rational(chi.order(), Rational(static_cast<long>(g.class_elements(c).size())));
        acc += weighted * term;
    }
    if (!acc.is_rational())
        throw std::runtime_error("inner_product: input is not a virtual character pair");
    return acc.rational_value() / Rational(g.size());
}

bool is_irreducible(const Character& chi) { return inner_product(chi, chi) == Rational(1); }

bool trivial_on(const Character& chi, const Subgroup& h) {
    if (chi.group() != h.parent())
        throw std::invalid_argument("trivial_on: subgroup of a different group");
    const Cyclotomic& at_identity = chi.degree_value();
    for (int x : h.elements())
        if (chi.value_of(x) != at_identity) return false;
    return true;
}

long isotypic_dim(const Character& tau, const Character& v) {
    Rational ip = inner_product(tau, v);
    if (!ip.is_nonneg_integer())
        throw std::runtime_error("isotypic_dim: inner product " + ip.str() +
                                 " is not a nonnegative integer");
    return ip.num().get_si();
}

bool is_genuine_character(const Character& chi) {
    const Cyclotomic& deg = chi.degree_value();
    if (!deg.is_rational()) return false;
    Rational d = deg.rational_value();
    if (!d.is_integer() || !(d > Rational(0))) return false;
    try {
        Rational norm = inner_product(chi, chi);
        return norm.is_integer() && norm > Rational(0);
    } catch (const std::runtime_error&) {
        return false;
    }
}

}  // namespace nacurve
