#include <doctest.h>

#include "nacurve/character.hpp"
#include "nacurve/perm_group.hpp"
#include "test_util.hpp"

using namespace nacurve;
using namespace nacurve::testutil;

static const char* kFixtures[] = {"z2.json", "z4.json", "v4.json",
                                  "s3.json", "d4.json", "q8.json"};

TEST_CASE("fixture groups enumerate to the expected orders and class counts") {
    for (const char* file : kFixtures) {
        GroupFixture f = load_group_fixture(file);
        INFO(f.name);
        CHECK(f.group->size() == f.expected_order);
        CHECK(f.group->class_count() == f.expected_class_count);
        CHECK(static_cast<long>(f.characters.size()) == f.expected_class_count);
        // sum of squared degrees = |G|
        Rational sum(0);
        for (const auto& [name, chi] : f.characters) {
            Rational d = chi.degree_value().rational_value();
            sum += d * d;
        }
        CHECK(sum == Rational(f.expected_order));
    }
}

TEST_CASE("character orthogonality is exact on every fixture table") {
    for (const char* file : kFixtures) {
        GroupFixture f = load_group_fixture(file);
        INFO(f.name);
        for (size_t i = 0; i < f.characters.size(); ++i)
            for (size_t j = 0; j < f.characters.size(); ++j) {
                Rational ip = inner_product(f.characters[i].second, f.characters[j].second);
                CHECK(ip == Rational(i == j ? 1 : 0));
            }
        for (const auto& [name, chi] : f.characters) {
            CHECK(is_irreducible(chi));
            CHECK(is_genuine_character(chi));
        }
    }
}

TEST_CASE("subgroup_generated") {
    GroupFixture s3 = load_group_fixture("s3.json");
    CHECK(subgroup_generated(s3.group, {}).size() == 1);
    CHECK(subgroup_generated(s3.group, {1, 2}).size() == 6);  // the two generators
    // an order-2 element generates a size-2 subgroup
    int transposition = s3.group->index_of({1, 0, 2});
    REQUIRE(transposition >= 0);
    CHECK(subgroup_generated(s3.group, {transposition}).size() == 2);
}

TEST_CASE("are_conjugate") {
    GroupFixture s3 = load_group_fixture("s3.json");
    int t12 = s3.group->index_of({1, 0, 2});
    int t13 = s3.group->index_of({2, 1, 0});
    int r = s3.group->index_of({1, 2, 0});
    REQUIRE(t12 >= 0);
    REQUIRE(t13 >= 0);
    REQUIRE(r >= 0);
    Subgroup h1 = subgroup_generated(s3.group, {t12});
    Subgroup h2 = subgroup_generated(s3.group, {t13});
    Subgroup c3 = subgroup_generated(s3.group, {r});
    Subgroup full(s3.group, {0, 1, 2, 3, 4, 5});
    CHECK(are_conjugate(h1, h1));
    CHECK(are_conjugate(h1, h2));
    CHECK_FALSE(are_conjugate(h1, c3));
    CHECK(is_conjugate_into(h1, full));
    CHECK_FALSE(is_conjugate_into(c3, h1));
}

TEST_CASE("are_conjugate is an equivalence relation on all subgroups") {
    for (const char* file : kFixtures) {
        GroupFixture f = load_group_fixture(file);
        INFO(f.name);
        auto subs = all_subgroups(f.group);
        for (const auto& a : subs) CHECK(are_conjugate(a, a));
        for (const auto& a : subs)
            for (const auto& b : subs) CHECK(are_conjugate(a, b) == are_conjugate(b, a));
        for (const auto& a : subs)
            for (const auto& b : subs)
                for (const auto& c : subs)
                    if (are_conjugate(a, b) && are_conjugate(b, c)) CHECK(are_conjugate(a, c));
    }
}

TEST_CASE("is_p_group") {
    GroupFixture z4 = load_group_fixture("z4.json");
    GroupFixture s3 = load_group_fixture("s3.json");
    CHECK(is_p_group(subgroup_generated(z4.group, {}), 2));  // trivial = p^0
    CHECK(is_p_group(Subgroup(z4.group, {0, 1, 2, 3}), 2));
    CHECK_FALSE(is_p_group(Subgroup(s3.group, {0, 1, 2, 3, 4, 5}), 3));
    CHECK_THROWS_AS(is_p_group(subgroup_generated(z4.group, {}), 6), std::invalid_argument);

    // every subgroup of a p-group is a p-group (Lagrange)
    for (const char* file : {"z2.json", "z4.json", "v4.json", "d4.json", "q8.json"})
        for (const auto& h : all_subgroups(load_group_fixture(file).group))
            CHECK(is_p_group(h, 2));
}

TEST_CASE("inner products on small groups") {
    GroupFixture z2 = load_group_fixture("z2.json");
    const Character& triv = z2.characters[0].second;
    const Character& sign = z2.characters[1].second;
    CHECK(inner_product(triv, triv) == Rational(1));
    CHECK(inner_product(sign, triv) == Rational(0));
    // regular character of Z/2: degree 2, zero off the identity
    Character regular = Character::from_table(
        z2.group, 2, {0, 1},
        {Cyclotomic::from_rational(2, Rational(2)), Cyclotomic::from_rational(2, Rational(0))});
    CHECK(inner_product(regular, sign) == Rational(1));
    CHECK_FALSE(is_irreducible(regular));
    CHECK(is_genuine_character(regular));

    CHECK(isotypic_dim(triv, regular) == 1);
    Character two_sign = Character::from_table(
        z2.group, 2, {0, 1},
        {Cyclotomic::from_rational(2, Rational(2)), Cyclotomic::from_rational(2, Rational(-2))});
    CHECK(isotypic_dim(sign, two_sign) == 2);

    GroupFixture s3 = load_group_fixture("s3.json");
    const Character& std_char = s3.characters[2].second;
    Character reg_s3 = Character::from_table(
        s3.group, 6, {0, 1, 2},
        {Cyclotomic::from_rational(6, Rational(6)), Cyclotomic::from_rational(6, Rational(0)),
         Cyclotomic::from_rational(6, Rational(0))});
    CHECK(isotypic_dim(std_char, reg_s3) == 2);  // multiplicity = degree
}

TEST_CASE("trivial_on") {
    GroupFixture z2 = load_group_fixture("z2.json");
    const Character& triv = z2.characters[0].second;
    const Character& sign = z2.characters[1].second;
    Subgroup trivial = subgroup_generated(z2.group, {});
    Subgroup full(z2.group, {0, 1});
    CHECK(trivial_on(sign, trivial));
    CHECK_FALSE(trivial_on(sign, full));
    CHECK(trivial_on(triv, full));
}

TEST_CASE("non-rational inner product is a data error") {
    GroupFixture z4 = load_group_fixture("z4.json");
    // class function with a single zeta_4 value: <phi, triv> = zeta/4, not rational
    std::vector<Cyclotomic> vals{Cyclotomic(4), Cyclotomic::root_power(4, 1), Cyclotomic(4),
                                 Cyclotomic(4)};
    Character phi(z4.group, 4, std::move(vals));
    CHECK_THROWS_AS(inner_product(phi, z4.characters[0].second), std::runtime_error);
    CHECK_FALSE(is_genuine_character(phi));
}

TEST_CASE("isotypic_dim rejects non-integral multiplicities") {
    GroupFixture z2 = load_group_fixture("z2.json");
    Character half = Character::from_table(
        z2.group, 2, {0, 1},
        {Cyclotomic::from_rational(2, Rational(1, 2)), Cyclotomic::from_rational(2, Rational(0))});
    CHECK_THROWS_AS(isotypic_dim(z2.characters[0].second, half), std::runtime_error);
}

TEST_CASE("cyclotomic arithmetic") {
    Cyclotomic z = Cyclotomic::root_power(4, 1);
    CHECK(z * z == Cyclotomic::from_rational(4, Rational(-1)));  // zeta_4^2 = -1
    Cyclotomic pow = Cyclotomic::from_rational(4, Rational(1));
    for (int i = 0; i < 4; ++i) pow = pow * z;
    CHECK(pow == Cyclotomic::from_rational(4, Rational(1)));  // zeta^m = 1

    // Phi_m(zeta_m) = 0
    for (int m : {1, 2, 3, 4, 6, 8, 12}) {
        const auto& phi = Cyclotomic::cyclotomic_polynomial(m);
        Cyclotomic acc(m);
        for (size_t i = 0; i < phi.size(); ++i)
            acc += Cyclotomic::from_rational(m, phi[i]) * Cyclotomic::root_power(m, static_cast<long>(i));
        CHECK(acc.is_zero());
        CHECK(static_cast<int>(phi.size()) == euler_phi(m) + 1);
    }

    // reduction is idempotent
    Cyclotomic w = Cyclotomic::from_coeffs(12, {Rational(1), Rational(2), Rational(3), Rational(4),
                                                Rational(5), Rational(6), Rational(7)});
    CHECK(Cyclotomic::from_coeffs(12, w.coeffs()) == w);
    CHECK_THROWS_AS(Cyclotomic::root_power(4, 1) + Cyclotomic::root_power(8, 1),
                    std::invalid_argument);
}

TEST_CASE("character table validation") {
    GroupFixture z4 = load_group_fixture("z4.json");
    std::vector<Cyclotomic> two{Cyclotomic(4), Cyclotomic(4)};
    CHECK_THROWS_AS(Character::from_table(z4.group, 4, {0, 0},
                                          {Cyclotomic(4), Cyclotomic(4)}),
                    std::invalid_argument);  // duplicate class
    CHECK_THROWS_AS(Character::from_table(z4.group, 4, {0, 1}, std::move(two)),
                    std::invalid_argument);  // classes left uncovered
}

TEST_CASE("subgroup validation") {
    GroupFixture z4 = load_group_fixture("z4.json");
    CHECK_THROWS_AS(Subgroup(z4.group, {0, 1}), std::invalid_argument);  // not closed: g^2 missing
    CHECK_THROWS_AS(Subgroup(z4.group, {1, 2, 3}), std::invalid_argument);  // no identity
    CHECK_THROWS_AS(Subgroup(z4.group, {0, 9}), std::invalid_argument);
    CHECK(Subgroup(z4.group, {0, 2}).size() == 2);
}

TEST_CASE("group enumeration caps") {
    // <16-cycle, transposition> generates S_16; the closure must hit the cap
    Perm cycle(16), swap = perm_identity(16);
    for (int i = 0; i < 16; ++i) cycle[i] = static_cast<uint8_t>((i + 1) % 16);
    std::swap(swap[0], swap[1]);
    CHECK_THROWS_AS(FiniteGroup(16, {cycle, swap}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup(17, {}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup(3, {{0, 0, 1}}), std::invalid_argument);  // not a permutation
}
