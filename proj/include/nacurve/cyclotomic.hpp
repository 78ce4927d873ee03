#ifndef NACURVE_CYCLOTOMIC_HPP
#define NACURVE_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "nacurve/rational.hpp"

namespace nacurve {

// Element of Q(zeta_m), stored as a polynomial in zeta_m reduced modulo the m-th
// cyclotomic polynomial: exactly deg(Phi_m) = phi(m) rational coefficients, basis
// 1, zeta, ..., zeta^(phi(m)-1). Equality is coefficient-wise; all arithmetic is
// exact. Mixing different orders m throws std::invalid_argument.
class Cyclotomic {
public:
    explicit Cyclotomic(int m);  // zero of Q(zeta_m)

    static Cyclotomic from_rational(int m, const Rational& r);
    // zeta_m^k (k may be any integer; reduced mod m then mod Phi_m).
    static Cyclotomic root_power(int m, long k);
    // Arbitrary coefficient list (any length), reduced mod Phi_m.
    static Cyclotomic from_coeffs(int m, std::vector<Rational> raw);

    int order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // only the constant coefficient may be nonzero
    // The value as a rational; throws std::domain_error when not rational.
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;

    // Coefficients of Phi_m, ascending degree, monic (cached).
    static const std::vector<Rational>& cyclotomic_polynomial(int m);

private:
    int m_;
    std::vector<Rational> c_;  // size = deg Phi_m
};

int euler_phi(int m);

}  // namespace nacurve

#endif
