#ifndef NACURVE_RATIONAL_HPP
#define NACURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace nacurve {

using Int = mpz_class;

// Exact rational number, always in lowest terms with positive denominator.
// All arithmetic is exact; there is no floating point anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Parses "a/b" or "a" (optionally signed). Throws std::invalid_argument on
    // malformed input or zero denominator.
    static Rational parse(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && v_ >= 0; }

    // Canonical textual form: "a" when integral, "a/b" otherwise.
    std::string str() const;

    // Least integer >= value (exact).
    Int ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;  // kept canonical by construction
};

// Additive valuation value: a rational or +infinity. Infinity is absorbing for
// addition and maximal for comparison.
class Valuation {
public:
    Valuation(Rational v) : v_(std::move(v)) {}  // NOLINT
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return !v_.has_value(); }
    // The finite value; throws std::logic_error when infinite.
    const Rational& finite() const;

    Valuation operator+(const Valuation& o) const;

    friend bool operator==(const Valuation& a, const Valuation& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b);
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    // Comparison against a finite rational threshold (infinity passes).
    bool at_least(const Rational& r) const { return is_infinite() || *v_ >= r; }

    static Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

    // "inf" or the rational in canonical form.
    std::string str() const;

private:
    Valuation() = default;
    std::optional<Rational> v_;
};

// True if p is a (positive) prime. Deterministic for anything desk-scale.
bool is_prime(const Int& p);

// Exponent of the prime p in q, as an additive valuation; vp(0) = infinity.
// Throws std::invalid_argument when p is not prime.
Valuation vp(const Rational& q, const Int& p);

// Exponent of p in a nonzero integer (helper; n must be nonzero).
Int int_ord(const Int& n, const Int& p);

// p^e for e >= 0.
Int int_pow(const Int& p, const Int& e);

// Inverse of a modulo m (gcd(a, m) = 1 required; throws std::invalid_argument otherwise).
Int mod_inverse(const Int& a, const Int& m);

// Least nonnegative residue of a/b modulo m, for gcd(b, m) = 1.
Int mod_reduce(const Rational& q, const Int& m);

}  // namespace nacurve

#endif
