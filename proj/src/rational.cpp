#include "nacurve/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nacurve {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& Valuation::finite() const {
    if (!v_) throw std::logic_error("valuation: infinite value has no finite part");
    return *v_;
}

Valuation Valuation::operator+(const Valuation& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Valuation(*v_ + *o.v_);
}

bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.v_ < *b.v_;
}

std::string Valuation::str() const { return v_ ? v_->str() : "inf"; }

bool is_prime(const Int& p) {
    if (p < 2) return false;
    // 2 = definitely prime, 1 = probable (no composite ever passes 40 rounds at desk scale)
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

Int int_ord(const Int& n, const Int& p) {
    if (n == 0) throw std::logic_error("int_ord: zero input");
    Int reduced;
    auto count = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Int(static_cast<unsigned long>(count));
}

Valuation vp(const Rational& q, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("vp: p = " + p.get_str() + " is not prime");
    if (q.is_zero()) return Valuation::infinity();
    return Valuation(Rational(int_ord(q.num(), p) - int_ord(q.den(), p)));
}

Int int_pow(const Int& p, const Int& e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    if (!e.fits_ulong_p()) throw std::invalid_argument("int_pow: exponent too large");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e.get_ui());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible");
    return r;
}

Int mod_reduce(const Rational& q, const Int& m) {
    Int inv = mod_inverse(q.den(), m);
    Int r;
    Int prod = q.num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace nacurve
