#include "nacurve/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nacurve {

int euler_phi(int m) {
    int result = m, n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<Rational>;  // ascending degree

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// quotient of num by a monic-leading den; remainder returned through num
Poly poly_divmod(Poly& num, const Poly& den) {
    Poly q;
    if (den.empty()) throw std::logic_error("poly_divmod: zero divisor");
    if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size()) {
        Rational factor = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = factor;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
        trim(num);
    }
    return q;
}

}  // namespace

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(int m) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    // Phi_d for ascending divisors d of m: (x^d - 1) / prod of earlier Phi_e, e | d
    for (int d = 1; d <= m; ++d) {
        if (m % d || cache.count(d)) continue;
        Poly num(d + 1, Rational(0));
        num[0] = Rational(-1);
        num[d] = Rational(1);
        for (int e = 1; e < d; ++e) {
            if (d % e) continue;
            Poly quotient = poly_divmod(num, cache.at(e));
            num = std::move(quotient);
        }
        trim(num);
        cache[d] = std::move(num);
    }
    return cache.at(m);
}

Cyclotomic::Cyclotomic(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    c_.assign(static_cast<size_t>(euler_phi(m)), Rational(0));
}

Cyclotomic Cyclotomic::from_rational(int m, const Rational& r) {
    Cyclotomic z(m);
    if (!z.c_.empty()) z.c_[0] = r;
    else if (!r.is_zero())
        throw std::logic_error("cyclotomic: phi(m) = 0 impossible");
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(int m, std::vector<Rational> raw) {
    Cyclotomic z(m);
    trim(raw);
    const Poly& phi = cyclotomic_polynomial(m);
    if (raw.size() >= phi.size()) poly_divmod(raw, phi);  // keep remainder
    for (size_t i = 0; i < raw.size(); ++i) z.c_[i] = raw[i];
    return z;
}

Cyclotomic Cyclotomic::root_power(int m, long k) {
    long r = k % m;
    if (r < 0) r += m;
    std::vector<Rational> raw(static_cast<size_t>(r) + 1, Rational(0));
    raw[static_cast<size_t>(r)] = Rational(1);
    return from_coeffs(m, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic: value is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

static void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic: mixed orders " + std::to_string(a.order()) +
                                    " and " + std::to_string(b.order()));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    if (a.c_.empty()) return a;
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclotomic::from_coeffs(a.m_, std::move(prod));
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace nacurve
