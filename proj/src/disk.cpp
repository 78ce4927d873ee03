#include "nacurve/disk.hpp"

#include <algorithm>
#include <stdexcept>

namespace nacurve {

ClosedDisk::ClosedDisk(Rational center, Rational radius_val, Int prime)
    : center_(std::move(center)), radius_val_(std::move(radius_val)), prime_(std::move(prime)) {
    if (!is_prime(prime_))
        throw std::invalid_argument("disk: " + prime_.get_str() + " is not prime");
    if (!(radius_val_ > Rational(0)))
        throw std::invalid_argument("disk: radius valuation must be > 0, got " + radius_val_.str());
    if (mpz_divisible_p(center_.den().get_mpz_t(), prime_.get_mpz_t()))
        throw std::invalid_argument("disk: center " + center_.str() +
                                    " has denominator divisible by p = " + prime_.get_str());
}

bool ClosedDisk::lies_in_open_unit_disk() const {
    return vp(center_, prime_) > Valuation(Rational(0));
}

std::string ClosedDisk::str() const { return "D(" + center_.str() + ", " + radius_val_.str() + ")"; }

ClosedDisk canonicalize(const ClosedDisk& d) {
    Int modulus = int_pow(d.prime(), d.radius_val().ceil());
    return ClosedDisk(Rational(mod_reduce(d.center(), modulus)), d.radius_val(), d.prime());
}

bool same_disk(const ClosedDisk& a, const ClosedDisk& b) {
    if (a.prime() != b.prime()) return false;
    if (a.radius_val() != b.radius_val()) return false;
    ClosedDisk ca = canonicalize(a), cb = canonicalize(b);
    return ca.center() == cb.center();
}

bool canonical_less(const ClosedDisk& a, const ClosedDisk& b) {
    if (a.radius_val() != b.radius_val()) return a.radius_val() < b.radius_val();
    return a.center() < b.center();
}

static void require_same_prime(const ClosedDisk& a, const ClosedDisk& b, const char* op) {
    if (a.prime() != b.prime())
        throw std::invalid_argument(std::string(op) + ": mismatched primes " +
                                    a.prime().get_str() + " and " + b.prime().get_str());
}

bool contains(const ClosedDisk& outer, const ClosedDisk& inner) {
    require_same_prime(outer, inner, "contains");
    return vp(outer.center() - inner.center(), outer.prime()).at_least(outer.radius_val()) &&
           inner.radius_val() >= outer.radius_val();
}

ClosedDisk join(const ClosedDisk& a, const ClosedDisk& b) {
    require_same_prime(a, b, "join");
    Rational r = std::min(a.radius_val(), b.radius_val());
    Valuation sep = vp(a.center() - b.center(), a.prime());
    if (!sep.is_infinite() && sep.finite() < r) r = sep.finite();
    if (!(r > Rational(0)))
        throw std::domain_error("join: disks have no common model inside the open unit disk");
    return canonicalize(ClosedDisk(a.center(), r, a.prime()));
}

ClosedDisk enclosing(const std::vector<ClosedDisk>& disks) {
    if (disks.empty()) throw std::invalid_argument("enclosing: empty collection");
    ClosedDisk acc = disks.front();
    for (size_t i = 1; i < disks.size(); ++i) acc = join(acc, disks[i]);
    return canonicalize(acc);
}

std::vector<ClosedDisk> canonical_set(const std::vector<ClosedDisk>& disks) {
    std::vector<ClosedDisk> out;
    if (disks.empty()) return out;
    out.reserve(disks.size());
    for (const auto& d : disks) {
        if (d.prime() != disks.front().prime())
            throw std::invalid_argument("disk collection: mixed primes");
        ClosedDisk c = canonicalize(d);
        bool dup = false;
        for (const auto& e : out)
            if (e.radius_val() == c.radius_val() && e.center() == c.center()) { dup = true; break; }
        if (!dup) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<ClosedDisk> closure(const std::vector<ClosedDisk>& disks) {
    if (disks.empty()) throw std::invalid_argument("closure: empty collection");
    std::vector<ClosedDisk> set = canonical_set(disks);
    // Saturate under pairwise joins; each pass only needs to pair new elements
    // against everything, but at desk scale a full rescan is simplest.
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = set.size();
        for (size_t i = 0; i < n && !grew; ++i) {
            for (size_t j = i + 1; j < n && !grew; ++j) {
                ClosedDisk jn = join(set[i], set[j]);
                bool present = false;
                for (const auto& e : set)
                    if (e.radius_val() == jn.radius_val() && e.center() == jn.center()) {
                        present = true;
                        break;
                    }
                if (!present) {
                    set.push_back(jn);
                    grew = true;
                }
            }
        }
    }
    std::sort(set.begin(), set.end(), canonical_less);
    return set;
}

}  // namespace nacurve
