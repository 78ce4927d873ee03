#ifndef NACURVE_DISK_HPP
#define NACURVE_DISK_HPP

#include <vector>

#include "nacurve/rational.hpp"

namespace nacurve {

// A closed sub-disk of the open p-adic unit disk: {x : v_p(x - center) >= radius_val}.
//
// Construction enforces radius_val > 0 and that the denominator of the center is
// prime to p (the center is then an exactly representable p-adic integer). Whether
// the disk actually sits inside the open unit disk is an operational question:
// joins that escape raise a domain error, and lies_in_open_unit_disk() reports the
// membership test directly.
class ClosedDisk {
public:
    ClosedDisk(Rational center, Rational radius_val, Int prime);

    const Rational& center() const { return center_; }
    const Rational& radius_val() const { return radius_val_; }
    const Int& prime() const { return prime_; }

    // v_p(center) > 0, i.e. every point of the disk has positive valuation.
    bool lies_in_open_unit_disk() const;

    std::string str() const;  // "D(center, v)"

private:
    Rational center_;
    Rational radius_val_;
    Int prime_;
};

// Unique canonical representative: the center is replaced by its least nonnegative
// integer residue modulo p^ceil(radius_val). Two disks are equal as point sets iff
// their canonical forms agree field-wise.
ClosedDisk canonicalize(const ClosedDisk& d);

bool same_disk(const ClosedDisk& a, const ClosedDisk& b);

// Ordering on canonical forms: by (radius_val, canonical center). Inputs must be
// canonical and share a prime; used for deterministic vertex order everywhere.
bool canonical_less(const ClosedDisk& a, const ClosedDisk& b);

// Ultrametric containment: outer ⊇ inner.
bool contains(const ClosedDisk& outer, const ClosedDisk& inner);

// Minimal closed disk containing both. Throws std::domain_error when the result
// would have radius_val <= 0 (no common model inside the open unit disk).
ClosedDisk join(const ClosedDisk& a, const ClosedDisk& b);

// Fold of join over a nonempty collection; independent of the fold order.
ClosedDisk enclosing(const std::vector<ClosedDisk>& disks);

// Minimal closed superset of S: saturation under pairwise joins, deduplicated via
// canonical forms, returned in canonical order. Pairwise saturation suffices by
// the ultrametric property (tested against the brute-force all-subsets oracle).
std::vector<ClosedDisk> closure(const std::vector<ClosedDisk>& disks);

// Canonicalize, deduplicate and sort a collection (no saturation).
std::vector<ClosedDisk> canonical_set(const std::vector<ClosedDisk>& disks);

}  // namespace nacurve

#endif
