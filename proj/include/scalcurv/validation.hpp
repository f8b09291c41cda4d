#pragma once

/*
 * Admissibility checks for the invariants.
 *
 * validate_kreck_stolz_conditions: a closed manifold M is in scope for the
 * s-invariant when it is spin, of dimension 4k-1 >= 7, admits a psc
 * metric, and its rational Pontrjagin classes vanish.
 *
 * validate_ks_product: a product M x N is in scope for the extended
 * invariant when M satisfies the above, N is a closed spin manifold of
 * dimension 4l >= 4 with nonzero Ahat genus, and dim M = 4(k-l)-1 with
 * k-l >= 2.  The condition H^1(M x N; Z_2) = 0 is not modeled by the
 * characteristic data and is recorded as a warning (a user assertion).
 */

#include "scalcurv/genus.hpp"
#include "scalcurv/manifold.hpp"

#include <string>
#include <vector>

namespace scalcurv {

struct ValidationReport {
    std::vector<std::string> failures;
    std::vector<std::string> warnings;

    bool passed() const { return failures.empty(); }

    std::string summary() const {
        if (passed()) return "PASS";
        std::string s = "FAIL: ";
        for (std::size_t i = 0; i < failures.size(); ++i) {
            if (i) s += "; ";
            s += failures[i];
        }
        return s;
    }
};

inline ValidationReport validate_kreck_stolz_conditions(const CharacteristicData& m) {
    ValidationReport r;
    auto fail = [&](std::string msg) {
        r.failures.push_back("'" + m.name + "': " + std::move(msg));
    };
    if (m.dimension % 4 != 3) fail("dimension must be congruent to 3 modulo 4");
    if (m.dimension < 7) fail("dimension must be at least 7");
    if (!m.is_spin) fail("manifold must be spin");
    if (!m.admits_psc) fail("manifold must admit a metric of positive scalar curvature");
    if (!m.rational_pontrjagin_classes_vanish)
        fail("rational Pontrjagin classes must vanish");
    return r;
}

inline ValidationReport validate_ks_product(const CharacteristicData& m,
                                            const CharacteristicData& n) {
    ValidationReport r = validate_kreck_stolz_conditions(m);
    auto fail = [&](std::string msg) {
        r.failures.push_back("'" + n.name + "': " + std::move(msg));
    };
    if (n.dimension % 4 != 0 || n.dimension == 0) {
        fail("second factor must have dimension a positive multiple of 4");
    } else {
        if (genus_of(SeriesKind::ahat, n).is_zero())
            fail("second factor must have nonzero Ahat genus");
    }
    if (!n.is_spin) fail("second factor must be spin");
    // dim(M x N) = 4k-1 and dim N = 4l force k-l = (dim M + 1)/4; the
    // invariant needs k-l >= 2, i.e. dim M >= 7 (restated here so the
    // product-level constraint is named even when M alone was rejected).
    if (m.dimension % 4 == 3 && m.dimension < 7)
        r.failures.push_back("product: k - l must be at least 2");
    r.warnings.push_back(
        "H^1(" + m.name + " x " + n.name +
        "; Z_2) = 0 is assumed, not verified (not derivable from characteristic data)");
    return r;
}

}  // namespace scalcurv
