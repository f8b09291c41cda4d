#pragma once

/*
 * Bernoulli numbers in the topologist's indexing: bernoulli(n) is the
 * absolute value of the classical b_{2n}, so every value is positive and
 *
 *   B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, B_4 = 1/30, B_5 = 5/66, ...
 *
 * This is the convention the genus generating series and the boundary
 * sphere group order formula are stated in.  The classical (analyst's)
 * numbers are computed from the defining recurrence
 *
 *   b_0 = 1,   b_m = -(1/(m+1)) * sum_{i<m} C(m+1, i) b_i.
 */

#include "scalcurv/rational.hpp"

#include <stdexcept>
#include <vector>

namespace scalcurv {

namespace detail {

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace detail

inline Rational bernoulli(unsigned n) {
    if (n == 0) throw std::invalid_argument("bernoulli: index must be >= 1");
    unsigned m = 2 * n;
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        Rational s = 0;
        for (unsigned j = 0; j < i; ++j) s += Rational(detail::binomial(i + 1, j)) * b[j];
        b[i] = -s / Rational(Integer(i) + 1);
    }
    return abs(b[m]);
}

}  // namespace scalcurv
