#pragma once

/*
 * Multiplicative sequences and genera.
 *
 * A genus is determined by a characteristic power series
 * Q(z) = 1 + q_1 z + q_2 z^2 + ... ; its multiplicative sequence
 * {K_k(p_1,...,p_k)} is defined by
 *
 *   prod_i Q(x_i) = 1 + K_1(p_1) + K_2(p_1,p_2) + ...
 *
 * where the p_j are the elementary symmetric functions of the formal
 * roots x_i.  This header computes K_k by the closed route
 *
 *   K = exp( sum_m l_m S_m ),
 *
 * with l_m the coefficients of log Q and S_m the power sums of the roots,
 * rewritten in the p_j via Newton's identities.  An independent expansion
 * over explicit monomials (used to cross-check this one) lives in
 * report.hpp.
 *
 * Built-in series, in the convention where B_n = bernoulli(n) > 0:
 *
 *   Ahat:  Q(z) = (sqrt(z)/2) / sinh(sqrt(z)/2),
 *          q_n = (-1)^n * 2 * (2^{2n-1} - 1) * B_n / ((2n)! * 4^n)
 *   L:     Q(z) = sqrt(z) / tanh(sqrt(z)),
 *          q_n = (-1)^{n-1} * 2^{2n} * B_n / (2n)!
 */

#include "scalcurv/bernoulli.hpp"
#include "scalcurv/manifold.hpp"
#include "scalcurv/partition_polynomial.hpp"
#include "scalcurv/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scalcurv {

inline std::vector<Rational> ahat_series_coefficients(unsigned k) {
    std::vector<Rational> q;
    q.reserve(k);
    for (unsigned n = 1; n <= k; ++n) {
        Rational v = Rational(2) * Rational((Integer(1) << (2 * n - 1)) - 1) *
                     bernoulli(n) /
                     Rational(detail::factorial(2 * n) * (Integer(1) << (2 * n)));
        q.push_back(n % 2 == 1 ? -v : v);
    }
    return q;
}

inline std::vector<Rational> l_series_coefficients(unsigned k) {
    std::vector<Rational> q;
    q.reserve(k);
    for (unsigned n = 1; n <= k; ++n) {
        Rational v = Rational(Integer(1) << (2 * n)) * bernoulli(n) /
                     Rational(detail::factorial(2 * n));
        q.push_back(n % 2 == 0 ? -v : v);
    }
    return q;
}

struct GenusSeries {
    std::string name;
    std::vector<Rational> coefficients;  // q_1, q_2, ... (q_0 = 1 implicit)

    static GenusSeries ahat(unsigned k) { return {"ahat", ahat_series_coefficients(k)}; }
    static GenusSeries l(unsigned k) { return {"l", l_series_coefficients(k)}; }
};

namespace detail {

// Degree-truncated product of dense series (index = degree).
inline std::vector<Rational> convolve_truncated(const std::vector<Rational>& a,
                                                const std::vector<Rational>& b,
                                                unsigned k) {
    std::vector<Rational> c(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
        if (i < a.size() && !a[i].is_zero())
            for (unsigned j = 0; i + j <= k; ++j)
                if (j < b.size()) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Coefficients l_1..l_k of log(1 + q_1 z + ... ), returned 1-indexed in a
// vector of size k+1 with slot 0 unused.
inline std::vector<Rational> log_coefficients(const std::vector<Rational>& q,
                                              unsigned k) {
    std::vector<Rational> u(k + 1);
    for (unsigned m = 1; m <= k; ++m) u[m] = q[m - 1];
    std::vector<Rational> upow = u;
    std::vector<Rational> l(k + 1);
    for (unsigned j = 1; j <= k; ++j) {
        if (j > 1) upow = convolve_truncated(upow, u, k);
        Rational coeff = Rational(j % 2 == 1 ? 1 : -1, Integer(j));
        for (unsigned m = j; m <= k; ++m) l[m] += coeff * upow[m];
    }
    return l;
}

// Power sums of the formal roots written in the p_j, via Newton's
// identities with the p_j playing the elementary symmetric functions:
//   S_m = (-1)^{m-1} m p_m + sum_{i=1}^{m-1} (-1)^{i-1} p_i S_{m-i}.
// Returned 1-indexed; slot 0 holds the constant 1 and is unused.
inline std::vector<PartitionPolynomial> newton_power_sums(unsigned k) {
    std::vector<PartitionPolynomial> s;
    s.reserve(k + 1);
    s.push_back(PartitionPolynomial::one());
    for (unsigned m = 1; m <= k; ++m) {
        PartitionPolynomial sm = PartitionPolynomial::monomial(
            Partition({m}), Rational(m % 2 == 1 ? 1 : -1) * Rational(m));
        for (unsigned i = 1; i < m; ++i) {
            PartitionPolynomial ei =
                PartitionPolynomial::monomial(Partition({i}), Rational(i % 2 == 1 ? 1 : -1));
            sm = poly_add(sm, poly_multiply(ei, s[m - i]));
        }
        s.push_back(std::move(sm));
    }
    return s;
}

}  // namespace detail

/*
 * Weight-k polynomial of the multiplicative sequence attached to `series`.
 * Requires at least k series coefficients.
 */
inline PartitionPolynomial genus_polynomial(const GenusSeries& series, unsigned k) {
    if (k == 0) throw std::invalid_argument("genus_polynomial: weight must be >= 1");
    if (series.coefficients.size() < k)
        throw std::invalid_argument(
            "genus_polynomial: series '" + series.name + "' provides " +
            std::to_string(series.coefficients.size()) + " coefficients, need " +
            std::to_string(k));

    std::vector<Rational> logc = detail::log_coefficients(series.coefficients, k);
    std::vector<PartitionPolynomial> power_sums = detail::newton_power_sums(k);

    // a[m] = l_m * S_m; the sequence is the weight-graded exp of their sum.
    std::vector<PartitionPolynomial> a;
    a.reserve(k + 1);
    a.push_back(PartitionPolynomial(0));
    for (unsigned m = 1; m <= k; ++m) a.push_back(poly_scale(logc[m], power_sums[m]));

    std::vector<PartitionPolynomial> cur;  // weight-w parts of a^j / j!
    std::vector<PartitionPolynomial> total;
    cur.reserve(k + 1);
    for (unsigned w = 0; w <= k; ++w)
        cur.push_back(w == 0 ? PartitionPolynomial::one() : PartitionPolynomial(w));
    total = cur;
    for (unsigned j = 1; j <= k; ++j) {
        std::vector<PartitionPolynomial> next;
        next.reserve(k + 1);
        next.push_back(PartitionPolynomial(0));
        for (unsigned w = 1; w <= k; ++w) {
            PartitionPolynomial acc(w);
            for (unsigned m = 1; m <= w; ++m)
                if (!a[m].is_zero() && !cur[w - m].is_zero())
                    acc = poly_add(acc, poly_multiply(a[m], cur[w - m]));
            next.push_back(poly_scale(Rational(1, Integer(j)), acc));
        }
        cur = std::move(next);
        for (unsigned w = 1; w <= k; ++w) total[w] = poly_add(total[w], cur[w]);
    }
    return total[k];
}

// 1 / (2^{2k+1} * (2^{2k-1} - 1)): the signature-correction constant that
// cancels the top Pontrjagin class between the Ahat and L sequences.
inline Rational a_constant(unsigned k) {
    if (k == 0) throw std::invalid_argument("a_constant: weight must be >= 1");
    return Rational(Integer(1),
                    (Integer(1) << (2 * k + 1)) * ((Integer(1) << (2 * k - 1)) - 1));
}

enum class SeriesKind { ahat, l };

namespace detail {

inline const PartitionPolynomial& cached_genus_polynomial(SeriesKind kind, unsigned k) {
    static std::map<std::pair<int, unsigned>, PartitionPolynomial> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(int(kind), k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PartitionPolynomial poly =
            k == 0 ? PartitionPolynomial::one()
                   : genus_polynomial(kind == SeriesKind::ahat ? GenusSeries::ahat(k)
                                                               : GenusSeries::l(k),
                                      k);
        it = cache.emplace(key, std::move(poly)).first;
    }
    return it->second;
}

// Ahat_k + a_k * L_k; defined (and identically zero in p_k) for all k >= 1.
inline PartitionPolynomial combined(unsigned k) {
    return poly_add(cached_genus_polynomial(SeriesKind::ahat, k),
                    poly_scale(a_constant(k), cached_genus_polynomial(SeriesKind::l, k)));
}

}  // namespace detail

// The combination whose p_k coefficient vanishes, so it pairs against
// relative Pontrjagin classes of a coboundary.  Weight >= 2 is where it
// is used; weight 1 would be the zero polynomial.
inline PartitionPolynomial combined_polynomial(unsigned k) {
    if (k < 2) throw std::invalid_argument("combined_polynomial: weight must be >= 2");
    return detail::combined(k);
}

// Pairs a weight-k polynomial with a manifold's Pontrjagin numbers.
inline Rational evaluate_genus(const PartitionPolynomial& poly,
                               const CharacteristicData& m) {
    if (poly.weight() * 4 != m.dimension)
        throw std::invalid_argument(
            "evaluate_genus: weight-" + std::to_string(poly.weight()) +
            " polynomial needs dimension " + std::to_string(poly.weight() * 4) +
            ", manifold '" + m.name + "' has dimension " + std::to_string(m.dimension));
    Rational total = 0;
    for (const auto& [p, c] : poly.terms()) {
        auto it = m.pontrjagin_numbers.find(p);
        if (it != m.pontrjagin_numbers.end()) total += c * it->second;
    }
    return total;
}

// Genus of a closed manifold of any dimension: zero off multiples of 4.
inline Rational genus_of(SeriesKind kind, const CharacteristicData& m) {
    if (m.dimension % 4 != 0) return 0;
    return evaluate_genus(detail::cached_genus_polynomial(kind, m.dimension / 4), m);
}

}  // namespace scalcurv
