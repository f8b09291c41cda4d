#pragma once

/*
 * Homogeneous polynomials in Pontrjagin classes, stored sparsely as
 * partition -> coefficient.  Every monomial of a polynomial has the same
 * weight (the polynomial's degree in the grading |p_i| = i); zero
 * coefficients are never stored.
 */

#include "scalcurv/partition.hpp"
#include "scalcurv/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace scalcurv {

class PartitionPolynomial {
public:
    explicit PartitionPolynomial(unsigned weight) : weight_(weight) {}

    PartitionPolynomial(unsigned weight, std::map<Partition, Rational> terms)
        : weight_(weight), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.weight() != weight_)
                throw std::invalid_argument(
                    "PartitionPolynomial: term " + it->first.to_string() +
                    " has weight " + std::to_string(it->first.weight()) +
                    ", expected " + std::to_string(weight_));
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

    // Multiplicative identity: the weight-0 polynomial with value 1.
    static PartitionPolynomial one() {
        PartitionPolynomial p(0);
        p.terms_.emplace(Partition(), Rational(1));
        return p;
    }

    static PartitionPolynomial monomial(const Partition& p, Rational c) {
        PartitionPolynomial out(p.weight());
        if (!c.is_zero()) out.terms_.emplace(p, std::move(c));
        return out;
    }

    unsigned weight() const { return weight_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const PartitionPolynomial& a,
                           const PartitionPolynomial& b) {
        return a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }

private:
    unsigned weight_;
    std::map<Partition, Rational> terms_;
};

inline PartitionPolynomial poly_add(const PartitionPolynomial& a,
                                    const PartitionPolynomial& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("poly_add: mixed-weight sum (" +
                                    std::to_string(a.weight()) + " vs " +
                                    std::to_string(b.weight()) + ")");
    std::map<Partition, Rational> terms = a.terms();
    for (const auto& [p, c] : b.terms()) {
        auto [it, fresh] = terms.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return PartitionPolynomial(a.weight(), std::move(terms));
}

inline PartitionPolynomial poly_scale(const Rational& c,
                                      const PartitionPolynomial& a) {
    std::map<Partition, Rational> terms;
    if (!c.is_zero())
        for (const auto& [p, v] : a.terms()) terms.emplace(p, c * v);
    return PartitionPolynomial(a.weight(), std::move(terms));
}

// Weights add; monomials multiply by merging their partitions.
inline PartitionPolynomial poly_multiply(const PartitionPolynomial& a,
                                         const PartitionPolynomial& b) {
    std::map<Partition, Rational> terms;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            Partition p = Partition::concat(pa, pb);
            auto [it, fresh] = terms.emplace(p, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
    return PartitionPolynomial(a.weight() + b.weight(), std::move(terms));
}

inline PartitionPolynomial operator+(const PartitionPolynomial& a,
                                     const PartitionPolynomial& b) {
    return poly_add(a, b);
}
inline PartitionPolynomial operator*(const PartitionPolynomial& a,
                                     const PartitionPolynomial& b) {
    return poly_multiply(a, b);
}

}  // namespace scalcurv
