#pragma once

/*
 * Characteristic data of a closed smooth manifold: the finite record an
 * index-theoretic invariant actually consumes.  A manifold enters the
 * library as its dimension, its Pontrjagin numbers (indexed by partitions
 * of dimension/4), its signature, and three flags.
 *
 * Conventions baked into the type:
 *   - manifolds are closed; bounded objects live in cobordism.hpp,
 *   - in dimensions not divisible by 4 the number table is empty and the
 *     signature is 0,
 *   - zero entries are never stored (tables are sparse),
 *   - equality compares the mathematical fields only; `name` is a label.
 */

#include "scalcurv/partition.hpp"
#include "scalcurv/partition_polynomial.hpp"
#include "scalcurv/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace scalcurv {

struct CharacteristicData {
    std::string name;
    unsigned dimension = 0;
    std::map<Partition, Rational> pontrjagin_numbers;
    Integer signature = 0;
    bool is_spin = false;
    bool rational_pontrjagin_classes_vanish = false;
    bool admits_psc = false;

    friend bool operator==(const CharacteristicData& a, const CharacteristicData& b) {
        return a.dimension == b.dimension &&
               a.pontrjagin_numbers == b.pontrjagin_numbers &&
               a.signature == b.signature && a.is_spin == b.is_spin &&
               a.rational_pontrjagin_classes_vanish == b.rational_pontrjagin_classes_vanish &&
               a.admits_psc == b.admits_psc;
    }
};

namespace detail {

inline void prune_zeros(std::map<Partition, Rational>& table) {
    for (auto it = table.begin(); it != table.end();)
        it = it->second.is_zero() ? table.erase(it) : std::next(it);
}

}  // namespace detail

// Structural invariants; throws std::invalid_argument on breach.
inline void validate_characteristic_data(const CharacteristicData& m) {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("manifold '" + m.name + "': " + msg);
    };
    if (m.dimension % 4 != 0) {
        if (!m.pontrjagin_numbers.empty())
            fail("Pontrjagin numbers require dimension divisible by 4");
        if (m.signature != 0) fail("nonzero signature requires dimension divisible by 4");
    } else {
        unsigned w = m.dimension / 4;
        for (const auto& [p, c] : m.pontrjagin_numbers) {
            if (p.weight() != w)
                fail("Pontrjagin number key " + p.to_string() + " has weight " +
                     std::to_string(p.weight()) + ", expected " + std::to_string(w));
            if (c.is_zero()) fail("zero entries must not be stored");
        }
    }
    // The empty-partition entry is the pairing of 1 with the fundamental
    // class (nonzero only in dimension 0); it is not a Pontrjagin class and
    // is exempt from the vanishing constraint.
    if (m.rational_pontrjagin_classes_vanish)
        for (const auto& entry : m.pontrjagin_numbers)
            if (!entry.first.empty())
                fail("vanishing rational Pontrjagin classes force all Pontrjagin numbers to 0");
}

/*
 * Characteristic data of a cartesian product.
 *
 * Pontrjagin numbers: rationally the total Pontrjagin class is
 * multiplicative, so for a partition L of (dim_a + dim_b)/4 each part L_i
 * splits as j_i + k_i between the factors and
 *
 *   p_L[A x B] = sum over splits with |mu| = dim_a/4, |nu| = dim_b/4 of
 *                p_mu[A] * p_nu[B].
 *
 * The signature multiplies.  Spin and class-vanishing flags are ANDs.
 * admits_psc is never inferred (set false; the CLI has an explicit
 * override citing the scaling argument).
 */
inline CharacteristicData product(const CharacteristicData& a,
                                  const CharacteristicData& b) {
    CharacteristicData out;
    out.name = a.name + " x " + b.name;
    out.dimension = a.dimension + b.dimension;
    out.signature = a.signature * b.signature;
    out.is_spin = a.is_spin && b.is_spin;
    out.rational_pontrjagin_classes_vanish =
        a.rational_pontrjagin_classes_vanish && b.rational_pontrjagin_classes_vanish;
    out.admits_psc = false;

    if (out.dimension % 4 == 0 && a.dimension % 4 == 0 && b.dimension % 4 == 0) {
        unsigned wa = a.dimension / 4;
        unsigned wb = b.dimension / 4;
        for (const Partition& lambda : partitions(wa + wb)) {
            const auto& parts = lambda.parts();
            Rational total = 0;
            // Enumerate per-part splits j_i in [0, L_i].
            std::vector<unsigned> split(parts.size(), 0);
            while (true) {
                unsigned weight_mu = 0;
                for (std::size_t i = 0; i < parts.size(); ++i) weight_mu += split[i];
                if (weight_mu == wa) {
                    std::vector<unsigned> mu, nu;
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        if (split[i] > 0) mu.push_back(split[i]);
                        if (parts[i] - split[i] > 0) nu.push_back(parts[i] - split[i]);
                    }
                    auto ia = a.pontrjagin_numbers.find(Partition(std::move(mu)));
                    if (ia != a.pontrjagin_numbers.end()) {
                        auto ib = b.pontrjagin_numbers.find(Partition(std::move(nu)));
                        if (ib != b.pontrjagin_numbers.end())
                            total += ia->second * ib->second;
                    }
                }
                std::size_t i = 0;
                for (; i < parts.size(); ++i) {
                    if (split[i] < parts[i]) {
                        ++split[i];
                        break;
                    }
                    split[i] = 0;
                }
                if (i == parts.size()) break;
            }
            if (!total.is_zero()) out.pontrjagin_numbers.emplace(lambda, std::move(total));
        }
    }
    return out;
}

// Negates every Pontrjagin number and the signature.  Involution; the name
// is left alone (it labels the underlying manifold, not the orientation).
inline CharacteristicData reverse_orientation(CharacteristicData m) {
    for (auto& [p, c] : m.pontrjagin_numbers) c = -c;
    m.signature = -m.signature;
    return m;
}

// Characteristic numbers and the signature are additive; the flags are
// ANDs (a disjoint union is spin, psc, ... iff both pieces are).
inline CharacteristicData disjoint_union(const CharacteristicData& a,
                                         const CharacteristicData& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("disjoint_union: dimension mismatch (" +
                                    std::to_string(a.dimension) + " vs " +
                                    std::to_string(b.dimension) + ")");
    CharacteristicData out;
    out.name = a.name + " + " + b.name;
    out.dimension = a.dimension;
    out.pontrjagin_numbers = a.pontrjagin_numbers;
    for (const auto& [p, c] : b.pontrjagin_numbers) {
        auto [it, fresh] = out.pontrjagin_numbers.emplace(p, c);
        if (!fresh) it->second += c;
    }
    detail::prune_zeros(out.pontrjagin_numbers);
    out.signature = a.signature + b.signature;
    out.is_spin = a.is_spin && b.is_spin;
    out.rational_pontrjagin_classes_vanish =
        a.rational_pontrjagin_classes_vanish && b.rational_pontrjagin_classes_vanish;
    out.admits_psc = a.admits_psc && b.admits_psc;
    return out;
}

/*
 * Built-in catalog.
 *
 *   point    dim 0, p_[] = 1, signature 1 (the identity for products).
 *   S<n>     spheres, any n >= 1: no characteristic numbers, signature 0,
 *            spin, rational Pontrjagin classes vanish, psc for n >= 2.
 *   K3       dim 4, p_1 = 48, signature 16.  Orientation chosen so the
 *            spin Dirac index (Ahat genus) is -2; the complex-surface
 *            orientation would give +2 with p_1 = -48, signature -16.
 *   Bott     dim 8, p_2 = -1440 (p_1 = 0), signature -224.  A spin
 *            8-manifold with unit Ahat genus: Ahat_2 = -p_2/1440 = 1
 *            forces p_2 = -1440 once p_1 = 0, and the signature is then
 *            L_2 = 7*p_2/45 = -224.
 *   HP2      dim 8, p_1^2 = 4, p_2 = 7, signature 1; spin and psc.
 */
inline CharacteristicData catalog(const std::string& name) {
    CharacteristicData m;
    m.name = name;
    m.is_spin = true;
    if (name == "point") {
        m.pontrjagin_numbers.emplace(Partition(), Rational(1));
        m.signature = 1;
        m.rational_pontrjagin_classes_vanish = true;
        return m;
    }
    if (name == "K3") {
        m.dimension = 4;
        m.pontrjagin_numbers.emplace(Partition({1}), Rational(48));
        m.signature = 16;
        return m;
    }
    if (name == "Bott") {
        m.dimension = 8;
        m.pontrjagin_numbers.emplace(Partition({2}), Rational(-1440));
        m.signature = -224;
        return m;
    }
    if (name == "HP2") {
        m.dimension = 8;
        m.pontrjagin_numbers.emplace(Partition({1, 1}), Rational(4));
        m.pontrjagin_numbers.emplace(Partition({2}), Rational(7));
        m.signature = 1;
        m.admits_psc = true;
        return m;
    }
    if (name.size() > 1 && name[0] == 'S') {
        unsigned long n = 0;
        bool ok = true;
        for (std::size_t i = 1; i < name.size(); ++i) {
            char c = name[i];
            if (c < '0' || c > '9') {
                ok = false;
                break;
            }
            n = n * 10 + unsigned(c - '0');
            if (n > 1000000) {
                ok = false;
                break;
            }
        }
        if (ok && n >= 1) {
            m.dimension = unsigned(n);
            m.rational_pontrjagin_classes_vanish = true;
            m.admits_psc = n >= 2;
            return m;
        }
    }
    throw std::invalid_argument(
        "unknown catalog entry '" + name +
        "'; available: point, K3, Bott, HP2, S<n> for n >= 1");
}

// The named entries, in listing order.  S<n> is available for every n >= 1;
// the three spheres here are the ones the invariants most often sit over.
inline std::vector<CharacteristicData> builtin_catalog() {
    return {catalog("point"), catalog("K3"),  catalog("Bott"),
            catalog("HP2"),   catalog("S3"),  catalog("S7"),
            catalog("S11")};
}

}  // namespace scalcurv
