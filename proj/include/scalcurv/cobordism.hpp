#pragma once

/*
 * Invariants of psc boundary metrics computed through a bounding manifold.
 *
 * A CobordismData records the finite input to the topological term
 *
 *   t(W) = -< (Ahat + a_m L)(relative classes), [W, M] > + a_m sigma(W),
 *
 * for a compact 4m-manifold W with boundary M of dimension 4m-1.  The
 * relative Pontrjagin numbers are the pairings of monomials in the
 * relative classes with the relative fundamental class; they exist
 * because M has vanishing rational Pontrjagin classes.
 *
 * When the boundary metric has positive scalar curvature and extends over
 * W as psc (product near the boundary), the analytic correction terms
 * vanish and the s-invariant of the boundary metric equals t(W).  For a
 * product boundary M x N with N a closed spin 4l-manifold, the extended
 * invariant factorizes as s~ = Ahat(N) * t(W).
 */

#include "scalcurv/bernoulli.hpp"
#include "scalcurv/errors.hpp"
#include "scalcurv/genus.hpp"
#include "scalcurv/manifold.hpp"
#include "scalcurv/validation.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scalcurv {

struct CobordismData {
    std::string name;
    unsigned dimension = 0;  // 4m
    std::map<Partition, Rational> relative_pontrjagin_numbers;
    Integer signature = 0;
    CharacteristicData boundary;  // dimension 4m - 1
    bool psc_extension = false;

    friend bool operator==(const CobordismData& a, const CobordismData& b) {
        return a.dimension == b.dimension &&
               a.relative_pontrjagin_numbers == b.relative_pontrjagin_numbers &&
               a.signature == b.signature && a.boundary == b.boundary &&
               a.psc_extension == b.psc_extension;
    }
};

// Structural invariants; throws std::invalid_argument on breach.  The
// boundary classes-vanish requirement is checked by t_term (it is a
// topological precondition, not a shape error).
inline void validate_cobordism_data(const CobordismData& w) {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("cobordism '" + w.name + "': " + msg);
    };
    if (w.dimension == 0 || w.dimension % 4 != 0)
        fail("dimension must be a positive multiple of 4");
    if (w.boundary.dimension != w.dimension - 1)
        fail("boundary dimension must be " + std::to_string(w.dimension - 1) +
             ", got " + std::to_string(w.boundary.dimension));
    unsigned m = w.dimension / 4;
    for (const auto& [p, c] : w.relative_pontrjagin_numbers) {
        if (p.weight() != m)
            fail("relative number key " + p.to_string() + " has weight " +
                 std::to_string(p.weight()) + ", expected " + std::to_string(m));
        if (c.is_zero()) fail("zero entries must not be stored");
    }
    validate_characteristic_data(w.boundary);
}

inline Rational t_term(const CobordismData& w) {
    validate_cobordism_data(w);
    if (!w.boundary.rational_pontrjagin_classes_vanish)
        throw validation_error(
            "t_term: boundary manifold '" + w.boundary.name +
            "' must have vanishing real Pontrjagin classes (the relative classes "
            "are undefined otherwise)");
    unsigned m = w.dimension / 4;
    Rational pairing = 0;
    const PartitionPolynomial combined = detail::combined(m);
    for (const auto& [p, c] : combined.terms()) {
        auto it = w.relative_pontrjagin_numbers.find(p);
        if (it != w.relative_pontrjagin_numbers.end()) pairing += c * it->second;
    }
    return -pairing + a_constant(m) * Rational(w.signature);
}

// W = M x I: nothing relative, no signature; psc extends iff the boundary
// metric was psc to begin with.
inline CobordismData make_cylinder(const CharacteristicData& boundary) {
    validate_characteristic_data(boundary);
    if (boundary.dimension % 4 != 3)
        throw std::invalid_argument(
            "make_cylinder: boundary dimension must be congruent to 3 modulo 4, got " +
            std::to_string(boundary.dimension));
    CobordismData w;
    w.name = boundary.name + " x I";
    w.dimension = boundary.dimension + 1;
    w.boundary = boundary;
    w.psc_extension = boundary.admits_psc;
    return w;
}

/*
 * Plumbing of disc bundles over spheres: parallelisable interior, so all
 * relative Pontrjagin numbers vanish and only the signature contributes.
 * The boundary is a homotopy sphere; its characteristic data equals the
 * standard sphere's, it admits psc (dimension 4m-1 >= 7, where the alpha
 * obstruction vanishes), and the construction extends the metric as psc.
 */
inline CobordismData make_plumbing_block(unsigned dimension, Integer signature,
                                         std::string name = "") {
    if (dimension < 8 || dimension % 4 != 0)
        throw std::invalid_argument(
            "make_plumbing_block: dimension must be a multiple of 4 and at least 8");
    CobordismData w;
    w.name = name.empty()
                 ? "plumbing block (dim " + std::to_string(dimension) + ", sigma " +
                       signature.str() + ")"
                 : std::move(name);
    w.dimension = dimension;
    w.signature = std::move(signature);
    w.boundary = catalog("S" + std::to_string(dimension - 1));
    w.boundary.name = "Sigma" + std::to_string(dimension - 1);
    w.psc_extension = true;
    return w;
}

inline CobordismData make_e8_block(unsigned dimension = 8) {
    return make_plumbing_block(dimension, 8, "E8 block (dim " + std::to_string(dimension) + ")");
}

inline CobordismData reverse_orientation(CobordismData w) {
    for (auto& [p, c] : w.relative_pontrjagin_numbers) c = -c;
    w.signature = -w.signature;
    w.boundary = reverse_orientation(std::move(w.boundary));
    return w;
}

// Boundary connected sum: relative numbers and signatures add; the new
// boundary is the connected sum of the boundaries (odd-dimensional, so
// its table stays empty; flags are ANDs, psc by surgery in dim >= 3).
inline CobordismData connected_sum(const CobordismData& a, const CobordismData& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("connected_sum: dimension mismatch (" +
                                    std::to_string(a.dimension) + " vs " +
                                    std::to_string(b.dimension) + ")");
    CobordismData out;
    out.name = a.name + " # " + b.name;
    out.dimension = a.dimension;
    out.relative_pontrjagin_numbers = a.relative_pontrjagin_numbers;
    for (const auto& [p, c] : b.relative_pontrjagin_numbers) {
        auto [it, fresh] = out.relative_pontrjagin_numbers.emplace(p, c);
        if (!fresh) it->second += c;
    }
    detail::prune_zeros(out.relative_pontrjagin_numbers);
    out.signature = a.signature + b.signature;
    out.boundary.name = a.boundary.name + " # " + b.boundary.name;
    out.boundary.dimension = a.boundary.dimension;
    out.boundary.signature = a.boundary.signature + b.boundary.signature;
    out.boundary.is_spin = a.boundary.is_spin && b.boundary.is_spin;
    out.boundary.rational_pontrjagin_classes_vanish =
        a.boundary.rational_pontrjagin_classes_vanish &&
        b.boundary.rational_pontrjagin_classes_vanish;
    out.boundary.admits_psc = a.boundary.admits_psc && b.boundary.admits_psc;
    out.psc_extension = a.psc_extension && b.psc_extension;
    return out;
}

// Disjoint union of cobordisms: the same componentwise sums, but the
// boundary is a disjoint union instead of a connected sum.
inline CobordismData disjoint_union(const CobordismData& a, const CobordismData& b) {
    CobordismData out = connected_sum(a, b);
    out.name = a.name + " + " + b.name;
    out.boundary.name = a.boundary.name + " + " + b.boundary.name;
    return out;
}

struct MetricRepresentative {
    std::string boundary_metric_label;
    CobordismData cobordism;  // psc_extension must be true
};

inline MetricRepresentative make_metric_representative(CobordismData w,
                                                       std::string label = "") {
    if (!w.psc_extension)
        throw validation_error(
            "analytic s-invariant path not implemented; supply a psc cobordism");
    MetricRepresentative rep;
    rep.boundary_metric_label = label.empty() ? "metric bounded by " + w.name : std::move(label);
    rep.cobordism = std::move(w);
    return rep;
}

inline Rational s_invariant(const MetricRepresentative& rep) {
    if (!rep.cobordism.psc_extension)
        throw validation_error(
            "analytic s-invariant path not implemented; supply a psc cobordism");
    return t_term(rep.cobordism);
}

struct TildeSResult {
    Rational value;        // = ahat_factor * t_term
    Rational ahat_factor;  // Ahat genus of the second factor
    Rational t_term;       // topological term of the bounding manifold
};

inline TildeSResult tilde_s(const MetricRepresentative& rep,
                            const CharacteristicData& n) {
    if (!rep.cobordism.psc_extension)
        throw validation_error(
            "analytic s-invariant path not implemented; supply a psc cobordism");
    ValidationReport report = validate_ks_product(rep.cobordism.boundary, n);
    if (!report.passed()) throw validation_error("tilde_s: " + report.summary());
    TildeSResult out;
    out.t_term = t_term(rep.cobordism);
    out.ahat_factor = genus_of(SeriesKind::ahat, n);
    out.value = out.ahat_factor * out.t_term;
    return out;
}

inline MetricRepresentative connected_sum(const MetricRepresentative& a,
                                          const MetricRepresentative& b) {
    MetricRepresentative out;
    out.boundary_metric_label =
        a.boundary_metric_label + " # " + b.boundary_metric_label;
    out.cobordism = connected_sum(a.cobordism, b.cobordism);
    return out;
}

struct RelativeIndexResult {
    Rational value;
    bool is_integer;  // a genuine index is; non-integrality flags inconsistent input
};

inline RelativeIndexResult relative_index(const MetricRepresentative& rep1,
                                          const MetricRepresentative& rep2,
                                          const CharacteristicData& n) {
    if (!(rep1.cobordism.boundary == rep2.cobordism.boundary))
        throw std::invalid_argument(
            "relative_index: boundary mismatch; representatives must share the same "
            "boundary manifold data");
    Rational value = tilde_s(rep1, n).value - tilde_s(rep2, n).value;
    bool integral = value.is_integer();
    return {std::move(value), integral};
}

// Entry p is s~(base # p * block, n), built by repeated boundary connected
// sum.  Distinctness of the entries needs the block's own invariant to be
// nonzero, which is checked up front.
inline std::vector<TildeSResult> component_family(const MetricRepresentative& base,
                                                  const MetricRepresentative& block,
                                                  const CharacteristicData& n,
                                                  unsigned count) {
    if (count == 0)
        throw std::invalid_argument("component_family: count must be positive");
    if (tilde_s(block, n).value.is_zero())
        throw validation_error("component_family: family does not separate components "
                               "(block has zero invariant)");
    std::vector<TildeSResult> out;
    out.reserve(count);
    MetricRepresentative current = base;
    for (unsigned p = 0; p < count; ++p) {
        out.push_back(tilde_s(current, n));
        if (p + 1 < count) current = connected_sum(current, block);
    }
    return out;
}

// Order of the group of homotopy (4n-1)-spheres bounding parallelisable
// manifolds: |bP_4n| = 2^{2n-2} (2^{2n-1} - 1) numerator(4 B_n / n).
inline Integer bp_order(unsigned n) {
    if (n < 2) throw std::invalid_argument("bp_order: n must be >= 2");
    Rational r = Rational(4) * bernoulli(n) / Rational(Integer(n));
    return (Integer(1) << (2 * n - 2)) * ((Integer(1) << (2 * n - 1)) - 1) *
           r.numerator();
}

enum class Theorem04Factor { k3, bott };

/*
 * Closed forms for the family of homotopy spheres Sigma(j, q) crossed with
 * the two standard 4l-factors:
 *
 *   over K3:   -(j |bP_4n| + q) / (2^{2n-3} (2^{2n-1} - 1))
 *   over Bott:  (j |bP_4n| + q) / (2^{2n-2} (2^{2n-1} - 1))
 *
 * The constructive route below realizes the same values through a plumbing
 * block with signature 8 (j |bP_4n| + q); the two are compared in tests.
 */
inline Rational theorem04_value(unsigned n, unsigned j, long long q,
                                Theorem04Factor factor) {
    if (n < 2) throw std::invalid_argument("theorem04_value: n must be >= 2");
    Integer load = Integer(j) * bp_order(n) + q;
    Integer odd = (Integer(1) << (2 * n - 1)) - 1;
    if (factor == Theorem04Factor::k3)
        return Rational(-load, (Integer(1) << (2 * n - 3)) * odd);
    return Rational(load, (Integer(1) << (2 * n - 2)) * odd);
}

inline TildeSResult theorem04_constructive(unsigned n, unsigned j, long long q,
                                           Theorem04Factor factor) {
    if (n < 2) throw std::invalid_argument("theorem04_constructive: n must be >= 2");
    Integer load = Integer(j) * bp_order(n) + q;
    MetricRepresentative rep =
        make_metric_representative(make_plumbing_block(4 * n, 8 * load));
    return tilde_s(rep, catalog(factor == Theorem04Factor::k3 ? "K3" : "Bott"));
}

// Sufficient (not necessary) condition under which the degree-0 index
// argument already separates whatever these invariants would separate:
// all rational Pontrjagin classes vanish.
inline bool hss_degree0_sufficient(const CharacteristicData& x) {
    return x.rational_pontrjagin_classes_vanish;
}

// Relative index of a metric against its pullback by a diffeomorphism.
// Zero under the sufficient condition above; otherwise it would require
// the Ahat genus of a mapping torus, which this library does not compute,
// so the honest answer is "unknown" (nullopt).
inline std::optional<Rational> self_pullback_relative_index(const CharacteristicData& x) {
    if (hss_degree0_sufficient(x)) return Rational(0);
    return std::nullopt;
}

}  // namespace scalcurv
