#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toriglue/groebner.hpp>
#include <toriglue/linalg.hpp>
#include <toriglue/matrix.hpp>

namespace toriglue {

/// Remove the common monomial factor of the two terms.  This is legitimate
/// only while saturating; elsewhere it would change the ideal.
inline bool factor_out_common_monomial(Binomial& b) {
    Monomial g = gcd(b.plus, b.minus);
    if (g.is_one()) return false;
    b.plus = b.plus.divided_by(g);
    b.minus = b.minus.divided_by(g);
    return true;
}

/// Positive grading weights under which the toric ideal of m is homogeneous:
/// the standard grading when m is a homogeneous matrix, otherwise the column
/// sums when those are positive.  Empty result means the standard grading.
inline std::vector<Exp> toric_weights(const IntMatrix& m) {
    if (homogeneity_certificate(m)) return {};
    IntVector sums = column_sums(m);
    std::vector<Exp> w(sums.size());
    for (std::size_t j = 0; j < sums.size(); ++j) {
        if (sums[j] <= 0 || !sums[j].fits_slong_p()) return {};
        w[j] = sums[j].get_si();
    }
    return w;
}

/*
 * Saturation (I : (x1...xn)^inf), variable by variable: compute a reduced
 * Groebner basis in a weighted grevlex order that makes the variable
 * cheapest, then strip the largest monomial factor from every basis element;
 * iterate round-robin until a full cycle leaves the basis untouched.
 *
 * For an ideal homogeneous under positive weights the divide-out step
 * computes (I : xi^inf) exactly (a leading term divisible by the cheapest
 * variable forces the whole element to be), so one cycle saturates and the
 * next one merely confirms the fixpoint.
 */
inline std::vector<Binomial> saturate_generators(std::vector<Binomial> gens, std::size_t nvars,
                                                 const std::vector<Exp>& weights,
                                                 BudgetMeter& meter) {
    std::vector<Binomial> cur;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        factor_out_common_monomial(g);
        cur.push_back(std::move(g));
    }
    if (cur.empty() || nvars == 0) return cur;

    std::size_t quiet = 0, v = 0;
    while (quiet < nvars) {
        MonomialOrder ord = MonomialOrder::saturating(nvars, v, weights);
        cur = reduced_groebner(cur, ord, meter);
        bool changed = false;
        for (auto& g : cur)
            if (factor_out_common_monomial(g)) changed = true;
        quiet = changed ? 0 : quiet + 1;
        v = (v + 1) % nvars;
    }
    return cur;
}

/// Try to find positive grading weights for an arbitrary binomial ideal: the
/// standard grading if all generators are degree-balanced, otherwise a small
/// positive vector orthogonal to every exponent difference.
inline std::vector<Exp> grading_weights_for(const BinomialIdeal& ideal) {
    bool balanced = true;
    for (const auto& g : ideal.generators)
        if (g.plus.deg() != g.minus.deg()) {
            balanced = false;
            break;
        }
    if (balanced) return {};

    IntMatrix diff(ideal.generators.size(), ideal.ring.size());
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        auto d = exponent_difference(ideal.generators[i]);
        for (std::size_t j = 0; j < d.size(); ++j) diff(i, j) = static_cast<long>(d[j]);
    }
    auto space = kernel_lattice_basis(diff);  // weights live in ker(diff)
    if (space.empty() || space.size() > 5) return {};
    // bounded search over small integer combinations for a positive vector
    std::vector<int> coef(space.size(), -2);
    while (true) {
        IntVector w(ideal.ring.size(), 0);
        for (std::size_t k = 0; k < space.size(); ++k)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += coef[k] * space[k][j];
        bool positive = std::all_of(w.begin(), w.end(), [](const Int& x) { return x > 0; });
        if (positive) {
            std::vector<Exp> out(w.size());
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (!w[j].fits_slong_p()) return {};
                out[j] = w[j].get_si();
            }
            return out;
        }
        std::size_t k = 0;
        while (k < coef.size() && coef[k] == 2) coef[k++] = -2;
        if (k == coef.size()) break;
        ++coef[k];
    }
    return {};
}

/// (I : (x1...xn)^inf).  Needed because a kernel-basis ideal generates the
/// toric ideal only after saturation.
inline BinomialIdeal saturate_all_variables(const BinomialIdeal& ideal, Budget budget = {}) {
    BudgetMeter meter(budget);
    auto gens =
        saturate_generators(ideal.generators, ideal.ring.size(), grading_weights_for(ideal), meter);
    auto gb = reduced_groebner(gens, ideal.ring.monomial_order(), meter);
    BinomialIdeal out(ideal.ring);
    out.generators = gb;
    out.cached_basis = std::make_shared<const GroebnerBasis>(GroebnerBasis{ideal.ring, gb});
    return out;
}

/// Deterministic pairwise reduction of a lattice basis: v_i -= round(q) v_j
/// whenever that shrinks the squared norm.  Keeps the same lattice; exists to
/// hand the saturation short generators instead of raw echelon vectors.
inline void size_reduce_lattice_basis(std::vector<IntVector>& basis) {
    auto dot = [](const IntVector& a, const IntVector& b) {
        Int s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                Int den = dot(basis[j], basis[j]);
                if (den == 0) continue;
                Int num = dot(basis[i], basis[j]);
                Int q, twice_num = 2 * num + den, twice_den = 2 * den;
                mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
                if (q == 0) continue;
                IntVector cand(basis[i].size());
                for (std::size_t t = 0; t < cand.size(); ++t)
                    cand[t] = basis[i][t] - q * basis[j][t];
                if (dot(cand, cand) < dot(basis[i], basis[i])) {
                    basis[i] = std::move(cand);
                    changed = true;
                }
            }
    }
    for (auto& v : basis) {
        for (const Int& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const IntVector& a, const IntVector& b) {
        Int na = dot(a, a), nb = dot(b, b);
        if (na != nb) return na < nb;
        return a < b;
    });
}

inline Binomial binomial_from_lattice_vector(const IntVector& v) {
    std::vector<Exp> e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p())
            throw std::invalid_argument("toric_ideal: kernel vector entry does not fit a machine exponent");
        e[i] = v[i].get_si();
    }
    return binomial_from_vector(e);
}

/// Toric ideal of m: kernel lattice basis -> lattice ideal -> saturation.
/// Prime of height cols - rank(m); returned with its reduced Groebner basis
/// cached.
inline BinomialIdeal toric_ideal(const IntMatrix& m, RingContext ring, Budget budget = {}) {
    if (ring.size() != m.cols())
        throw std::invalid_argument("toric_ideal: ring must have one variable per column");
    BinomialIdeal ideal(std::move(ring));
    auto kernel = kernel_lattice_basis(m);
    if (kernel.empty()) {
        ideal.cached_basis =
            std::make_shared<const GroebnerBasis>(GroebnerBasis{ideal.ring, {}});
        return ideal;
    }
    size_reduce_lattice_basis(kernel);
    std::vector<Binomial> gens;
    gens.reserve(kernel.size());
    for (const auto& v : kernel) gens.push_back(binomial_from_lattice_vector(v));

    BudgetMeter meter(budget);
    auto sat = saturate_generators(std::move(gens), ideal.ring.size(), toric_weights(m), meter);
    auto gb = reduced_groebner(sat, ideal.ring.monomial_order(), meter);
    ideal.generators = gb;
    ideal.cached_basis = std::make_shared<const GroebnerBasis>(GroebnerBasis{ideal.ring, gb});
    return ideal;
}

inline BinomialIdeal toric_ideal(const IntMatrix& m, Budget budget = {}) {
    return toric_ideal(m, standard_ring(m.cols()), budget);
}

/// True iff every generator is degree-balanced; for a toric ideal this
/// matches homogeneity of its matrix.
inline bool is_standard_homogeneous(const BinomialIdeal& ideal) {
    for (const auto& g : ideal.generators)
        if (g.plus.deg() != g.minus.deg()) return false;
    return true;
}

/// Multidegree of a monomial under deg(x_j) = column j of the grading matrix.
inline IntVector multidegree(const IntMatrix& grading, const Monomial& m) {
    IntVector d(grading.rows(), 0);
    for (std::size_t i = 0; i < grading.rows(); ++i)
        for (std::size_t j = 0; j < grading.cols(); ++j)
            if (m.e[j] != 0) d[i] += grading(i, j) * Int(static_cast<long>(m.e[j]));
    return d;
}

/// Minimal multigraded generating set, built degree by degree: an element is
/// kept iff it is not generated by what was kept before it.  The count is
/// well-defined (graded Nakayama); the set itself may differ from any
/// particular printed set while generating the same ideal.
inline std::vector<Binomial> minimal_generators(const BinomialIdeal& ideal,
                                                const IntMatrix& grading, Budget budget = {}) {
    if (grading.cols() != ideal.ring.size())
        throw std::invalid_argument("minimal_generators: grading has wrong column count");
    for (const auto& g : ideal.generators)
        if (multidegree(grading, g.plus) != multidegree(grading, g.minus))
            throw std::invalid_argument("minimal_generators: generator not homogeneous for grading");

    auto pool = groebner_basis(ideal, budget).elements;
    std::vector<Exp> w = toric_weights(grading);
    MonomialOrder wdeg_order;
    wdeg_order.weights = w;
    const MonomialOrder ord = ideal.ring.monomial_order();
    std::stable_sort(pool.begin(), pool.end(), [&](const Binomial& a, const Binomial& b) {
        __int128 da = wdeg_order.weighted_deg(a.plus), db = wdeg_order.weighted_deg(b.plus);
        if (da != db) return da < db;
        return compare_binomials(a, b, ord) < 0;
    });

    BudgetMeter meter(budget);
    std::vector<Binomial> kept, kept_gb;
    for (const auto& b : pool) {
        if (!kept.empty() && reduce_full(b, kept_gb, ord).is_zero()) continue;
        kept.push_back(b);
        kept_gb = reduced_groebner(kept, ord, meter);
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Generator-level ideal arithmetic used by the splitting constructions.
// ---------------------------------------------------------------------------

inline BinomialIdeal ideal_sum(const BinomialIdeal& a, const BinomialIdeal& b) {
    if (a.ring != b.ring) throw std::invalid_argument("ideal_sum: ring mismatch");
    BinomialIdeal out = a;
    for (const auto& g : b.generators) out.add(g);
    return out;
}

/// Rename one ring variable (the substitution x_i = z); exponents are
/// untouched, so any cached basis stays valid.
inline BinomialIdeal substitute_variable(const BinomialIdeal& ideal, const std::string& from,
                                         const std::string& to) {
    BinomialIdeal out = ideal;
    std::size_t idx = out.ring.index_of(from);
    out.ring.vars[idx] = to;
    out.ring.validate();
    if (out.cached_basis) {
        GroebnerBasis gb = *out.cached_basis;
        gb.ring = out.ring;
        out.cached_basis = std::make_shared<const GroebnerBasis>(std::move(gb));
    }
    return out;
}

/// Re-index the ideal into a bigger ring; var_map[i] is the new position of
/// variable i and must be injective.
inline BinomialIdeal extend_ring(const BinomialIdeal& ideal, RingContext big,
                                 const std::vector<std::size_t>& var_map) {
    if (var_map.size() != ideal.ring.size())
        throw std::invalid_argument("extend_ring: map size mismatch");
    std::vector<bool> seen(big.size(), false);
    for (std::size_t t : var_map) {
        if (t >= big.size() || seen[t])
            throw std::invalid_argument("extend_ring: variable injection is not one-to-one");
        seen[t] = true;
    }
    const std::size_t big_n = big.size();
    auto remap = [&](const Monomial& m) {
        Monomial r(big_n);
        for (std::size_t i = 0; i < m.nvars(); ++i) r.e[var_map[i]] = m.e[i];
        return r;
    };
    BinomialIdeal out(std::move(big));
    for (const auto& g : ideal.generators) out.add(Binomial(remap(g.plus), remap(g.minus)));
    return out;
}

/// extend_ring with the injection given by matching variable names.
inline BinomialIdeal extend_ring_by_name(const BinomialIdeal& ideal, const RingContext& big) {
    std::vector<std::size_t> var_map(ideal.ring.size());
    for (std::size_t i = 0; i < ideal.ring.size(); ++i)
        var_map[i] = big.index_of(ideal.ring.vars[i]);
    return extend_ring(ideal, big, var_map);
}

}  // namespace toriglue
