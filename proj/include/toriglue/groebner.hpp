#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <toriglue/binomial.hpp>
#include <toriglue/ring.hpp>

namespace toriglue {

/// Work limits for Groebner computations.  Buchberger has no a-priori bound,
/// so runaway computations must fail loudly instead of hanging.
struct Budget {
    long long max_reductions = 50'000;  // S-pair reductions
    Exp max_degree = 60;                // total degree of any S-pair lcm
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class BudgetMeter {
public:
    explicit BudgetMeter(Budget b = {}) : budget_(b) {}

    void charge_reduction() {
        if (++used_ > budget_.max_reductions)
            throw BudgetExceeded("budget: exceeded " + std::to_string(budget_.max_reductions) +
                                 " S-pair reductions");
    }
    void check_degree(Exp d) const {
        if (d > budget_.max_degree)
            throw BudgetExceeded("budget: S-pair degree " + std::to_string(d) + " exceeds cap " +
                                 std::to_string(budget_.max_degree));
    }
    long long used() const { return used_; }

private:
    Budget budget_;
    long long used_ = 0;
};

// ---------------------------------------------------------------------------
// Division and Buchberger's algorithm.  S-polynomials and remainders of pure
// difference binomials are again pure difference binomials (every rewrite is a
// monomial substitution), so the computation never leaves the binomial world.
// ---------------------------------------------------------------------------

inline Binomial spoly(const Binomial& f, const Binomial& g) {
    Monomial l = lcm(f.plus, g.plus);
    return Binomial(l.divided_by(g.plus) * g.minus, l.divided_by(f.plus) * f.minus);
}

/// Full normal form of b modulo `basis`: both monomials reduced until
/// irreducible.  Each rewrite strictly decreases a monomial in the order, so
/// this terminates.  `skip` optionally excludes one basis element (used by
/// autoreduction).
inline Binomial reduce_full(Binomial b, const std::vector<Binomial>& basis,
                            const MonomialOrder& ord,
                            std::size_t skip = static_cast<std::size_t>(-1)) {
    while (true) {
        if (b.is_zero()) return b;
        b.orient(ord);
        bool rewritten = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip) continue;
            if (basis[k].plus.divides(b.plus)) {
                b.plus = b.plus.divided_by(basis[k].plus) * basis[k].minus;
                rewritten = true;
                break;
            }
        }
        if (rewritten) continue;
        // leading term irreducible; reduce the trailing term (stays smaller)
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip) continue;
            if (basis[k].plus.divides(b.minus)) {
                b.minus = b.minus.divided_by(basis[k].plus) * basis[k].minus;
                rewritten = true;
                break;
            }
        }
        if (!rewritten) return b;
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
/// Deterministic: pairs are processed in increasing lcm order with ties broken
/// by index.  Uses the product criterion and the chain criterion (a pair may
/// be dropped only on the strength of pairs already certified to reduce to
/// zero, which keeps the pruning sound).
inline std::vector<Binomial> reduced_groebner(std::vector<Binomial> gens, const MonomialOrder& ord,
                                              BudgetMeter& meter) {
    std::vector<Binomial> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        g.orient(ord);
        basis.push_back(std::move(g));
    }
    std::sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
        return compare_binomials(a, b, ord) < 0;
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    struct PairRef {
        std::size_t i, j;  // i < j
        Monomial l;
    };
    auto pair_less = [&](const PairRef& a, const PairRef& b) {
        if (int c = ord.compare(a.l, b.l)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::multiset<PairRef, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> done;  // pairs known to reduce to zero

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.insert(PairRef{i, j, lcm(basis[i].plus, basis[j].plus)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        PairRef pr = *queue.begin();
        queue.erase(queue.begin());
        meter.check_degree(pr.l.deg());

        // product criterion: coprime leading terms reduce to zero
        if (gcd(basis[pr.i].plus, basis[pr.j].plus).is_one()) {
            done.emplace(pr.i, pr.j);
            continue;
        }
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].plus.divides(pr.l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chained = true;
        }
        if (chained) {
            done.emplace(pr.i, pr.j);
            continue;
        }

        meter.charge_reduction();
        Binomial h = reduce_full(spoly(basis[pr.i], basis[pr.j]), basis, ord);
        done.emplace(pr.i, pr.j);
        if (!h.is_zero()) {
            basis.push_back(h);
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
        return compare_binomials(a, b, ord) < 0;
    });
    std::vector<Binomial> kept;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.plus.divides(g.plus)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    // autoreduce tails; leads are pairwise indivisible so they are preserved
    for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = reduce_full(kept[i], kept, ord, i);
    std::sort(kept.begin(), kept.end(), [&](const Binomial& a, const Binomial& b) {
        return compare_binomials(a, b, ord) > 0;
    });
    return kept;
}

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

/// Reduced Groebner basis under the ring's canonical order, cached on the
/// ideal.  Two runs on the same (ideal, order) produce identical bases.
inline GroebnerBasis groebner_basis(const BinomialIdeal& ideal, Budget budget = {}) {
    if (ideal.cached_basis) return *ideal.cached_basis;
    BudgetMeter meter(budget);
    GroebnerBasis gb{ideal.ring,
                     reduced_groebner(ideal.generators, ideal.ring.monomial_order(), meter)};
    ideal.cached_basis = std::make_shared<const GroebnerBasis>(gb);
    return gb;
}

/// Reduced Groebner basis under an arbitrary order (not cached).
inline GroebnerBasis groebner_basis(const BinomialIdeal& ideal, const MonomialOrder& ord,
                                    Budget budget = {}) {
    BudgetMeter meter(budget);
    return GroebnerBasis{ideal.ring, reduced_groebner(ideal.generators, ord, meter)};
}

/// Unique remainder of b under division by G; zero iff b lies in <G>.
inline Binomial normal_form(const Binomial& b, const GroebnerBasis& gb) {
    if (b.nvars() != gb.ring.size())
        throw std::invalid_argument("normal_form: ring mismatch");
    return reduce_full(b, gb.elements, gb.ring.monomial_order());
}

/// Ideal equality via equality of reduced Groebner bases under one fixed
/// order.  The rings must be identical.
inline bool ideal_equals(const BinomialIdeal& a, const BinomialIdeal& b, Budget budget = {}) {
    if (a.ring != b.ring) throw std::invalid_argument("ideal_equals: ring mismatch");
    return groebner_basis(a, budget).elements == groebner_basis(b, budget).elements;
}

/// Membership test: b in I.
inline bool ideal_contains(const BinomialIdeal& ideal, const Binomial& b, Budget budget = {}) {
    return normal_form(b, groebner_basis(ideal, budget)).is_zero();
}

}  // namespace toriglue
