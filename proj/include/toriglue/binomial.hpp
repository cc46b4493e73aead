#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <toriglue/ring.hpp>

namespace toriglue {

/// Pure difference binomial x^plus - x^minus (always monic).  plus == minus
/// encodes the zero binomial; ideals never store it.  Stored toric generators
/// have disjoint supports, but intermediate elements of a Groebner run may
/// carry a common monomial factor and that factor is never removed silently.
struct Binomial {
    Monomial plus, minus;

    Binomial() = default;
    Binomial(Monomial p, Monomial m) : plus(std::move(p)), minus(std::move(m)) {
        if (plus.nvars() != minus.nvars())
            throw std::invalid_argument("binomial: mismatched variable counts");
    }

    static Binomial zero(std::size_t nvars) { return Binomial(Monomial(nvars), Monomial(nvars)); }

    std::size_t nvars() const { return plus.nvars(); }
    bool is_zero() const { return plus == minus; }
    bool has_disjoint_support() const { return gcd(plus, minus).is_one(); }

    /// Ensure plus is the leading term under `ord`.
    void orient(const MonomialOrder& ord) {
        if (ord.less(plus, minus)) std::swap(plus, minus);
    }

    Binomial oriented(const MonomialOrder& ord) const {
        Binomial b = *this;
        b.orient(ord);
        return b;
    }

    bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
    bool operator!=(const Binomial& o) const { return !(*this == o); }
};

/// Exponent-vector view: plus - minus as a signed vector.
inline std::vector<Exp> exponent_difference(const Binomial& b) {
    std::vector<Exp> d(b.nvars());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = b.plus.e[i] - b.minus.e[i];
    return d;
}

/// Binomial from a signed exponent vector: positive part minus negative part.
inline Binomial binomial_from_vector(const std::vector<Exp>& v) {
    Monomial p(v.size()), m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0)
            p.e[i] = v[i];
        else
            m.e[i] = -v[i];
    }
    return Binomial(std::move(p), std::move(m));
}

/// Total order used for deterministic sorting/dedup of binomial lists.
inline int compare_binomials(const Binomial& a, const Binomial& b, const MonomialOrder& ord) {
    if (int c = ord.compare(a.plus, b.plus)) return c;
    return ord.compare(a.minus, b.minus);
}

struct GroebnerBasis {
    RingContext ring;
    std::vector<Binomial> elements;  // reduced, sorted by descending leading term

    bool operator==(const GroebnerBasis& o) const {
        return ring == o.ring && elements == o.elements;
    }
};

/// Finitely generated binomial ideal.  Generators are nonzero, oriented for
/// the ring order, and deduplicated.  A reduced Groebner basis for the ring
/// order may be cached (immutable, shared across copies).
struct BinomialIdeal {
    RingContext ring;
    std::vector<Binomial> generators;
    mutable std::shared_ptr<const GroebnerBasis> cached_basis;

    BinomialIdeal() = default;
    explicit BinomialIdeal(RingContext r) : ring(std::move(r)) { ring.validate(); }

    BinomialIdeal(RingContext r, std::vector<Binomial> gens) : ring(std::move(r)) {
        ring.validate();
        for (auto& g : gens) add(std::move(g));
    }

    bool is_zero_ideal() const { return generators.empty(); }

    void add(Binomial g) {
        if (g.nvars() != ring.size())
            throw std::invalid_argument("ideal: generator has wrong variable count");
        if (g.is_zero()) return;
        g.orient(ring.monomial_order());
        if (std::find(generators.begin(), generators.end(), g) != generators.end()) return;
        generators.push_back(std::move(g));
        cached_basis.reset();
    }
};

// ---------------------------------------------------------------------------
// Printing.  One binomial per line, e.g. "x2^2*x4 - x1^2*x5"; ideals print in
// descending leading-term order so output is stable for golden files.
// ---------------------------------------------------------------------------

inline std::string to_string(const Monomial& m, const RingContext& ring) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) out << '*';
        out << ring.vars[i];
        if (m.e[i] > 1) out << '^' << m.e[i];
        first = false;
    }
    if (first) out << '1';
    return out.str();
}

inline std::string to_string(const Binomial& b, const RingContext& ring) {
    if (b.is_zero()) return "0";
    return to_string(b.plus, ring) + " - " + to_string(b.minus, ring);
}

inline std::vector<Binomial> sorted_for_print(std::vector<Binomial> gens, const MonomialOrder& ord) {
    std::sort(gens.begin(), gens.end(), [&](const Binomial& a, const Binomial& b) {
        return compare_binomials(a, b, ord) > 0;
    });
    return gens;
}

inline std::string to_string(const BinomialIdeal& ideal) {
    if (ideal.is_zero_ideal()) return "0\n";
    std::ostringstream out;
    for (const auto& g : sorted_for_print(ideal.generators, ideal.ring.monomial_order()))
        out << to_string(g, ideal.ring) << '\n';
    return out.str();
}

inline std::string to_string(const GroebnerBasis& gb) {
    if (gb.elements.empty()) return "0\n";
    std::ostringstream out;
    for (const auto& g : gb.elements) out << to_string(g, gb.ring) << '\n';
    return out.str();
}

}  // namespace toriglue
