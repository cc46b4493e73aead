#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace toriglue {

using Exp = long long;

/// Monomial as an exponent vector over a fixed set of ring variables.
struct Monomial {
    std::vector<Exp> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    Monomial(std::initializer_list<Exp> init) : e(init) {}

    std::size_t nvars() const { return e.size(); }
    Exp deg() const { return std::accumulate(e.begin(), e.end(), Exp{0}); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    /// this / o, assuming o divides this.
    Monomial divided_by(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

enum class OrderKind { grevlex, lex };

/*
 * Monomial orders.  `vars` lists variable indices from most to least
 * significant (empty means the natural order 0..n-1).  `weights` replaces the
 * standard grading for the degree comparison (empty means all ones).
 *
 * The grevlex tie-break is pure reverse lexicographic on the weighted-equal
 * classes: the last differing position with the *smaller* exponent wins.
 * That property is what makes the saturation divide-out step exact for
 * weighted-homogeneous ideals.
 */
class MonomialOrder {
public:
    OrderKind kind = OrderKind::grevlex;
    std::vector<Exp> weights;  // empty = standard grading
    std::vector<int> vars;     // empty = identity significance order

    static MonomialOrder grevlex(std::size_t) { return MonomialOrder{}; }
    static MonomialOrder lex(std::size_t) { return MonomialOrder{OrderKind::lex, {}, {}}; }

    /// Weighted grevlex with variable `cheapest` moved to the least
    /// significant position; the order used for saturation by that variable.
    static MonomialOrder saturating(std::size_t n, std::size_t cheapest,
                                    const std::vector<Exp>& weights) {
        MonomialOrder o;
        o.weights = weights;
        o.vars.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            if (i != cheapest) o.vars.push_back(static_cast<int>(i));
        o.vars.push_back(static_cast<int>(cheapest));
        return o;
    }

    __int128 weighted_deg(const Monomial& m) const {
        __int128 d = 0;
        if (weights.empty()) {
            for (Exp x : m.e) d += x;
        } else {
            for (std::size_t i = 0; i < m.e.size(); ++i)
                d += static_cast<__int128>(weights[i]) * m.e[i];
        }
        return d;
    }

    /// -1 if a < b, 0 if equal, 1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind == OrderKind::grevlex) {
            __int128 da = weighted_deg(a), db = weighted_deg(b);
            if (da != db) return da > db ? 1 : -1;
            if (vars.empty()) {
                for (std::size_t i = a.e.size(); i-- > 0;)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            } else {
                for (std::size_t k = vars.size(); k-- > 0;) {
                    const int i = vars[k];
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
                }
            }
            return 0;
        }
        // lex
        if (vars.empty()) {
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        } else {
            for (int i : vars)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Ambient polynomial ring: ordered variable names plus the order used for
/// canonical reduced bases.
struct RingContext {
    std::vector<std::string> vars;
    OrderKind order = OrderKind::grevlex;

    std::size_t size() const { return vars.size(); }

    MonomialOrder monomial_order() const {
        MonomialOrder o;
        o.kind = order;
        return o;
    }

    void validate() const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw std::invalid_argument("ring: duplicate variable name '" + vars[i] + "'");
    }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        throw std::invalid_argument("ring: unknown variable '" + name + "'");
    }

    bool operator==(const RingContext& o) const { return vars == o.vars && order == o.order; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }
};

/// k[x1..xn] with the default order.
inline RingContext standard_ring(std::size_t n, const std::string& stem = "x",
                                 OrderKind order = OrderKind::grevlex) {
    RingContext r;
    r.order = order;
    r.vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) r.vars.push_back(stem + std::to_string(i));
    return r;
}

}  // namespace toriglue
