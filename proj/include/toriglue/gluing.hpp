#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toriglue/linalg.hpp>
#include <toriglue/matrix.hpp>
#include <toriglue/toric.hpp>
#include <toriglue/transform.hpp>

namespace toriglue {

/// Choice of glue columns plus optional explicit row arrangements.  Row
/// permutations are listed new-position -> old-row; when absent they are
/// chosen deterministically so that a_np != 0, b_11 != 0 and the certificate
/// multipliers of those rows are positive.
struct GluingSpec {
    std::optional<std::size_t> col_a;  // default: last column of A
    std::optional<std::size_t> col_b;  // default: first column of B
    std::optional<std::vector<std::size_t>> row_perm_a, row_perm_b;
};

/// Output of the gluing construction: A and B embedded as A', B' with
/// n+m-1 rows, the concatenation C~ = (A'|B') whose columns p and p+1
/// coincide, and C with the duplicate column removed.
struct GluedResult {
    IntMatrix a_prime, b_prime, c_tilde, c;
    Int e;      // a_np - b_11 after rearrangement
    int delta;  // -1 if e <= 0, else 0
    Binomial glue_binomial;  // x_p - y_1 in ring_tilde
    RingContext ring_tilde;  // x1..xp, y1..yq
    RingContext ring_c;      // x1..x_{p-1}, z, y2..yq
    std::vector<std::size_t> col_order_a, col_order_b;  // position -> original column
    std::vector<std::size_t> row_order_a, row_order_b;  // position -> original row
};

enum class SplitStatus { ok, fail, unverified_budget };

struct SplitReport {
    SplitStatus status = SplitStatus::fail;
    bool rank_ok = false, height_ok = false, ideal_ok = false;
    std::size_t rank_a = 0, rank_b = 0, rank_c = 0;
    std::size_t height_a = 0, height_b = 0, height_c = 0;
    std::optional<GroebnerBasis> lhs, rhs;
    std::string note;

    bool ok() const { return status == SplitStatus::ok; }
};

namespace detail {

inline std::vector<std::size_t> default_col_order_last(std::size_t p, std::size_t col) {
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < p; ++j)
        if (j != col) order.push_back(j);
    order.push_back(col);
    return order;
}

inline std::vector<std::size_t> default_col_order_first(std::size_t q, std::size_t col) {
    std::vector<std::size_t> order{col};
    for (std::size_t j = 0; j < q; ++j)
        if (j != col) order.push_back(j);
    return order;
}

/// Deterministic row arrangement: keep the matrix as-is when the designated
/// row already satisfies entry != 0 and lambda > 0; otherwise move the
/// smallest qualifying row into place.
inline std::vector<std::size_t> arrange_rows(const IntMatrix& m, const IntVector& lambda,
                                             std::size_t col, bool target_last) {
    const std::size_t n = m.rows();
    const std::size_t target = target_last ? n - 1 : 0;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    if (m(target, col) != 0 && lambda[target] > 0) return order;
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, col) != 0 && lambda[i] > 0) {
            pick = i;
            break;
        }
    if (pick == n)
        throw std::invalid_argument("glue: no row with nonzero glue entry and positive multiplier");
    order.clear();
    if (!target_last) order.push_back(pick);
    for (std::size_t i = 0; i < n; ++i)
        if (i != pick) order.push_back(i);
    if (target_last) order.push_back(pick);
    return order;
}

inline IntMatrix permute_rows(const IntMatrix& m, const std::vector<std::size_t>& order) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(order[i], j);
    return out;
}

inline RingContext glued_ring_tilde(std::size_t p, std::size_t q) {
    RingContext r;
    for (std::size_t i = 1; i <= p; ++i) r.vars.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= q; ++i) r.vars.push_back("y" + std::to_string(i));
    return r;
}

inline RingContext glued_ring_c(std::size_t p, std::size_t q) {
    RingContext r;
    for (std::size_t i = 1; i + 1 <= p; ++i) r.vars.push_back("x" + std::to_string(i));
    r.vars.push_back("z");
    for (std::size_t i = 2; i <= q; ++i) r.vars.push_back("y" + std::to_string(i));
    return r;
}

}  // namespace detail

/// The embedding construction: glue <A> and <B> along one column of each.
/// Both matrices must be homogeneous over the natural numbers (nonnegativize
/// first).
inline GluedResult glue_homogeneous(const IntMatrix& a, const IntMatrix& b,
                                    const GluingSpec& spec = {}) {
    if (!is_nonnegative(a) || !is_nonnegative(b))
        throw std::invalid_argument("glue: matrices must be over the natural numbers");
    auto cert_a = homogeneity_certificate(a);
    auto cert_b = homogeneity_certificate(b);
    if (!cert_a || !cert_b) throw std::invalid_argument("glue: matrices must be homogeneous");

    const std::size_t n = a.rows(), p = a.cols(), m = b.rows(), q = b.cols();
    const std::size_t col_a = spec.col_a.value_or(p - 1);
    const std::size_t col_b = spec.col_b.value_or(0);
    if (col_a >= p || col_b >= q) throw std::invalid_argument("glue: column index out of range");

    GluedResult res;
    res.col_order_a = detail::default_col_order_last(p, col_a);
    res.col_order_b = detail::default_col_order_first(q, col_b);
    IntMatrix a1 = select_columns(a, res.col_order_a);
    IntMatrix b1 = select_columns(b, res.col_order_b);

    res.row_order_a = spec.row_perm_a ? *spec.row_perm_a
                                      : detail::arrange_rows(a1, cert_a->lambda, p - 1, true);
    res.row_order_b =
        spec.row_perm_b ? *spec.row_perm_b : detail::arrange_rows(b1, cert_b->lambda, 0, false);
    IntMatrix a2 = detail::permute_rows(a1, res.row_order_a);
    IntMatrix b2 = detail::permute_rows(b1, res.row_order_b);
    {
        IntVector la(n), lb(m);
        for (std::size_t i = 0; i < n; ++i) la[i] = cert_a->lambda[res.row_order_a[i]];
        for (std::size_t i = 0; i < m; ++i) lb[i] = cert_b->lambda[res.row_order_b[i]];
        if (a2(n - 1, p - 1) == 0 || la[n - 1] <= 0)
            throw std::invalid_argument("glue: row arrangement for A violates a_np != 0, lambda_n > 0");
        if (b2(0, 0) == 0 || lb[0] <= 0)
            throw std::invalid_argument("glue: row arrangement for B violates b_11 != 0, mu_1 > 0");
    }

    res.e = a2(n - 1, p - 1) - b2(0, 0);
    res.delta = res.e <= 0 ? -1 : 0;
    const Int shift_a = res.delta * res.e;        // added to the last row of A
    const Int shift_b = (1 + res.delta) * res.e;  // added to the first row of B

    res.a_prime = IntMatrix(n + m - 1, p);
    res.b_prime = IntMatrix(n + m - 1, q);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < p; ++j) res.a_prime(i, j) = a2(i, j);
    for (std::size_t j = 0; j < p; ++j) res.a_prime(n - 1, j) = a2(n - 1, j) + shift_a;
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < p; ++j) res.a_prime(n - 1 + i, j) = b2(i, 0);

    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < q; ++j) res.b_prime(i, j) = a2(i, p - 1);
    for (std::size_t j = 0; j < q; ++j) res.b_prime(n - 1, j) = b2(0, j) + shift_b;
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < q; ++j) res.b_prime(n - 1 + i, j) = b2(i, j);

    res.c_tilde = hcat(res.a_prime, res.b_prime);
    for (std::size_t i = 0; i < res.c_tilde.rows(); ++i)
        if (res.c_tilde(i, p - 1) != res.c_tilde(i, p))
            throw std::logic_error("glue: duplicated glue columns disagree");
    res.c = delete_column(res.c_tilde, p - 1);

    res.ring_tilde = detail::glued_ring_tilde(p, q);
    res.ring_c = detail::glued_ring_c(p, q);
    Monomial gp(p + q), gm(p + q);
    gp.e[p - 1] = 1;
    gm.e[p] = 1;
    res.glue_binomial = Binomial(std::move(gp), std::move(gm));
    return res;
}

namespace detail {

/// Injection of A's original variables into the glued rings.  Positions in C
/// agree with positions in C~ for the A block; the glue column maps to z.
inline std::vector<std::size_t> var_map_a(const GluedResult& g) {
    const std::size_t p = g.a_prime.cols();
    std::vector<std::size_t> map(p);
    for (std::size_t pos = 0; pos < p; ++pos) map[g.col_order_a[pos]] = pos;
    return map;
}

inline std::vector<std::size_t> var_map_b(const GluedResult& g, bool into_c) {
    const std::size_t p = g.a_prime.cols(), q = g.b_prime.cols();
    std::vector<std::size_t> map(q);
    const std::size_t base = into_c ? p - 1 : p;
    for (std::size_t pos = 0; pos < q; ++pos) map[g.col_order_b[pos]] = base + pos;
    return map;
}

template <typename F>
auto run_maybe_async(F&& f, int jobs) {
    using R = decltype(f());
    if (jobs > 1) return std::async(std::launch::async, std::forward<F>(f));
    std::promise<R> done;
    done.set_value(f());
    return done.get_future();
}

}  // namespace detail

/// Check Theorem thm:gluing on a constructed gluing: rank C~ = rank A +
/// rank B - 1 and I_C~ = I_A R + I_B R + <x_p - y_1>.
inline SplitReport verify_gluing(const IntMatrix& a, const IntMatrix& b, const GluedResult& g,
                                 Budget budget = {}, int jobs = 1) {
    SplitReport rep;
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);
    rep.rank_c = rank(g.c_tilde);
    rep.rank_ok = rep.rank_c == rep.rank_a + rep.rank_b - 1;
    rep.height_a = a.cols() - rep.rank_a;
    rep.height_b = b.cols() - rep.rank_b;
    rep.height_c = g.c_tilde.cols() - 1 - rep.rank_c;
    rep.height_ok = rep.height_c == rep.height_a + rep.height_b;
    try {
        auto lhs_task = detail::run_maybe_async(
            [&] { return toric_ideal(g.c_tilde, g.ring_tilde, budget); }, jobs);
        BinomialIdeal ia = toric_ideal(a, standard_ring(a.cols()), budget);
        BinomialIdeal ib = toric_ideal(b, standard_ring(b.cols(), "y"), budget);
        BinomialIdeal rhs = extend_ring(ia, g.ring_tilde, detail::var_map_a(g));
        rhs = ideal_sum(rhs, extend_ring(ib, g.ring_tilde, detail::var_map_b(g, false)));
        rhs.add(g.glue_binomial);
        BinomialIdeal lhs = lhs_task.get();
        rep.ideal_ok = ideal_equals(lhs, rhs, budget);
        rep.lhs = groebner_basis(lhs, budget);
        rep.rhs = groebner_basis(rhs, budget);
        rep.status = rep.ideal_ok && rep.rank_ok ? SplitStatus::ok : SplitStatus::fail;
    } catch (const BudgetExceeded& e) {
        rep.status = SplitStatus::unverified_budget;
        rep.note = e.what();
    }
    return rep;
}

struct SplitResult {
    GluedResult glued;
    SplitReport report;
};

/// Theorem thm:A+B=C: I_C = I_A' + I_B' for the glued matrix C with the
/// duplicated column removed, plus the height identity
/// height I_C = height I_A + height I_B.
inline SplitResult split_sum(const IntMatrix& a, const IntMatrix& b, const GluingSpec& spec = {},
                             Budget budget = {}, int jobs = 1) {
    SplitResult out{glue_homogeneous(a, b, spec), {}};
    const GluedResult& g = out.glued;
    SplitReport& rep = out.report;
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);
    rep.rank_c = rank(g.c);
    rep.rank_ok = rep.rank_c == rep.rank_a + rep.rank_b - 1;
    rep.height_a = a.cols() - rep.rank_a;
    rep.height_b = b.cols() - rep.rank_b;
    rep.height_c = g.c.cols() - rep.rank_c;
    rep.height_ok = rep.height_c == rep.height_a + rep.height_b;
    try {
        auto lhs_task =
            detail::run_maybe_async([&] { return toric_ideal(g.c, g.ring_c, budget); }, jobs);
        BinomialIdeal ia = toric_ideal(a, standard_ring(a.cols()), budget);
        BinomialIdeal ib = toric_ideal(b, standard_ring(b.cols(), "y"), budget);
        BinomialIdeal rhs = extend_ring(ia, g.ring_c, detail::var_map_a(g));
        rhs = ideal_sum(rhs, extend_ring(ib, g.ring_c, detail::var_map_b(g, true)));
        BinomialIdeal lhs = lhs_task.get();
        rep.ideal_ok = ideal_equals(lhs, rhs, budget);
        rep.lhs = groebner_basis(lhs, budget);
        rep.rhs = groebner_basis(rhs, budget);
        rep.status = rep.ideal_ok && rep.rank_ok && rep.height_ok ? SplitStatus::ok
                                                                  : SplitStatus::fail;
    } catch (const BudgetExceeded& e) {
        rep.status = SplitStatus::unverified_budget;
        rep.note = e.what();
    }
    return out;
}

/// The two-dimensional glue: inputs in two-row normal form
/// [[1..1],[0,a_1..a_{p-1}]] combine into a 3 x (p+q-1) matrix whose middle
/// row is all ones.
inline IntMatrix glue_2d(const IntMatrix& a, const IntMatrix& b) {
    if (!is_two_dim_normal_form(a) || !is_two_dim_normal_form(b))
        throw std::invalid_argument("glue_2d: inputs must be in two-row normal form");
    const std::size_t p = a.cols(), q = b.cols();
    IntMatrix c(3, p + q - 1);
    for (std::size_t j = 0; j + 1 < p; ++j) c(0, j) = a(1, j + 1);
    for (std::size_t j = 0; j < p + q - 1; ++j) c(1, j) = 1;
    for (std::size_t j = 0; j + 1 < q; ++j) c(2, p + j) = b(1, j + 1);
    return c;
}

/// Split check for a glue_2d matrix: I_C against the toric ideals of its two
/// column blocks (which are copies of I_A and I_B).
inline SplitReport verify_glue_2d(const IntMatrix& a, const IntMatrix& b, Budget budget = {},
                                  int jobs = 1) {
    IntMatrix c = glue_2d(a, b);
    const std::size_t p = a.cols(), q = b.cols();
    SplitReport rep;
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);
    rep.rank_c = rank(c);
    rep.rank_ok = rep.rank_c == rep.rank_a + rep.rank_b - 1;
    rep.height_a = p - rep.rank_a;
    rep.height_b = q - rep.rank_b;
    rep.height_c = c.cols() - rep.rank_c;
    rep.height_ok = rep.height_c == rep.height_a + rep.height_b;
    RingContext ring = detail::glued_ring_c(p, q);
    try {
        auto lhs_task =
            detail::run_maybe_async([&] { return toric_ideal(c, ring, budget); }, jobs);
        std::vector<std::size_t> acols(p), bcols(q);
        for (std::size_t j = 0; j < p; ++j) acols[j] = j;
        for (std::size_t j = 0; j < q; ++j) bcols[j] = p - 1 + j;
        BinomialIdeal ia = toric_ideal(select_columns(c, acols), budget);
        BinomialIdeal ib = toric_ideal(select_columns(c, bcols), budget);
        BinomialIdeal rhs = extend_ring(ia, ring, acols);
        rhs = ideal_sum(rhs, extend_ring(ib, ring, bcols));
        BinomialIdeal lhs = lhs_task.get();
        rep.ideal_ok = ideal_equals(lhs, rhs, budget);
        rep.lhs = groebner_basis(lhs, budget);
        rep.rhs = groebner_basis(rhs, budget);
        rep.status = rep.ideal_ok && rep.rank_ok && rep.height_ok ? SplitStatus::ok
                                                                  : SplitStatus::fail;
    } catch (const BudgetExceeded& e) {
        rep.status = SplitStatus::unverified_budget;
        rep.note = e.what();
    }
    return rep;
}

/// Gluing of the homogenizations of two arbitrary matrices over N: the
/// (m+n+1) x (p+q-1) block matrix with A, a row of ones, and B overlapped on
/// the shared column.  I_C = I_{A^H} + I_{B^H} embedded.
inline IntMatrix glue_sifts(const IntMatrix& a, const IntMatrix& b) {
    GluedResult g = glue_homogeneous(homogenize(a), homogenize(b));
    return g.c;
}

/// The splitting identity for glue_sifts: I_C equals the sum of the embedded
/// homogeneous sifts, of height (height I_A - 1) + (height I_B - 1).
inline SplitReport verify_sift_glue(const IntMatrix& a, const IntMatrix& b, Budget budget = {},
                                    int jobs = 1) {
    return split_sum(homogenize(a), homogenize(b), {}, budget, jobs).report;
}

// ---------------------------------------------------------------------------
// Numerical semigroups: selfgluing and iterated gluing.
// ---------------------------------------------------------------------------

/// Bounded coin-problem membership: one representation of k over the columns
/// of a 1 x p matrix of positive generators, or nothing.
inline std::optional<std::vector<Exp>> semigroup_representation(const IntMatrix& gens,
                                                                const Int& k) {
    if (gens.rows() != 1) throw std::invalid_argument("semigroup: need a 1-row matrix");
    const std::size_t p = gens.cols();
    for (std::size_t j = 0; j < p; ++j)
        if (gens(0, j) <= 0) throw std::invalid_argument("semigroup: generators must be positive");
    if (k < 0) return std::nullopt;
    if (k == 0) return std::vector<Exp>(p, 0);
    if (!k.fits_slong_p() || k.get_si() > 20'000'000)
        throw std::invalid_argument("semigroup: membership bound too large");
    const long kk = k.get_si();
    std::vector<long> gv(p);
    for (std::size_t j = 0; j < p; ++j) {
        if (!gens(0, j).fits_slong_p())
            throw std::invalid_argument("semigroup: generator too large");
        gv[j] = gens(0, j).get_si();
    }
    std::vector<int> choice(static_cast<std::size_t>(kk) + 1, -1);
    choice[0] = static_cast<int>(p);  // sentinel: reached
    for (long v = 1; v <= kk; ++v)
        for (std::size_t j = 0; j < p; ++j)
            if (gv[j] <= v && choice[v - gv[j]] >= 0) {
                choice[v] = static_cast<int>(j);
                break;
            }
    if (choice[kk] < 0) return std::nullopt;
    std::vector<Exp> rep(p, 0);
    for (long v = kk; v > 0;) {
        int j = choice[v];
        ++rep[j];
        v -= gv[j];
    }
    return rep;
}

/// One pairwise numerical gluing C = k_left*L union k_right*R.  If some
/// k_left*L[i] = k_right*R[j] the duplicate column is merged (splitting case,
/// the glue binomial was linear); otherwise the glue binomial expresses
/// k_right over the left copy and k_left over the right copy.
struct NumericalGlueResult {
    IntMatrix c;  // 1 x (p+q) or 1 x (p+q-1)
    bool merged = false;
    std::size_t merged_left = 0, merged_right = 0;
    std::optional<Binomial> glue_binomial;              // in C's positional ring
    std::vector<std::size_t> left_cols, right_cols;     // positions in C
};

inline NumericalGlueResult numerical_glue(const IntMatrix& left, const IntMatrix& right,
                                          const Int& k_left, const Int& k_right) {
    if (left.rows() != 1 || right.rows() != 1)
        throw std::invalid_argument("numerical_glue: inputs must be 1-row matrices");
    if (content(left.row(0)) != 1 || content(right.row(0)) != 1)
        throw std::invalid_argument("numerical_glue: generator gcds must be 1");
    if (k_left <= 0 || k_right <= 0)
        throw std::invalid_argument("numerical_glue: multipliers must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), k_left.get_mpz_t(), k_right.get_mpz_t());
    if (g != 1) throw std::invalid_argument("numerical_glue: multipliers must be coprime");
    auto rep_left = semigroup_representation(left, k_right);
    if (!rep_left)
        throw std::invalid_argument("numerical_glue: k2 = " + k_right.get_str() +
                                    " is not in the left semigroup");
    auto rep_right = semigroup_representation(right, k_left);
    if (!rep_right)
        throw std::invalid_argument("numerical_glue: k1 = " + k_left.get_str() +
                                    " is not in the right semigroup");

    const std::size_t p = left.cols(), q = right.cols();
    NumericalGlueResult res;
    // detect a duplicate column: k_left*L[i] == k_right*R[j], smallest (i, j)
    for (std::size_t i = 0; i < p && !res.merged; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (k_left * left(0, i) == k_right * right(0, j)) {
                res.merged = true;
                res.merged_left = i;
                res.merged_right = j;
                break;
            }

    const std::size_t total = p + q - (res.merged ? 1 : 0);
    res.c = IntMatrix(1, total);
    res.left_cols.resize(p);
    res.right_cols.resize(q);
    for (std::size_t i = 0; i < p; ++i) {
        res.c(0, i) = k_left * left(0, i);
        res.left_cols[i] = i;
    }
    std::size_t pos = p;
    for (std::size_t j = 0; j < q; ++j) {
        if (res.merged && j == res.merged_right) {
            res.right_cols[j] = res.merged_left;
            continue;
        }
        res.c(0, pos) = k_right * right(0, j);
        res.right_cols[j] = pos;
        ++pos;
    }
    if (!res.merged) {
        Monomial mp(total), mm(total);
        for (std::size_t i = 0; i < p; ++i) mp.e[res.left_cols[i]] = (*rep_left)[i];
        for (std::size_t j = 0; j < q; ++j) mm.e[res.right_cols[j]] = (*rep_right)[j];
        res.glue_binomial = Binomial(std::move(mp), std::move(mm));
        res.glue_binomial->orient(MonomialOrder::grevlex(total));
    }
    return res;
}

/// Glue a numerical semigroup with itself: C = k1*A union k2*A.
inline NumericalGlueResult self_glue_numerical(const IntMatrix& a, const Int& k1, const Int& k2) {
    return numerical_glue(a, a, k1, k2);
}

/// Left fold of pairwise numerical gluings; multipliers[s] = (k for the
/// accumulated part, k' for parts[s+1]).
struct IteratedGlueResult {
    IntMatrix matrix;                                // 1 x N
    std::vector<std::vector<std::size_t>> part_cols; // per part, positions in matrix
    std::vector<Binomial> glue_binomials;            // in the final positional ring
    std::vector<bool> shared;                        // positions that absorbed a merge
};

inline IteratedGlueResult iterate_glue(const std::vector<IntMatrix>& parts,
                                       const std::vector<std::pair<Int, Int>>& multipliers) {
    if (parts.empty()) throw std::invalid_argument("iterate_glue: need at least one part");
    if (multipliers.size() + 1 != parts.size())
        throw std::invalid_argument("iterate_glue: need one multiplier pair per gluing step");
    IteratedGlueResult res;
    res.matrix = parts[0];
    res.part_cols.push_back({});
    for (std::size_t j = 0; j < parts[0].cols(); ++j) res.part_cols[0].push_back(j);
    res.shared.assign(parts[0].cols(), false);

    for (std::size_t s = 0; s < multipliers.size(); ++s) {
        NumericalGlueResult step =
            numerical_glue(res.matrix, parts[s + 1], multipliers[s].first, multipliers[s].second);
        // accumulated positions are unchanged (the left block leads)
        res.part_cols.push_back(step.right_cols);
        res.shared.resize(step.c.cols(), false);
        if (step.merged) res.shared[step.merged_left] = true;
        for (auto& bin : res.glue_binomials) {
            bin.plus.e.resize(step.c.cols(), 0);
            bin.minus.e.resize(step.c.cols(), 0);
        }
        if (step.glue_binomial) res.glue_binomials.push_back(*step.glue_binomial);
        res.matrix = step.c;
    }
    return res;
}

/// Ring for an iterated numerical gluing: parts are lettered x, y, z, w, ...
/// and a merged (shared) column is called z.
inline RingContext numerical_glue_ring(const IteratedGlueResult& g) {
    static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
    RingContext ring;
    ring.vars.assign(g.matrix.cols(), "");
    std::size_t shared_seen = 0;
    for (std::size_t pos = 0; pos < g.matrix.cols(); ++pos) {
        if (g.shared[pos]) {
            ring.vars[pos] = std::string(++shared_seen, 'z');  // z, zz, ...
            continue;
        }
        for (std::size_t part = 0; part < g.part_cols.size(); ++part)
            for (std::size_t j = 0; j < g.part_cols[part].size(); ++j)
                if (g.part_cols[part][j] == pos && ring.vars[pos].empty()) {
                    std::string stem = part < 6 ? letters[part] : "p" + std::to_string(part + 1) + "_";
                    ring.vars[pos] = stem + std::to_string(j + 1);
                }
    }
    ring.validate();
    return ring;
}

/// Verify I_C = I_{A_1} + ... + I_{A_k} + <glue binomials> for an iterated
/// numerical gluing.
inline SplitReport verify_numerical_glue(const std::vector<IntMatrix>& parts,
                                         const IteratedGlueResult& g, Budget budget = {},
                                         int jobs = 1) {
    SplitReport rep;
    RingContext ring = numerical_glue_ring(g);
    rep.rank_c = rank(g.matrix);
    rep.rank_ok = rep.rank_c == 1;
    rep.height_c = g.matrix.cols() - rep.rank_c;
    std::size_t expected_height = g.glue_binomials.size();
    for (const auto& part : parts) expected_height += part.cols() - 1;
    rep.height_ok = rep.height_c == expected_height;
    try {
        auto lhs_task =
            detail::run_maybe_async([&] { return toric_ideal(g.matrix, ring, budget); }, jobs);
        BinomialIdeal rhs(ring);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            BinomialIdeal part = toric_ideal(parts[i], standard_ring(parts[i].cols()), budget);
            rhs = ideal_sum(rhs, extend_ring(part, ring, g.part_cols[i]));
        }
        for (const auto& bin : g.glue_binomials) rhs.add(bin);
        BinomialIdeal lhs = lhs_task.get();
        rep.ideal_ok = ideal_equals(lhs, rhs, budget);
        rep.lhs = groebner_basis(lhs, budget);
        rep.rhs = groebner_basis(rhs, budget);
        rep.status = rep.ideal_ok && rep.height_ok ? SplitStatus::ok : SplitStatus::fail;
    } catch (const BudgetExceeded& e) {
        rep.status = SplitStatus::unverified_budget;
        rep.note = e.what();
    }
    return rep;
}

}  // namespace toriglue
