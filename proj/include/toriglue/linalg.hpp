#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <toriglue/matrix.hpp>

namespace toriglue {

/*
 * Exact integer linear algebra.
 *
 * rank() uses fraction-free (Bareiss) elimination: the one-step identity
 * a'(i,j) = (a(r,c)*a(i,j) - a(i,c)*a(r,j)) / prev_pivot keeps every
 * intermediate entry an exact minor of the input, so division is always
 * exact and entry growth stays polynomial.  Pivots are chosen with the
 * smallest nonzero magnitude; the rank does not depend on the choice.
 */

inline std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (a(i, c) == 0) continue;
            if (piv == nr || mpz_cmpabs(a(i, c).get_mpz_t(), a(piv, c).get_mpz_t()) < 0) piv = i;
        }
        if (piv == nr) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

struct HermiteResult {
    IntMatrix h;       // row-style Hermite normal form of the input
    IntMatrix u;       // unimodular transform with u * input = h
    std::size_t rank;  // number of nonzero rows of h
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot).  Deterministic and unique for a given row space.
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = identity_matrix(m.rows());
    const std::size_t nr = h.rows(), nc = h.cols();

    auto sub_multiple = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < nc; ++j) h(dst, j) -= q * h(src, j);
        for (std::size_t j = 0; j < nr; ++j) u(dst, j) -= q * u(src, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < nc; ++j) h(i, j) = -h(i, j);
        for (std::size_t j = 0; j < nr; ++j) u(i, j) = -u(i, j);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // gcd elimination below row r in column c
        while (true) {
            std::size_t piv = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (h(i, c) == 0) continue;
                if (piv == nr || mpz_cmpabs(h(i, c).get_mpz_t(), h(piv, c).get_mpz_t()) < 0) piv = i;
            }
            if (piv == nr) break;
            if (piv != r) {
                h.swap_rows(r, piv);
                u.swap_rows(r, piv);
            }
            if (h(r, c) < 0) negate_row(r);
            bool below = false;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                sub_multiple(i, r, q);
                if (h(i, c) != 0) below = true;
            }
            if (!below) break;
        }
        if (h(r, c) != 0) {
            for (std::size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                sub_multiple(i, r, q);
            }
            ++r;
        }
    }
    return {std::move(h), std::move(u), r};
}

/// Basis of the saturated kernel lattice {v in Z^cols : M v = 0}, in a unique
/// echelon (Hermite) form.  Basis size is cols - rank(M).
inline std::vector<IntVector> kernel_lattice_basis(const IntMatrix& m) {
    HermiteResult ht = hermite_normal_form(transpose(m));
    const std::size_t p = m.cols();
    if (ht.rank == p) return {};
    IntMatrix k(p - ht.rank, p);
    for (std::size_t i = ht.rank; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            k(i - ht.rank, j) = ht.u(i, j);
    HermiteResult canon = hermite_normal_form(k);
    std::vector<IntVector> basis;
    basis.reserve(canon.rank);
    for (std::size_t i = 0; i < canon.rank; ++i) basis.push_back(canon.h.row(i));
    return basis;
}

/// Witness for homogeneity: lambda^T * M = degree * (1,...,1) with degree > 0.
/// Neither lambda nor degree is unique; this stores one canonical witness,
/// integral with content 1.
struct HomogeneityCertificate {
    IntVector lambda;
    Int degree;

    bool holds_for(const IntMatrix& m) const {
        if (lambda.size() != m.rows() || degree <= 0) return false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) s += lambda[i] * m(i, j);
            if (s != degree) return false;
        }
        return true;
    }
};

/// Solves lambda^T M = d*(1,...,1) over Q by Gaussian elimination with
/// deterministic pivoting (free variables set to 0), then clears denominators.
/// Returns nothing when M is not homogeneous.
inline std::optional<HomogeneityCertificate> homogeneity_certificate(const IntMatrix& m) {
    const std::size_t n = m.rows(), p = m.cols();
    // One equation per column: sum_i lambda_i m(i,j) = 1.
    Matrix<Rat> sys(p, n + 1);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < n; ++i) sys(j, i) = Rat(m(i, j));
        sys(j, n) = 1;
    }

    std::vector<std::size_t> pivot_row(n, static_cast<std::size_t>(-1));
    std::size_t r = 0;
    for (std::size_t k = 0; k < n && r < p; ++k) {
        std::size_t piv = p;
        for (std::size_t i = r; i < p; ++i)
            if (sys(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv == p) continue;
        sys.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < p; ++i) {
            if (sys(i, k) == 0) continue;
            Rat f = sys(i, k) / sys(r, k);
            for (std::size_t j = k; j <= n; ++j) sys(i, j) -= f * sys(r, j);
        }
        pivot_row[k] = r;
        ++r;
    }
    for (std::size_t i = r; i < p; ++i)
        if (sys(i, n) != 0) return std::nullopt;  // inconsistent

    std::vector<Rat> lambda(n, Rat(0));
    for (std::size_t k = n; k-- > 0;) {
        if (pivot_row[k] == static_cast<std::size_t>(-1)) continue;  // free -> 0
        const std::size_t row = pivot_row[k];
        Rat acc = sys(row, n);
        for (std::size_t k2 = k + 1; k2 < n; ++k2) acc -= sys(row, k2) * lambda[k2];
        lambda[k] = acc / sys(row, k);
    }

    // clear denominators and reduce to content 1; d = lcm of denominators > 0
    Int denlcm = 1;
    for (const Rat& q : lambda)
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), q.get_den().get_mpz_t());
    HomogeneityCertificate cert;
    cert.degree = denlcm;
    cert.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat scaled = lambda[i] * Rat(denlcm);
        cert.lambda[i] = scaled.get_num();  // denominator is 1 by construction
    }
    Int g = cert.degree;
    for (const Int& x : cert.lambda) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        cert.degree /= g;
        for (Int& x : cert.lambda) x /= g;
    }
    return cert;
}

}  // namespace toriglue
