#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toriglue/linalg.hpp>
#include <toriglue/matrix.hpp>
#include <toriglue/toric.hpp>

namespace toriglue {

/*
 * The equivalence calculus on homogeneous matrices: row operations that do
 * not change the associated toric ideal.  scale/simplify/add_multiple are
 * unconditional (they hold in the non-homogeneous case too); shift needs a
 * homogeneity certificate (lambda, d) with d + lambda_row * s != 0;
 * append_constant_row needs homogeneity but no guard.
 */

enum class RowOpKind { scale, simplify, add_multiple, shift, append_constant_row };

struct RowOperation {
    RowOpKind kind;
    std::size_t row = 0;  // target row (dst for add_multiple)
    std::size_t src = 0;  // source row for add_multiple
    Int value;            // factor / summand / constant

    static RowOperation scale(std::size_t row, Int c) {
        return {RowOpKind::scale, row, 0, std::move(c)};
    }
    static RowOperation simplify(std::size_t row, Int f) {
        return {RowOpKind::simplify, row, 0, std::move(f)};
    }
    static RowOperation add_multiple(std::size_t src, std::size_t dst, Int k) {
        return {RowOpKind::add_multiple, dst, src, std::move(k)};
    }
    static RowOperation shift(std::size_t row, Int s) {
        return {RowOpKind::shift, row, 0, std::move(s)};
    }
    static RowOperation append_constant_row(Int c) {
        return {RowOpKind::append_constant_row, 0, 0, std::move(c)};
    }
};

inline std::string to_string(const RowOperation& op) {
    std::ostringstream out;
    switch (op.kind) {
        case RowOpKind::scale:
            out << "scale row " << op.row + 1 << " by " << op.value;
            break;
        case RowOpKind::simplify:
            out << "simplify row " << op.row + 1 << " by " << op.value;
            break;
        case RowOpKind::add_multiple:
            out << "add " << op.value << " * row " << op.src + 1 << " to row " << op.row + 1;
            break;
        case RowOpKind::shift:
            out << "shift row " << op.row + 1 << " by " << op.value;
            break;
        case RowOpKind::append_constant_row:
            out << "append constant row " << op.value;
            break;
    }
    return out.str();
}

inline IntMatrix apply(const RowOperation& op, const IntMatrix& m,
                       const std::optional<HomogeneityCertificate>& cert = std::nullopt) {
    IntMatrix out = m;
    switch (op.kind) {
        case RowOpKind::scale: {
            if (op.value == 0) throw std::invalid_argument("apply: scale factor must be nonzero");
            if (op.row >= m.rows()) throw std::invalid_argument("apply: row out of range");
            for (std::size_t j = 0; j < m.cols(); ++j) out(op.row, j) *= op.value;
            return out;
        }
        case RowOpKind::simplify: {
            if (op.value == 0) throw std::invalid_argument("apply: simplify factor must be nonzero");
            if (op.row >= m.rows()) throw std::invalid_argument("apply: row out of range");
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m(op.row, j) % op.value != 0)
                    throw std::invalid_argument("apply: factor does not divide row entries");
                out(op.row, j) = m(op.row, j) / op.value;
            }
            return out;
        }
        case RowOpKind::add_multiple: {
            if (op.row >= m.rows() || op.src >= m.rows())
                throw std::invalid_argument("apply: row out of range");
            if (op.row == op.src)
                throw std::invalid_argument("apply: add_multiple needs distinct rows");
            for (std::size_t j = 0; j < m.cols(); ++j) out(op.row, j) += op.value * m(op.src, j);
            return out;
        }
        case RowOpKind::shift: {
            if (op.row >= m.rows()) throw std::invalid_argument("apply: row out of range");
            if (!cert) throw std::invalid_argument("apply: shift requires a homogeneity certificate");
            if (!cert->holds_for(m))
                throw std::invalid_argument("apply: certificate does not hold for this matrix");
            if (cert->degree + cert->lambda[op.row] * op.value == 0)
                throw std::invalid_argument("apply: shift violates guard d + lambda_i * s != 0");
            for (std::size_t j = 0; j < m.cols(); ++j) out(op.row, j) += op.value;
            return out;
        }
        case RowOpKind::append_constant_row: {
            out.append_row(IntVector(m.cols(), op.value));
            return out;
        }
    }
    throw std::logic_error("apply: unknown operation");
}

/// Replayable derivation: applying `ops` to `start` and then permuting the
/// columns by `column_order` (identity when empty) yields `end`.
struct EquivalenceTrace {
    IntMatrix start;
    std::vector<RowOperation> ops;
    IntMatrix end;
    std::vector<std::size_t> column_order;  // position k holds old column column_order[k]
};

inline IntMatrix replay(const EquivalenceTrace& trace) {
    IntMatrix m = trace.start;
    for (const auto& op : trace.ops) {
        auto cert = homogeneity_certificate(m);
        m = apply(op, m, cert);
    }
    if (!trace.column_order.empty()) m = select_columns(m, trace.column_order);
    return m;
}

inline std::string to_string(const EquivalenceTrace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.ops.size(); ++i)
        out << i + 1 << ". " << to_string(trace.ops[i]) << '\n';
    if (!trace.column_order.empty()) {
        out << trace.ops.size() + 1 << ". reorder columns (";
        for (std::size_t k = 0; k < trace.column_order.size(); ++k) {
            if (k) out << ' ';
            out << trace.column_order[k] + 1;
        }
        out << ")\n";
    }
    return out.str();
}

/// Shift every row of a homogeneous matrix by a common z >= 0 so all entries
/// become nonnegative.  z is minimal such that no intermediate certificate
/// degree d + z*(lambda_1+...+lambda_k) vanishes; when the guard fails for
/// some z the next value is taken.
inline std::pair<IntMatrix, EquivalenceTrace> normalize_nonnegative(const IntMatrix& m) {
    auto cert = homogeneity_certificate(m);
    if (!cert) throw std::invalid_argument("normalize_nonnegative: matrix is not homogeneous");

    Int z = min_entry(m) < 0 ? Int(-min_entry(m)) : Int(0);
    auto guard_ok = [&](const Int& cand) {
        Int partial = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            partial += cert->lambda[i];
            if (cert->degree + cand * partial == 0) return false;
        }
        return true;
    };
    while (!guard_ok(z)) ++z;

    EquivalenceTrace trace;
    trace.start = m;
    IntMatrix out = m;
    if (z > 0) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            trace.ops.push_back(RowOperation::shift(i, z));
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += z;
        }
    }
    trace.end = out;
    return {out, trace};
}

/// Homogenization A^H: append a row of ones.  rank(A^H) = rank(A) + 1 unless
/// A is already homogeneous.
inline IntMatrix homogenize(const IntMatrix& m) {
    if (!is_nonnegative(m)) throw std::invalid_argument("homogenize: entries must be nonnegative");
    IntMatrix out = m;
    out.append_row(IntVector(m.cols(), 1));
    return out;
}

/// Homogeneous sift (I_A)* = I_{A^H}: the largest homogeneous ideal contained
/// in I_A, in the same variables.
inline BinomialIdeal homogeneous_sift(const IntMatrix& m, RingContext ring, Budget budget = {}) {
    return toric_ideal(homogenize(m), std::move(ring), budget);
}

inline BinomialIdeal homogeneous_sift(const IntMatrix& m, Budget budget = {}) {
    return homogeneous_sift(m, standard_ring(m.cols()), budget);
}

/// A ~ B, operationalized as equality of toric ideals under the positional
/// variable identification (row operations never touch columns).
inline bool equivalent(const IntMatrix& a, const IntMatrix& b, Budget budget = {}) {
    if (a.cols() != b.cols()) throw std::invalid_argument("equivalent: column count mismatch");
    RingContext ring = standard_ring(a.cols());
    return ideal_equals(toric_ideal(a, ring, budget), toric_ideal(b, ring, budget), budget);
}

inline bool is_two_dim_normal_form(const IntMatrix& m) {
    if (m.rows() != 2) return false;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(0, j) != 1) return false;
    if (m(1, 0) != 0) return false;
    for (std::size_t j = 0; j + 1 < m.cols(); ++j)
        if (m(1, j) > m(1, j + 1)) return false;
    return true;
}

/// The two-row reduction: every homogeneous 2 x p matrix is equivalent to
/// [[1,...,1],[0,a_1,...,a_{p-1}]] with the second row nondecreasing, i.e. the
/// semigroup ring is the one of a numerical semigroup.  Ties in the column
/// sort break by original column index.
inline std::pair<IntMatrix, EquivalenceTrace> two_dim_normal_form(const IntMatrix& m) {
    if (m.rows() != 2) throw std::invalid_argument("two_dim_normal_form: need exactly 2 rows");
    if (!homogeneity_certificate(m))
        throw std::invalid_argument("two_dim_normal_form: matrix is not homogeneous");

    EquivalenceTrace trace;
    trace.start = m;
    IntMatrix cur = m;
    auto push = [&](RowOperation op) {
        cur = apply(op, cur, homogeneity_certificate(cur));
        trace.ops.push_back(std::move(op));
    };
    auto row_content = [&](std::size_t i) { return content(cur.row(i)); };

    // make rows coprime
    for (std::size_t i = 0; i < 2; ++i) {
        Int g = row_content(i);
        if (g > 1) push(RowOperation::simplify(i, g));
    }
    auto cert = homogeneity_certificate(cur);
    if (cert->lambda[0] == 0) {
        // swap rows with type (1) operations so that lambda_1 != 0
        push(RowOperation::add_multiple(1, 0, 1));
        push(RowOperation::add_multiple(0, 1, -1));
        push(RowOperation::scale(1, -1));
        push(RowOperation::add_multiple(1, 0, -1));
        cert = homogeneity_certificate(cur);
    }
    if (cert->lambda[1] == 0) {
        // first row is constant d / lambda_1; normalize it to ones
        if (cur(0, 0) != 1) push(RowOperation::simplify(0, cur(0, 0)));
    } else {
        // row1 <- lambda_1*row1 + lambda_2*row2 = (d,...,d), then divide by d
        if (cert->lambda[0] != 1) push(RowOperation::scale(0, cert->lambda[0]));
        push(RowOperation::add_multiple(1, 0, cert->lambda[1]));
        if (cur(0, 0) != 1) push(RowOperation::simplify(0, cur(0, 0)));
    }
    // shift the second row's minimum to 0 (guard is 1 + 0*s, always legal)
    Int lo = cur(1, 0);
    for (std::size_t j = 1; j < cur.cols(); ++j)
        if (cur(1, j) < lo) lo = cur(1, j);
    if (lo != 0) push(RowOperation::shift(1, -lo));
    Int g = row_content(1);
    if (g > 1) push(RowOperation::simplify(1, g));

    // sort columns so the second row is nondecreasing
    std::vector<std::size_t> order(cur.cols());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cur(1, a) < cur(1, b); });
    bool identity = true;
    for (std::size_t j = 0; j < order.size(); ++j)
        if (order[j] != j) identity = false;
    if (!identity) {
        trace.column_order = order;
        cur = select_columns(cur, order);
    }
    trace.end = cur;
    return {cur, trace};
}

}  // namespace toriglue
