#pragma once

#include <string>
#include <vector>

#include "glin/rational.hpp"
#include "glin/span.hpp"

namespace glin {

/// Exact rational matrix indexed by canonical orientable-component basepoints.
struct RationalMatrix {
    std::vector<std::string> row_basis;
    std::vector<std::string> col_basis;
    std::vector<std::vector<Rational>> entries;  // entries[r][c]

    int rows() const { return static_cast<int>(row_basis.size()); }
    int cols() const { return static_cast<int>(col_basis.size()); }

    bool operator==(const RationalMatrix& o) const {
        return row_basis == o.row_basis && col_basis == o.col_basis && entries == o.entries;
    }
};

struct RationalVector {
    std::vector<std::string> basis;
    std::vector<Rational> entries;

    bool operator==(const RationalVector& o) const { return basis == o.basis && entries == o.entries; }
};

/// Canonical basepoints: representatives of the orientable components, in
/// canonical (lexicographic representative id) order.
inline std::vector<int> orientable_basepoints(const ParityGroupoid& pg) {
    std::vector<int> base;
    for (const auto& c : pi0(pg))
        if (c.orientable) base.push_back(c.representative);
    return base;
}

inline RationalMatrix matrix_of_span(const PSpan& sp) {
    RationalMatrix m;
    auto rows = orientable_basepoints(sp.left_foot);
    auto cols = orientable_basepoints(sp.right_foot);
    for (int i : rows) m.row_basis.push_back(sp.left_foot.g.object_id(i));
    for (int j : cols) m.col_basis.push_back(sp.right_foot.g.object_id(j));
    m.entries.assign(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) {
            int j = cols[c];
            Rational card = scalar_cardinality(two_sided_fiber(sp, rows[r], j));
            m.entries[r][c] = card / Rational(static_cast<long long>(sp.right_foot.g.hom(j, j).size()));
        }
    return m;
}

inline RationalVector vector_of_state(const State& st) {
    RationalVector v;
    for (int j : orientable_basepoints(st.right_foot)) {
        v.basis.push_back(st.right_foot.g.object_id(j));
        v.entries.push_back(projection_coefficient(st, j));
    }
    return v;
}

inline RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.col_basis != b.row_basis)
        throw std::invalid_argument("matrix_multiply: inner bases do not match");
    RationalMatrix m;
    m.row_basis = a.row_basis;
    m.col_basis = b.col_basis;
    m.entries.assign(a.rows(), std::vector<Rational>(b.cols(), Rational(0)));
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k)
            for (int c = 0; c < b.cols(); ++c)
                m.entries[r][c] += a.entries[r][k] * b.entries[k][c];
    return m;
}

struct FunctorialityResult {
    bool ok = false;
    std::string detail;  // counterexample description when !ok
};

/// Checks matrix_of_span(compose(a,b)) == matrix_of_span(a)·matrix_of_span(b)
/// by exact comparison.
inline FunctorialityResult check_functoriality(const PSpan& a, const PSpan& b) {
    FunctorialityResult res;
    RationalMatrix lhs = matrix_of_span(compose(a, b));
    RationalMatrix rhs = matrix_multiply(matrix_of_span(a), matrix_of_span(b));
    if (lhs == rhs) {
        res.ok = true;
        return res;
    }
    for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c)
            if (lhs.entries[r][c] != rhs.entries[r][c]) {
                res.detail = "entry (" + lhs.row_basis[r] + "," + lhs.col_basis[c] + "): composite " +
                             to_string(lhs.entries[r][c]) + " vs product " + to_string(rhs.entries[r][c]);
                return res;
            }
    res.detail = "basis mismatch";
    return res;
}

namespace detail {

inline Rational det_leibniz(const RationalMatrix& m) {
    int n = m.rows();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rational det = 0;
    // iterate permutations in lexicographic order, recomputing the sign by
    // inversion count (n ≤ 6, at most 720 terms)
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j2 = i + 1; j2 < n; ++j2)
                if (perm[i] > perm[j2]) ++inv;
        Rational term = (inv % 2 == 0) ? Rational(1) : Rational(-1);
        for (int i = 0; i < n; ++i) term *= m.entries[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Fraction-free Bareiss elimination: clear denominators row-wise, run the
/// integer algorithm, divide the scale factors back out.
inline Rational det_bareiss(const RationalMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    Rational scale = 1;
    for (int r = 0; r < n; ++r) {
        BigInt l = 1;
        for (int c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, denominator(m.entries[r][c]));
        scale *= Rational(l);
        for (int c = 0; c < n; ++c) {
            Rational e = m.entries[r][c] * Rational(l);
            a[r][c] = numerator(e);
        }
    }
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1]) / scale;
}

}  // namespace detail

/// Exact determinant. For n ≤ 6 the result is computed by two independent
/// algorithms (Leibniz summation and Bareiss elimination) which must agree.
inline Rational classical_det(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("classical_det: matrix is not square");
    Rational bareiss = detail::det_bareiss(m);
    if (m.rows() <= 6) {
        Rational leibniz = detail::det_leibniz(m);
        if (leibniz != bareiss)
            throw std::logic_error("classical_det: internal oracle disagreement");
    }
    return bareiss;
}

/// Compact one-line rendering, e.g. [[1,1],[1,2]].
inline std::string matrix_to_bracket_string(const RationalMatrix& m) {
    std::string s = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) s += ",";
        s += "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) s += ",";
            s += to_string(m.entries[r][c]);
        }
        s += "]";
    }
    return s + "]";
}

/// Labeled flat-text rendering with exact num/den entries.
inline std::string matrix_to_text(const RationalMatrix& m) {
    std::string s = ".";
    for (const auto& c : m.col_basis) s += "\t" + c;
    s += "\n";
    for (int r = 0; r < m.rows(); ++r) {
        s += m.row_basis[r];
        for (int c = 0; c < m.cols(); ++c) s += "\t" + to_fraction_string(m.entries[r][c]);
        s += "\n";
    }
    return s;
}

inline std::string vector_to_text(const RationalVector& v) {
    std::string s;
    for (size_t i = 0; i < v.basis.size(); ++i)
        s += v.basis[i] + "\t" + to_fraction_string(v.entries[i]) + "\n";
    return s;
}

}  // namespace glin
