#include "schurlab/det.hpp"

#include <unordered_map>

namespace schurlab {

namespace {

void check_square(size_t rows, const PolyMatrix& m) {
    if (rows == 0) throw UsageError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != rows) throw UsageError("determinant needs a square matrix");
}

// det over rows [r..n), columns given by mask; expansion along row r.
MultiPoly minor_det(const PolyMatrix& m, size_t r, unsigned mask,
                    std::unordered_map<unsigned, MultiPoly>& memo, const ContextPtr& ctx) {
    const size_t n = m.size();
    if (r == n) return MultiPoly::constant(ctx, 1);
    unsigned key = mask;  // r is determined by popcount(mask)
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    MultiPoly acc = MultiPoly::zero(ctx);
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[r][j].is_zero()) {
            MultiPoly sub = minor_det(m, r + 1, mask & ~(1u << j), memo, ctx);
            MultiPoly t = m[r][j] * sub;
            acc += (sign > 0) ? t : -t;
        }
        sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
}

}  // namespace

MultiPoly det_cofactor(const PolyMatrix& m) {
    const size_t n = m.size();
    check_square(n, m);
    if (n > 20) throw UsageError("cofactor determinant limited to small matrices");
    const ContextPtr& ctx = m[0][0].context();
    std::unordered_map<unsigned, MultiPoly> memo;
    return minor_det(m, 0, (1u << n) - 1, memo, ctx);
}

MultiPoly det_bareiss(const PolyMatrix& mat) {
    const size_t n = mat.size();
    check_square(n, mat);
    const ContextPtr& ctx = mat[0][0].context();
    PolyMatrix a = mat;
    MultiPoly prev = MultiPoly::constant(ctx, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly::zero(ctx);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.divided_exact(prev);
            }
            a[i][k] = MultiPoly::zero(ctx);
        }
        prev = a[k][k];
    }
    MultiPoly d = a[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

MultiPoly det_exact(const PolyMatrix& m) {
    return m.size() < 6 ? det_cofactor(m) : det_bareiss(m);
}

Rational det_rational(RationalMatrix m) {
    const size_t n = m.size();
    if (n == 0) throw UsageError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw UsageError("determinant needs a square matrix");
    Rational det = 1;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return sign > 0 ? det : -det;
}

}  // namespace schurlab
