#ifndef IDALG_MATRIX_HPP
#define IDALG_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ratfun.hpp"

namespace idalg {

// Ring context adapter so matrices can hold rational-function entries
// through the same interface that field contexts expose for scalars.
template <class F>
struct RatFunRing {
    const F& K;
    using Elem = RatFun<F>;

    Elem zero() const { return rf_zero(K); }
    Elem one() const { return rf_from_int(K, 1); }
    Elem from_int(long n) const { return rf_from_int(K, n); }
    Elem add(const Elem& a, const Elem& b) const { return rf_add(K, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return rf_sub(K, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return rf_mul(K, a, b); }
    Elem neg(const Elem& a) const { return rf_neg(K, a); }
    Elem inv(const Elem& a) const { return rf_inv(K, a); }
    Elem div(const Elem& a, const Elem& b) const { return rf_div(K, a, b); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return rf_eq(K, a, b); }
};

// Dense row-major matrix over the element type of a ring context R.
template <class R>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<typename R::Elem> a;

    typename R::Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const typename R::Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <class R>
Mat<R> mat_zero(const R& K, std::size_t r, std::size_t c) {
    return Mat<R>{r, c, std::vector<typename R::Elem>(r * c, K.zero())};
}

template <class R>
Mat<R> mat_identity(const R& K, std::size_t n) {
    auto m = mat_zero(K, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
}

template <class R>
Mat<R> mat_add(const R& K, const Mat<R>& x, const Mat<R>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw contract_error("matrix shape mismatch in add");
    Mat<R> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = K.add(r.a[i], y.a[i]);
    return r;
}

template <class R>
Mat<R> mat_sub(const R& K, const Mat<R>& x, const Mat<R>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw contract_error("matrix shape mismatch in sub");
    Mat<R> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = K.sub(r.a[i], y.a[i]);
    return r;
}

template <class R>
Mat<R> mat_neg(const R& K, const Mat<R>& x) {
    Mat<R> r = x;
    for (auto& v : r.a) v = K.neg(v);
    return r;
}

template <class R>
Mat<R> mat_mul(const R& K, const Mat<R>& x, const Mat<R>& y) {
    if (x.cols != y.rows) throw contract_error("matrix shape mismatch in mul");
    auto r = mat_zero(K, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (K.is_zero(x.at(i, k))) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = K.add(r.at(i, j), K.mul(x.at(i, k), y.at(k, j)));
        }
    return r;
}

template <class R>
std::vector<typename R::Elem> mat_apply(const R& K, const Mat<R>& x,
                                        const std::vector<typename R::Elem>& v) {
    if (x.cols != v.size()) throw contract_error("matrix/vector shape mismatch");
    std::vector<typename R::Elem> r(x.rows, K.zero());
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            r[i] = K.add(r[i], K.mul(x.at(i, j), v[j]));
    return r;
}

template <class R>
bool mat_eq(const R& K, const Mat<R>& x, const Mat<R>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!K.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class R>
bool mat_is_zero(const R& K, const Mat<R>& x) {
    for (auto& v : x.a)
        if (!K.is_zero(v)) return false;
    return true;
}

// In-place reduced row echelon form over a field.  Pivot choice is the
// first row with a nonzero entry in the current column, so results are
// deterministic given the input.  Returns pivot column indices.
template <class R>
std::vector<std::size_t> mat_rref(const R& K, Mat<R>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && K.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        auto piv = K.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = K.mul(m.at(row, j), piv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || K.is_zero(m.at(i, col))) continue;
            auto f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of the right nullspace {v : M v = 0}, one column vector per free
// variable.  Each basis vector has a 1 in its free position; the solutions
// are in the order of increasing free-column index.
template <class R>
std::vector<std::vector<typename R::Elem>> mat_nullspace(const R& K, Mat<R> m) {
    auto pivots = mat_rref(K, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename R::Elem>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename R::Elem> v(m.cols, K.zero());
        v[free] = K.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = K.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinant by fraction-producing Gaussian elimination (field entries).
template <class R>
typename R::Elem mat_det(const R& K, Mat<R> m) {
    if (m.rows != m.cols) throw contract_error("determinant of non-square matrix");
    auto det = K.one();
    for (std::size_t col = 0; col < m.cols; ++col) {
        std::size_t sel = col;
        while (sel < m.rows && K.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) return K.zero();
        if (sel != col) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = K.neg(det);
        }
        det = K.mul(det, m.at(col, col));
        auto piv = K.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < m.rows; ++i) {
            if (K.is_zero(m.at(i, col))) continue;
            auto f = K.mul(m.at(i, col), piv);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(col, j)));
        }
    }
    return det;
}

// Inverse over a field-like ring (every nonzero entry invertible is not
// enough in general; callers pass genuinely invertible matrices).
template <class R>
Mat<R> mat_inverse(const R& K, const Mat<R>& m) {
    if (m.rows != m.cols) throw contract_error("inverse of non-square matrix");
    std::size_t n = m.rows;
    auto aug = mat_zero(K, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K.one();
    }
    auto pivots = mat_rref(K, aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw pole_error("matrix is singular");
    auto r = mat_zero(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

} // namespace idalg

#endif
