#ifndef EVILDET_CAUCHY_HPP
#define EVILDET_CAUCHY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace evildet {

/// Exact-field interface used by the generic Cauchy-determinant code.
/// Constants take a context element so fields with runtime parameters
/// (e.g. a cyclotomic field) can supply them.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<mpq_class> {
    static mpq_class zero(const mpq_class&) { return mpq_class(0); }
    static mpq_class one(const mpq_class&) { return mpq_class(1); }
    static mpq_class half(const mpq_class&) { return mpq_class(1, 2); }
    static bool is_zero(const mpq_class& x) { return x == 0; }
    static mpq_class inv(const mpq_class& x) {
        if (x == 0) throw std::domain_error("inverse of zero");
        return 1 / x;
    }
};

template <class F>
struct FieldMatrix {
    std::size_t side = 0;
    std::vector<F> e;

    FieldMatrix() = default;
    FieldMatrix(std::size_t s, const F& fill) : side(s), e(s * s, fill) {}

    F& at(std::size_t i, std::size_t j) { return e[i * side + j]; }
    const F& at(std::size_t i, std::size_t j) const { return e[i * side + j]; }
};

namespace detail {

template <class F>
const F& context(const std::vector<F>& u) {
    if (u.empty()) throw std::invalid_argument("empty vector has no field context");
    return u.front();
}

} // namespace detail

/// The m x m matrix with entries (u_i + v_j) / (1 + u_i v_j).
template <class F>
FieldMatrix<F> build_M(const std::vector<F>& u, const std::vector<F>& v) {
    using T = FieldTraits<F>;
    if (u.size() != v.size())
        throw std::invalid_argument("build_M: |u| != |v|");
    const std::size_t m = u.size();
    const F& ctx = detail::context(u);
    FieldMatrix<F> M(m, T::zero(ctx));
    const F one = T::one(ctx);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            F den = one + u[i] * v[j];
            if (T::is_zero(den))
                throw std::domain_error("build_M: 1 + u_i v_j = 0 at (" +
                                        std::to_string(i) + ", " +
                                        std::to_string(j) + ")");
            M.at(i, j) = (u[i] + v[j]) * T::inv(den);
        }
    }
    return M;
}

/// Bordered (m+1) x (m+1) matrix: zero corner, unit border, interior M_m(x, y).
template <class F>
FieldMatrix<F> build_W_bordered(const std::vector<F>& x, const std::vector<F>& y,
                                const F& ctx) {
    using T = FieldTraits<F>;
    if (x.size() != y.size())
        throw std::invalid_argument("build_W_bordered: |x| != |y|");
    const std::size_t m = x.size();
    const F one = T::one(ctx);
    for (std::size_t i = 0; i < m; ++i) {
        if (T::is_zero(one + x[i]))
            throw std::domain_error("build_W_bordered: 1 + x_i = 0 at i = " +
                                    std::to_string(i));
        if (T::is_zero(one + y[i]))
            throw std::domain_error("build_W_bordered: 1 + y_j = 0 at j = " +
                                    std::to_string(i));
    }
    FieldMatrix<F> W(m + 1, T::zero(ctx));
    for (std::size_t j = 1; j <= m; ++j) {
        W.at(0, j) = one;
        W.at(j, 0) = one;
    }
    if (m > 0) {
        FieldMatrix<F> M = build_M(x, y);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) W.at(i + 1, j + 1) = M.at(i, j);
    }
    return W;
}

template <class F>
FieldMatrix<F> build_W_bordered(const std::vector<F>& x, const std::vector<F>& y) {
    return build_W_bordered(x, y, detail::context(x));
}

/// Right side of the Cauchy identity for det(1/(1 + u_i v_j)).
template <class F>
F cauchy_kernel_det(const std::vector<F>& u, const std::vector<F>& v) {
    using T = FieldTraits<F>;
    if (u.size() != v.size())
        throw std::invalid_argument("cauchy_kernel_det: |u| != |v|");
    const std::size_t m = u.size();
    const F& ctx = detail::context(u);
    const F one = T::one(ctx);
    F num = one;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            num = num * ((u[i] - u[j]) * (v[j] - v[i]));
    F den = one;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            F f = one + u[i] * v[j];
            if (T::is_zero(f))
                throw std::domain_error("cauchy_kernel_det: 1 + u_i v_j = 0 at (" +
                                        std::to_string(i) + ", " +
                                        std::to_string(j) + ")");
            den = den * f;
        }
    }
    return num * T::inv(den);
}

/// Closed form for det M_m(u, v): half-sum of the (1 +- u)(1 +- v) products
/// times the Vandermonde pair over the Cauchy denominator.
template <class F>
F det_M_closed_form(const std::vector<F>& u, const std::vector<F>& v) {
    using T = FieldTraits<F>;
    if (u.size() != v.size())
        throw std::invalid_argument("det_M_closed_form: |u| != |v|");
    const std::size_t m = u.size();
    const F& ctx = detail::context(u);
    const F one = T::one(ctx);
    F plus = one, minus = one;
    for (std::size_t i = 0; i < m; ++i) {
        plus = plus * ((one + u[i]) * (one + v[i]));
        minus = minus * ((one - u[i]) * (one - v[i]));
    }
    if (m % 2 == 1) minus = T::zero(ctx) - minus;
    F halfsum = (plus + minus) * T::half(ctx);
    return halfsum * cauchy_kernel_det(u, v);
}

/// Closed form for det W_m(x, y) (the bordered matrix).
template <class F>
F det_W_closed_form(const std::vector<F>& x, const std::vector<F>& y, const F& ctx) {
    using T = FieldTraits<F>;
    if (x.size() != y.size())
        throw std::invalid_argument("det_W_closed_form: |x| != |y|");
    const std::size_t m = x.size();
    const F one = T::one(ctx);
    F plus = one, minus = one;
    for (std::size_t i = 0; i < m; ++i) {
        if (T::is_zero(one + x[i]) || T::is_zero(one + y[i]))
            throw std::domain_error("det_W_closed_form: 1 + x_i or 1 + y_j vanishes");
        plus = plus * ((one + x[i]) * (one + y[i]));
        minus = minus * ((one - x[i]) * (one - y[i]));
    }
    if (m % 2 == 1) minus = T::zero(ctx) - minus;
    F factor = T::zero(ctx) - (plus - minus) * T::half(ctx);
    if (m == 0) return factor;
    return factor * cauchy_kernel_det(x, y);
}

template <class F>
F det_W_closed_form(const std::vector<F>& x, const std::vector<F>& y) {
    return det_W_closed_form(x, y, detail::context(x));
}

/// Exact determinant over an abstract field, by elimination with division.
template <class F>
F field_det(FieldMatrix<F> a) {
    using T = FieldTraits<F>;
    const std::size_t n = a.side;
    if (n == 0) throw std::invalid_argument("field_det: empty matrix");
    const F& ctx = a.e.front();
    F det = T::one(ctx);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && T::is_zero(a.at(piv, k))) ++piv;
        if (piv == n) return T::zero(ctx);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
            negate = !negate;
        }
        det = det * a.at(k, k);
        const F inv = T::inv(a.at(k, k));
        for (std::size_t j = k + 1; j < n; ++j) a.at(k, j) = a.at(k, j) * inv;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (T::is_zero(a.at(i, k))) continue;
            const F f = a.at(i, k);
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
    }
    if (negate) det = T::zero(ctx) - det;
    return det;
}

} // namespace evildet

#endif
