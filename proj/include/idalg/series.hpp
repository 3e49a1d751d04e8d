#ifndef IDALG_SERIES_HPP
#define IDALG_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace idalg {

// Truncated Laurent series: coeffs[i] is the coefficient of t^(val+i),
// and the series is known to be correct modulo t^order.  The zero series
// has empty coeffs.  Leading stored coefficient is nonzero.
template <class F>
struct TruncSeries {
    std::int64_t val = 0;
    std::vector<typename F::Elem> c;
    std::int64_t order = 0;

    bool is_zero() const { return c.empty(); }
};

template <class F>
void ts_normalize(const F& K, TruncSeries<F>& a) {
    // drop anything at or past the order
    if (!a.c.empty()) {
        std::int64_t keep = a.order - a.val;
        if (keep < 0) keep = 0;
        if (static_cast<std::int64_t>(a.c.size()) > keep) a.c.resize(static_cast<std::size_t>(keep));
    }
    while (!a.c.empty() && K.is_zero(a.c.back())) a.c.pop_back();
    std::size_t lead = 0;
    while (lead < a.c.size() && K.is_zero(a.c[lead])) ++lead;
    if (lead == a.c.size()) {
        a.c.clear();
        a.val = 0;
    } else if (lead > 0) {
        a.c.erase(a.c.begin(), a.c.begin() + static_cast<long>(lead));
        a.val += static_cast<std::int64_t>(lead);
    }
}

template <class F>
typename F::Elem ts_coeff(const F& K, const TruncSeries<F>& a, std::int64_t e) {
    std::int64_t i = e - a.val;
    if (a.is_zero() || i < 0 || i >= static_cast<std::int64_t>(a.c.size())) return K.zero();
    return a.c[static_cast<std::size_t>(i)];
}

template <class F>
TruncSeries<F> ts_zero(const F&, std::int64_t N) { return TruncSeries<F>{0, {}, N}; }

template <class F>
TruncSeries<F> ts_from_poly(const F& K, const Poly<F>& p, std::int64_t N) {
    TruncSeries<F> r{0, p.c, N};
    ts_normalize(K, r);
    return r;
}

template <class F>
TruncSeries<F> ts_monomial(const F& K, typename F::Elem v, std::int64_t e, std::int64_t N) {
    TruncSeries<F> r{e, {v}, N};
    ts_normalize(K, r);
    return r;
}

template <class F>
TruncSeries<F> ts_add(const F& K, const TruncSeries<F>& a, const TruncSeries<F>& b) {
    std::int64_t N = std::min(a.order, b.order);
    if (a.is_zero() && b.is_zero()) return ts_zero(K, N);
    std::int64_t lo = a.is_zero() ? b.val : (b.is_zero() ? a.val : std::min(a.val, b.val));
    TruncSeries<F> r{lo, {}, N};
    for (std::int64_t e = lo; e < N; ++e)
        r.c.push_back(K.add(ts_coeff(K, a, e), ts_coeff(K, b, e)));
    ts_normalize(K, r);
    return r;
}

template <class F>
TruncSeries<F> ts_neg(const F& K, const TruncSeries<F>& a) {
    TruncSeries<F> r = a;
    for (auto& x : r.c) x = K.neg(x);
    return r;
}

template <class F>
TruncSeries<F> ts_sub(const F& K, const TruncSeries<F>& a, const TruncSeries<F>& b) {
    return ts_add(K, a, ts_neg(K, b));
}

template <class F>
TruncSeries<F> ts_scale(const F& K, const TruncSeries<F>& a, typename F::Elem s) {
    TruncSeries<F> r = a;
    for (auto& x : r.c) x = K.mul(x, s);
    ts_normalize(K, r);
    return r;
}

template <class F>
TruncSeries<F> ts_mul(const F& K, const TruncSeries<F>& a, const TruncSeries<F>& b) {
    if (a.is_zero() || b.is_zero())
        return ts_zero(K, std::min(a.order + (b.is_zero() ? 0 : b.val),
                                   b.order + (a.is_zero() ? 0 : a.val)));
    // product correct modulo t^N with N limited by each factor's precision
    std::int64_t N = std::min(a.order + b.val, b.order + a.val);
    TruncSeries<F> r{a.val + b.val, {}, N};
    std::int64_t len = N - r.val;
    if (len < 0) len = 0;
    r.c.assign(static_cast<std::size_t>(len), K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::size_t k = i + j;
            if (k >= r.c.size()) break;
            r.c[k] = K.add(r.c[k], K.mul(a.c[i], b.c[j]));
        }
    }
    ts_normalize(K, r);
    return r;
}

// Multiplicative inverse: returns g with f*g == 1 mod t^min(N, attainable).
template <class F>
TruncSeries<F> ts_invert(const F& K, const TruncSeries<F>& f, std::int64_t N) {
    if (f.is_zero())
        throw precision_error("series inverse: operand is zero to its stated order");
    std::int64_t v = f.val;
    // unit part u with u[0] != 0; correct coefficients of u: f.order - v
    std::int64_t m = std::min<std::int64_t>(N, f.order - v);
    if (m < 1) throw precision_error("series inverse: no correct coefficients available");
    std::vector<typename F::Elem> g(static_cast<std::size_t>(m), K.zero());
    auto u0i = K.inv(f.c[0]);
    g[0] = u0i;
    for (std::int64_t k = 1; k < m; ++k) {
        auto s = K.zero();
        for (std::int64_t j = 1; j <= k && j < static_cast<std::int64_t>(f.c.size()); ++j)
            s = K.add(s, K.mul(f.c[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(k - j)]));
        g[static_cast<std::size_t>(k)] = K.neg(K.mul(s, u0i));
    }
    TruncSeries<F> r{-v, std::move(g), m - v};
    ts_normalize(K, r);
    return r;
}

template <class F>
TruncSeries<F> ts_div(const F& K, const TruncSeries<F>& a, const TruncSeries<F>& b) {
    return ts_mul(K, a, ts_invert(K, b, b.order - b.val));
}

// Laurent expansion of a rational function around t = 0, correct mod t^N.
template <class F>
TruncSeries<F> ts_from_ratfun(const F& K, const RatFun<F>& f, std::int64_t N) {
    if (f.is_zero()) return ts_zero(K, N);
    // give the denominator enough slack that the quotient is good mod t^N
    std::int64_t pad = N + f.den.deg() + 1;
    auto num = ts_from_poly(K, f.num, pad);
    auto den = ts_from_poly(K, f.den, pad);
    auto r = ts_mul(K, num, ts_invert(K, den, pad));
    r.order = std::min(r.order, N);
    ts_normalize(K, r);
    return r;
}

// Multiply a truncated series by an exact rational function.  The
// precision cost is exactly the denominator's order of vanishing at 0
// (tracked automatically through the factor orders).
template <class F>
TruncSeries<F> ts_mul_ratfun(const F& K, const RatFun<F>& r, const TruncSeries<F>& s) {
    if (r.is_zero()) return ts_zero(K, s.order);
    std::int64_t pad = s.order - std::min<std::int64_t>(s.val, 0) + r.num.deg() + 3 * r.den.deg() + 4;
    return ts_mul(K, ts_from_ratfun(K, r, pad), s);
}

// t -> t^q
template <class F>
TruncSeries<F> ts_compose_power(const F& K, const TruncSeries<F>& a, long q, std::int64_t cap) {
    if (q < 2) throw parameter_error("compose_power needs q >= 2");
    TruncSeries<F> r{a.val * q, {}, std::min<std::int64_t>(a.order * q, cap)};
    if (a.is_zero()) { r.val = 0; return r; }
    r.c.assign(a.c.size() * static_cast<std::size_t>(q) - (static_cast<std::size_t>(q) - 1), K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * static_cast<std::size_t>(q)] = a.c[i];
    ts_normalize(K, r);
    return r;
}

// Equality of all coefficients below min(order_a, order_b, N).
template <class F>
bool ts_eq_upto(const F& K, const TruncSeries<F>& a, const TruncSeries<F>& b, std::int64_t N) {
    std::int64_t hi = std::min({a.order, b.order, N});
    std::int64_t lo = std::min(a.is_zero() ? hi : a.val, b.is_zero() ? hi : b.val);
    for (std::int64_t e = lo; e < hi; ++e)
        if (!K.eq(ts_coeff(K, a, e), ts_coeff(K, b, e))) return false;
    return true;
}

template <class F>
std::string ts_to_string(const F& K, const TruncSeries<F>& a, const std::string& var = "t") {
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        std::int64_t e = a.val + static_cast<std::int64_t>(i);
        if (!s.empty()) s += " + ";
        std::string cs = K.to_string(a.c[i]);
        if (e == 0) s += cs;
        else {
            if (cs != "1") s += "(" + cs + ")*";
            s += var;
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(a.order) + ")";
}

} // namespace idalg

#endif
