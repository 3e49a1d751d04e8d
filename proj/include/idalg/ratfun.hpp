#ifndef IDALG_RATFUN_HPP
#define IDALG_RATFUN_HPP

#include <string>
#include <utility>

#include "poly.hpp"

namespace idalg {

// Rational function num/den with gcd(num, den) = 1 and den monic.
// Construct through rf_make so the invariant always holds.
template <class F>
struct RatFun {
    Poly<F> num;
    Poly<F> den;

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.deg() == 0; }
};

template <class F>
RatFun<F> rf_make(const F& K, Poly<F> num, Poly<F> den) {
    if (den.is_zero()) throw pole_error("rational function with zero denominator");
    if (num.is_zero()) return RatFun<F>{Poly<F>{}, p_from_int(K, 1)};
    auto g = p_gcd(K, num, den);
    if (g.deg() > 0) {
        num = p_divmod(K, num, g).first;
        den = p_divmod(K, den, g).first;
    }
    auto lead = p_lead(K, den);
    if (!K.eq(lead, K.one())) {
        auto li = K.inv(lead);
        num = p_scale(K, num, li);
        den = p_scale(K, den, li);
    }
    return RatFun<F>{std::move(num), std::move(den)};
}

template <class F>
RatFun<F> rf_from_poly(const F& K, Poly<F> p) { return RatFun<F>{std::move(p), p_from_int(K, 1)}; }

template <class F>
RatFun<F> rf_zero(const F& K) { return rf_from_poly(K, Poly<F>{}); }

template <class F>
RatFun<F> rf_from_int(const F& K, long n) { return rf_from_poly(K, p_from_int(K, n)); }

template <class F>
RatFun<F> rf_add(const F& K, const RatFun<F>& a, const RatFun<F>& b) {
    return rf_make(K, p_add(K, p_mul(K, a.num, b.den), p_mul(K, b.num, a.den)),
                   p_mul(K, a.den, b.den));
}

template <class F>
RatFun<F> rf_neg(const F& K, const RatFun<F>& a) { return RatFun<F>{p_neg(K, a.num), a.den}; }

template <class F>
RatFun<F> rf_sub(const F& K, const RatFun<F>& a, const RatFun<F>& b) {
    return rf_add(K, a, rf_neg(K, b));
}

template <class F>
RatFun<F> rf_mul(const F& K, const RatFun<F>& a, const RatFun<F>& b) {
    return rf_make(K, p_mul(K, a.num, b.num), p_mul(K, a.den, b.den));
}

template <class F>
RatFun<F> rf_div(const F& K, const RatFun<F>& a, const RatFun<F>& b) {
    if (b.is_zero()) throw pole_error("rational function division by zero");
    return rf_make(K, p_mul(K, a.num, b.den), p_mul(K, a.den, b.num));
}

template <class F>
RatFun<F> rf_inv(const F& K, const RatFun<F>& a) { return rf_div(K, rf_from_int(K, 1), a); }

template <class F>
bool rf_eq(const F& K, const RatFun<F>& a, const RatFun<F>& b) {
    return p_eq(K, a.num, b.num) && p_eq(K, a.den, b.den);
}

template <class F>
typename F::Elem rf_eval(const F& K, const RatFun<F>& a, const typename F::Elem& x) {
    auto d = p_eval(K, a.den, x);
    if (K.is_zero(d)) throw pole_error("evaluation at a pole");
    return K.div(p_eval(K, a.num, x), d);
}

template <class F>
RatFun<F> rf_compose_power(const F& K, const RatFun<F>& a, long q) {
    return rf_make(K, p_compose_power(K, a.num, q), p_compose_power(K, a.den, q));
}

template <class F>
std::string rf_to_string(const F& K, const RatFun<F>& a, const std::string& var = "t") {
    if (a.is_poly()) return p_to_string(K, a.num, var);
    return "(" + p_to_string(K, a.num, var) + ")/(" + p_to_string(K, a.den, var) + ")";
}

} // namespace idalg

#endif
