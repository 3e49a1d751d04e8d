#ifndef IDALG_POLY_HPP
#define IDALG_POLY_HPP

#include <string>
#include <vector>

#include "errors.hpp"

namespace idalg {

// Dense univariate polynomial over a field context F.  coeffs[i] is the
// coefficient of x^i; no trailing zeros (the zero polynomial is the empty
// vector).  All operations take the field context explicitly.
template <class F>
struct Poly {
    std::vector<typename F::Elem> c;

    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <class F>
void p_trim(const F& K, Poly<F>& a) {
    while (!a.c.empty() && K.is_zero(a.c.back())) a.c.pop_back();
}

template <class F>
Poly<F> p_zero(const F&) { return Poly<F>{}; }

template <class F>
Poly<F> p_const(const F& K, typename F::Elem v) {
    Poly<F> r;
    if (!K.is_zero(v)) r.c.push_back(v);
    return r;
}

template <class F>
Poly<F> p_from_int(const F& K, long n) { return p_const(K, K.from_int(n)); }

// c * x^k
template <class F>
Poly<F> p_monomial(const F& K, typename F::Elem v, long k) {
    Poly<F> r;
    if (K.is_zero(v)) return r;
    r.c.assign(static_cast<std::size_t>(k) + 1, K.zero());
    r.c.back() = v;
    return r;
}

template <class F>
typename F::Elem p_coeff(const F& K, const Poly<F>& a, long i) {
    if (i < 0 || i >= static_cast<long>(a.c.size())) return K.zero();
    return a.c[static_cast<std::size_t>(i)];
}

template <class F>
typename F::Elem p_lead(const F& K, const Poly<F>& a) {
    if (a.is_zero()) throw contract_error("leading coefficient of zero polynomial");
    (void)K;
    return a.c.back();
}

template <class F>
Poly<F> p_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    std::size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.c.push_back(K.add(p_coeff(K, a, static_cast<long>(i)), p_coeff(K, b, static_cast<long>(i))));
    p_trim(K, r);
    return r;
}

template <class F>
Poly<F> p_neg(const F& K, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& x : r.c) x = K.neg(x);
    return r;
}

template <class F>
Poly<F> p_sub(const F& K, const Poly<F>& a, const Poly<F>& b) { return p_add(K, a, p_neg(K, b)); }

template <class F>
Poly<F> p_scale(const F& K, const Poly<F>& a, typename F::Elem s) {
    Poly<F> r;
    if (K.is_zero(s)) return r;
    r.c.reserve(a.c.size());
    for (auto& x : a.c) r.c.push_back(K.mul(x, s));
    p_trim(K, r);
    return r;
}

namespace detail {

template <class F>
std::vector<typename F::Elem> mul_school(const F& K,
                                         const std::vector<typename F::Elem>& a,
                                         const std::vector<typename F::Elem>& b) {
    std::vector<typename F::Elem> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    return r;
}

// Karatsuba once the operands are past the schoolbook sweet spot.
template <class F>
std::vector<typename F::Elem> mul_rec(const F& K,
                                      std::vector<typename F::Elem> a,
                                      std::vector<typename F::Elem> b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() <= 32 || b.size() <= 32) return mul_school(K, a, b);
    std::size_t m = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const std::vector<typename F::Elem>& v) {
        return std::vector<typename F::Elem>(v.begin(), v.begin() + std::min(m, v.size()));
    };
    auto hi = [&](const std::vector<typename F::Elem>& v) {
        return v.size() > m ? std::vector<typename F::Elem>(v.begin() + m, v.end())
                            : std::vector<typename F::Elem>{};
    };
    auto addv = [&](std::vector<typename F::Elem> x, const std::vector<typename F::Elem>& y) {
        if (x.size() < y.size()) x.resize(y.size(), K.zero());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = K.add(x[i], y[i]);
        return x;
    };
    auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    auto z0 = mul_rec(K, a0, b0);
    auto z2 = mul_rec(K, a1, b1);
    auto z1 = mul_rec(K, addv(a0, a1), addv(b0, b1));
    // z1 -= z0 + z2
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = K.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = K.sub(z1[i], z2[i]);
    std::vector<typename F::Elem> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < z0.size(); ++i) r[i] = K.add(r[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i) r[i + m] = K.add(r[i + m], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * m] = K.add(r[i + 2 * m], z2[i]);
    return r;
}

} // namespace detail

template <class F>
Poly<F> p_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c = detail::mul_rec(K, a.c, b.c);
    p_trim(K, r);
    return r;
}

// Euclidean division: a = q*b + rem, deg rem < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> p_divmod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw pole_error("polynomial division by zero");
    Poly<F> q, rem = a;
    long db = b.deg();
    auto binv = K.inv(p_lead(K, b));
    if (rem.deg() >= db) q.c.assign(static_cast<std::size_t>(rem.deg() - db) + 1, K.zero());
    while (!rem.is_zero() && rem.deg() >= db) {
        long sh = rem.deg() - db;
        auto f = K.mul(p_lead(K, rem), binv);
        q.c[static_cast<std::size_t>(sh)] = f;
        for (long i = 0; i <= db; ++i) {
            auto& rc = rem.c[static_cast<std::size_t>(i + sh)];
            rc = K.sub(rc, K.mul(f, b.c[static_cast<std::size_t>(i)]));
        }
        p_trim(K, rem);
    }
    p_trim(K, q);
    return {q, rem};
}

// Monic representative (zero stays zero).
template <class F>
Poly<F> p_monic(const F& K, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return p_scale(K, a, K.inv(p_lead(K, a)));
}

// Monic gcd via the Euclidean algorithm.
template <class F>
Poly<F> p_gcd(const F& K, Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = p_divmod(K, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(K, a);
}

template <class F>
typename F::Elem p_eval(const F& K, const Poly<F>& a, const typename F::Elem& x) {
    auto acc = K.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a.c[i]);
    return acc;
}

// f(x) -> f(x^q)
template <class F>
Poly<F> p_compose_power(const F& K, const Poly<F>& a, long q) {
    if (q < 2) throw parameter_error("compose_power needs q >= 2");
    Poly<F> r;
    if (a.is_zero()) return r;
    r.c.assign(static_cast<std::size_t>(a.deg()) * q + 1, K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * static_cast<std::size_t>(q)] = a.c[i];
    return r;
}

template <class F>
bool p_eq(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!K.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class F>
std::string p_to_string(const F& K, const Poly<F>& a, const std::string& var = "t") {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (K.is_zero(a.c[i])) continue;
        if (!s.empty()) s += " + ";
        std::string cs = K.to_string(a.c[i]);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += "(" + cs + ")*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace idalg

#endif
