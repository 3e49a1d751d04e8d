#ifndef IDALG_HASSE_HPP
#define IDALG_HASSE_HPP

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "prime_field.hpp"
#include "series.hpp"

namespace idalg {

// The higher-derivation family {d_i} on k[t], k(t) and truncated k((t)):
// d_0 = id, d_i(t^k) = C(k,i) t^{k-i} extended linearly, with the
// convolution Leibniz rule and the composition rule
// d_i . d_j = C(i+j,i) d_{i+j}.

// --- polynomial carrier ---
template <class F>
Poly<F> hasse_apply(const F& K, long i, const Poly<F>& f) {
    if (i < 0) throw parameter_error("derivation index must be >= 0");
    if (i == 0) return f;
    Poly<F> r;
    if (f.deg() < i) return r;
    r.c.assign(static_cast<std::size_t>(f.deg() - i) + 1, K.zero());
    for (long k = i; k <= f.deg(); ++k)
        r.c[static_cast<std::size_t>(k - i)] =
            K.mul(f.c[static_cast<std::size_t>(k)], K.binom(k, i));
    p_trim(K, r);
    return r;
}

// --- fraction-field carrier ---
// The unique extension to f/g is obtained by solving the triangular
// system that Leibniz gives for q = f/g from q*g = f:
//   d_i(f) = sum_{j<=i} d_j(q) d_{i-j}(g)  =>  d_i(q) = (d_i(f) - ...)/g.
template <class F>
std::vector<RatFun<F>> hasse_jet(const F& K, long i, const RatFun<F>& f) {
    std::vector<RatFun<F>> q;
    q.reserve(static_cast<std::size_t>(i) + 1);
    q.push_back(f);
    auto gden = rf_from_poly(K, f.den);
    for (long m = 1; m <= i; ++m) {
        auto rhs = rf_from_poly(K, hasse_apply(K, m, f.num));
        for (long j = 0; j < m; ++j)
            rhs = rf_sub(K, rhs,
                         rf_mul(K, q[static_cast<std::size_t>(j)],
                                rf_from_poly(K, hasse_apply(K, m - j, f.den))));
        q.push_back(rf_div(K, rhs, gden));
    }
    return q;
}

template <class F>
RatFun<F> hasse_apply(const F& K, long i, const RatFun<F>& f) {
    if (i < 0) throw parameter_error("derivation index must be >= 0");
    if (i == 0) return f;
    if (f.is_poly()) return rf_from_poly(K, hasse_apply(K, i, f.num));
    return hasse_jet(K, i, f).back();
}

// --- truncated Laurent carrier ---
template <class F>
TruncSeries<F> hasse_apply(const F& K, long i, const TruncSeries<F>& f) {
    if (i < 0) throw parameter_error("derivation index must be >= 0");
    if (i == 0) return f;
    if (i >= f.order)
        throw precision_error("derivation index exceeds series precision");
    TruncSeries<F> r{f.val - i, {}, f.order - i};
    r.c.reserve(f.c.size());
    for (std::size_t k = 0; k < f.c.size(); ++k) {
        std::int64_t e = f.val + static_cast<std::int64_t>(k);
        r.c.push_back(K.mul(f.c[k], K.binom_int(e, i)));
    }
    ts_normalize(K, r);
    return r;
}

// Both sides of the composition rule, computed independently:
// (d_i(d_j f), C(i+j,i) * d_{i+j} f).
template <class F, class Carrier>
std::pair<Carrier, Carrier> hasse_compose(const F& K, long i, long j, const Carrier& f) {
    auto lhs = hasse_apply(K, i, hasse_apply(K, j, f));
    auto rhs = hasse_apply(K, i + j, f);
    auto c = K.binom(i + j, i);
    if constexpr (std::is_same_v<Carrier, Poly<F>>) rhs = p_scale(K, rhs, c);
    else if constexpr (std::is_same_v<Carrier, RatFun<F>>)
        rhs = rf_mul(K, rhs, rf_from_poly(K, p_const(K, c)));
    else rhs = ts_scale(K, rhs, c);
    return {lhs, rhs};
}

inline std::vector<std::int64_t> base_p_digits(std::int64_t n, std::int64_t p) {
    std::vector<std::int64_t> d;
    while (n > 0) { d.push_back(n % p); n /= p; }
    return d;
}

// The scalar c with (d_1)^{a_0} ... (d_{p^m})^{a_m} = c * d_n, read off by
// applying the composite to t^n (where d_n(t^n) = 1).  Computed, not
// assumed; the test suite checks it against the factorial-digit product.
inline Fp hasse_composite_constant(const PrimeField& K, std::int64_t n) {
    if (n == 0) return K.one();
    auto digits = base_p_digits(n, K.p());
    Poly<PrimeField> w = p_monomial(K, K.one(), static_cast<long>(n));
    for (std::size_t m = digits.size(); m-- > 0;) {
        std::int64_t pm = 1;
        for (std::size_t s = 0; s < m; ++s) pm *= K.p();
        for (std::int64_t rep = 0; rep < digits[m]; ++rep)
            w = hasse_apply(K, static_cast<long>(pm), w);
    }
    return p_coeff(K, w, 0);
}

// d_n reconstructed from the p-power maps: write n in base p and apply
// (d_1)^{a_0} o (d_p)^{a_1} o ... o (d_{p^m})^{a_m}, highest power first,
// then divide by the computed constant.
template <class Carrier>
Carrier hasse_from_p_powers(const PrimeField& K, std::int64_t n, const Carrier& f) {
    if (n < 0) throw parameter_error("derivation index must be >= 0");
    if (n == 0) return f;
    auto digits = base_p_digits(n, K.p());
    Carrier w = f;
    for (std::size_t m = digits.size(); m-- > 0;) {
        std::int64_t pm = 1;
        for (std::size_t s = 0; s < m; ++s) pm *= K.p();
        for (std::int64_t rep = 0; rep < digits[m]; ++rep)
            w = hasse_apply(K, static_cast<long>(pm), w);
    }
    auto c = hasse_composite_constant(K, n);
    if (K.is_zero(c)) throw contract_error("composite constant vanished");
    auto ci = K.inv(c);
    if constexpr (std::is_same_v<Carrier, Poly<PrimeField>>) return p_scale(K, w, ci);
    else if constexpr (std::is_same_v<Carrier, RatFun<PrimeField>>)
        return rf_mul(K, w, rf_from_poly(K, p_const(K, ci)));
    else return ts_scale(K, w, ci);
}

// Constancy up to d_B.  Exact over polynomials/fractions once B reaches
// the relevant degree; for truncated series only up to the stated order.
template <class F>
bool is_constant(const F& K, const Poly<F>& f, long B) {
    if (B < 1) throw parameter_error("constant test needs B >= 1");
    for (long i = 1; i <= B; ++i)
        if (!hasse_apply(K, i, f).is_zero()) return false;
    return true;
}

template <class F>
bool is_constant(const F& K, const RatFun<F>& f, long B) {
    if (B < 1) throw parameter_error("constant test needs B >= 1");
    for (long i = 1; i <= B; ++i)
        if (!hasse_apply(K, i, f).is_zero()) return false;
    return true;
}

template <class F>
bool is_constant(const F& K, const TruncSeries<F>& f, long B) {
    if (B < 1) throw parameter_error("constant test needs B >= 1");
    for (long i = 1; i <= B && i < f.order; ++i)
        if (!hasse_apply(K, i, f).is_zero()) return false;
    return true;
}

} // namespace idalg

#endif
