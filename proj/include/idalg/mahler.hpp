#ifndef IDALG_MAHLER_HPP
#define IDALG_MAHLER_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace idalg {

using QField = RationalField;
using QPoly = Poly<QField>;
using QRat = RatFun<QField>;
using QRatRing = RatFunRing<QField>;
using QSeries = TruncSeries<QField>;

// The functional system f(z) = A(z) f(z^q), q >= 2, with A invertible
// over Q(z).  d(z) is the monic common denominator and P = d*A the
// cleared numerator matrix, so the equation reads d(z) f(z) = P(z) f(z^q).
struct MahlerSystem {
    long q;
    std::size_t n;
    Mat<QRatRing> A;
    QPoly d;
    std::vector<QPoly> P; // row-major n*n

    const QPoly& Pat(std::size_t i, std::size_t j) const { return P[i * n + j]; }
};

inline MahlerSystem mahler_make(long q, Mat<QRatRing> A) {
    if (q < 2) throw parameter_error("Mahler system needs q >= 2");
    if (A.rows != A.cols || A.rows == 0) throw parameter_error("system matrix must be square");
    QField K;
    QRatRing R{K};
    if (mat_det(R, A).is_zero()) throw parameter_error("system matrix must be invertible over Q(z)");
    MahlerSystem S{q, A.rows, std::move(A), p_from_int(K, 1), {}};
    for (auto& e : S.A.a) {
        // lcm(d, den) = d * den / gcd
        auto g = p_gcd(K, S.d, e.den);
        S.d = p_mul(K, S.d, p_divmod(K, e.den, g).first);
    }
    S.d = p_monic(K, S.d);
    S.P.reserve(S.n * S.n);
    for (auto& e : S.A.a)
        S.P.push_back(p_mul(K, e.num, p_divmod(K, S.d, e.den).first));
    return S;
}

// A(0) as an exact rational matrix; requires d(0) != 0.
inline Mat<QField> mahler_A0(const MahlerSystem& S) {
    QField K;
    if (K.is_zero(p_eval(K, S.d, K.zero())))
        throw pole_error("system is singular at the origin");
    auto m = mat_zero(K, S.n, S.n);
    for (std::size_t i = 0; i < S.n; ++i)
        for (std::size_t j = 0; j < S.n; ++j)
            m.at(i, j) = rf_eval(K, S.A.at(i, j), K.zero());
    return m;
}

// Basis of ker(A(0) - I): the admissible initial vectors f(0).
inline std::vector<std::vector<BigRational>> admissible_initial(const MahlerSystem& S) {
    QField K;
    auto m = mahler_A0(S);
    for (std::size_t i = 0; i < S.n; ++i) m.at(i, i) = K.sub(m.at(i, i), K.one());
    return mat_nullspace(K, std::move(m));
}

struct SeriesSolution {
    std::vector<QSeries> components;
    std::int64_t order;
};

// Coefficient recursion for d(z) f(z) = P(z) f(z^q):
//   d_0 f_m = - sum_{j>=1} d_j f_{m-j} + sum_{q*k <= m} P_{m-q*k} f_k.
// For m >= 1 the right side only involves indices m-j < m and k <= m/q < m,
// so the recursion is well-founded; d(0) = d_0 != 0 is the only hypothesis.
inline SeriesSolution solve_series(const MahlerSystem& S, const std::vector<BigRational>& f0,
                                   std::int64_t N) {
    QField K;
    auto d0 = p_eval(K, S.d, K.zero());
    if (K.is_zero(d0)) throw pole_error("system is singular at the origin");
    if (f0.size() != S.n) throw contract_error("initial vector has wrong rank");
    {
        auto A0 = mahler_A0(S);
        auto img = mat_apply(K, A0, f0);
        for (std::size_t i = 0; i < S.n; ++i)
            if (!K.eq(img[i], f0[i]))
                throw contract_error("initial vector is not fixed by A(0)");
    }
    auto d0i = K.inv(d0);
    std::vector<std::vector<BigRational>> f; // f[m] = coefficient vector of z^m
    f.push_back(f0);
    long degd = S.d.deg();
    for (std::int64_t m = 1; m < N; ++m) {
        std::vector<BigRational> rhs(S.n, K.zero());
        for (long j = 1; j <= degd && j <= m; ++j) {
            auto dj = p_coeff(K, S.d, j);
            if (K.is_zero(dj)) continue;
            for (std::size_t i = 0; i < S.n; ++i)
                rhs[i] = K.sub(rhs[i], K.mul(dj, f[static_cast<std::size_t>(m - j)][i]));
        }
        for (std::int64_t k = 0; S.q * k <= m; ++k) {
            long s = static_cast<long>(m - S.q * k);
            for (std::size_t i = 0; i < S.n; ++i)
                for (std::size_t j = 0; j < S.n; ++j) {
                    auto ps = p_coeff(K, S.Pat(i, j), s);
                    if (K.is_zero(ps)) continue;
                    rhs[i] = K.add(rhs[i], K.mul(ps, f[static_cast<std::size_t>(k)][j]));
                }
        }
        for (auto& x : rhs) x = K.mul(x, d0i);
        f.push_back(std::move(rhs));
    }
    SeriesSolution sol{{}, N};
    for (std::size_t i = 0; i < S.n; ++i) {
        QSeries s{0, {}, N};
        s.c.reserve(f.size());
        for (auto& fm : f) s.c.push_back(fm[i]);
        ts_normalize(K, s);
        sol.components.push_back(std::move(s));
    }
    return sol;
}

// Re-multiplies d*f - P*f(z^q); all coefficients below min order must be 0.
inline bool residual_is_zero(const MahlerSystem& S, const SeriesSolution& sol) {
    QField K;
    for (std::size_t i = 0; i < S.n; ++i) {
        auto lhs = ts_mul(K, ts_from_poly(K, S.d, sol.order), sol.components[i]);
        auto rhs = ts_zero(K, sol.order);
        for (std::size_t j = 0; j < S.n; ++j) {
            auto fq = ts_compose_power(K, sol.components[j], S.q, sol.order);
            rhs = ts_add(K, rhs, ts_mul(K, ts_from_poly(K, S.Pat(i, j), sol.order), fq));
        }
        auto res = ts_sub(K, lhs, rhs);
        if (!res.is_zero()) return false;
    }
    return true;
}

enum class SingularKind { APole, AInversePole };

struct SingularityVerdict {
    bool singular = false;
    std::int64_t r = -1;
    SingularKind which = SingularKind::APole;
    std::int64_t scan_bound = 0; // orbit steps examined before the modulus bound kicked in
};

namespace detail {

// Exact positive lower bound for the modulus of every nonzero root of h:
// strip the z^k factor, then 1 / (1 + max_i |h_i| / |h_0|) (Cauchy bound
// applied to the reversed polynomial).
inline BigRational root_modulus_lower_bound(const QPoly& h) {
    QField K;
    if (h.is_zero()) throw contract_error("root bound of the zero polynomial");
    std::size_t k = 0;
    while (k < h.c.size() && K.is_zero(h.c[k])) ++k;
    BigRational h0 = h.c[k].abs();
    BigRational mx = K.zero();
    for (std::size_t i = k + 1; i < h.c.size(); ++i) {
        auto a = h.c[i].abs();
        if (mx < a) mx = a;
    }
    return K.one() / (K.one() + mx / h0);
}

} // namespace detail

// Scans the orbit alpha, alpha^q, alpha^{q^2}, ... for exact zeros of
// d (poles of A) and of det P (poles of A^{-1} together with zeros of
// det A).  The scan stops once |alpha^{q^r}| is provably below the
// modulus of every nonzero root of both polynomials.
inline SingularityVerdict singularity_check(const MahlerSystem& S, const BigRational& alpha) {
    QField K;
    if (alpha.is_zero() || !(alpha.abs() < K.one()))
        throw parameter_error("orbit point must satisfy 0 < |alpha| < 1");
    QRatRing R{K};
    // det P as a polynomial (entries are polynomials, so the fraction is integral)
    Mat<QRatRing> Pm = mat_zero(R, S.n, S.n);
    for (std::size_t i = 0; i < S.n; ++i)
        for (std::size_t j = 0; j < S.n; ++j) Pm.at(i, j) = rf_from_poly(K, S.Pat(i, j));
    auto detP = mat_det(R, Pm).num;
    auto bound = detail::root_modulus_lower_bound(S.d);
    auto b2 = detail::root_modulus_lower_bound(detP);
    if (b2 < bound) bound = b2;
    SingularityVerdict v;
    BigRational beta = alpha;
    for (std::int64_t r = 0;; ++r) {
        if (beta.abs() < bound) { v.scan_bound = r; return v; }
        if (K.is_zero(p_eval(K, S.d, beta))) {
            v.singular = true; v.r = r; v.which = SingularKind::APole; v.scan_bound = r;
            return v;
        }
        if (K.is_zero(p_eval(K, detP, beta))) {
            v.singular = true; v.r = r; v.which = SingularKind::AInversePole; v.scan_bound = r;
            return v;
        }
        BigRational next = K.one();
        for (long s = 0; s < S.q; ++s) next = K.mul(next, beta);
        beta = next;
    }
}

// f(alpha) via R telescoping steps of the functional equation and the
// truncated series for the tail: f(alpha) = [prod_{r<R} A(alpha^{q^r})] *
// f(alpha^{q^R}).  Error estimate = |v_R - v_{R+1}| plus the crude series
// tail bound |alpha|^{q^R * N} * max|coeff| * N.
inline std::vector<std::pair<double, double>> evaluate_at_point(const MahlerSystem& S,
                                                                const SeriesSolution& sol,
                                                                const BigRational& alpha,
                                                                std::int64_t R) {
    QField K;
    auto verdict = singularity_check(S, alpha);
    if (verdict.singular)
        throw pole_error("refusing to evaluate at a singular orbit point (r=" +
                         std::to_string(verdict.r) + ")");
    if (R < 1) throw parameter_error("need at least one telescoping step");
    auto eval_at_steps = [&](std::int64_t steps) {
        std::vector<BigRational> orbit{alpha};
        for (std::int64_t r = 1; r <= steps; ++r) {
            BigRational nx = K.one();
            for (long s = 0; s < S.q; ++s) nx = K.mul(nx, orbit.back());
            orbit.push_back(nx);
        }
        // exact truncated-series tail at the deepest orbit point
        std::vector<BigRational> v(S.n, K.zero());
        const auto& beta = orbit.back();
        for (std::size_t i = 0; i < S.n; ++i) {
            BigRational acc = K.zero();
            const auto& s = sol.components[i];
            for (std::size_t t = s.c.size(); t-- > 0;)
                acc = K.add(K.mul(acc, beta), s.c[t]);
            for (std::int64_t e = 0; e < s.val; ++e) acc = K.mul(acc, beta);
            v[i] = acc;
        }
        for (std::int64_t r = steps - 1; r >= 0; --r) {
            auto Ar = mat_zero(K, S.n, S.n);
            for (std::size_t i = 0; i < S.n; ++i)
                for (std::size_t j = 0; j < S.n; ++j)
                    Ar.at(i, j) = rf_eval(K, S.A.at(i, j), orbit[static_cast<std::size_t>(r)]);
            v = mat_apply(K, Ar, v);
        }
        return v;
    };
    auto vR = eval_at_steps(R);
    auto vR1 = eval_at_steps(R + 1);
    double maxc = 0;
    for (auto& s : sol.components)
        for (auto& c : s.c) maxc = std::max(maxc, std::abs(c.to_double()));
    double logab = std::log(std::abs(alpha.to_double()));
    double qR = std::pow(static_cast<double>(S.q), static_cast<double>(R));
    double tail = std::exp(static_cast<double>(sol.order) * qR * logab) *
                  maxc * static_cast<double>(sol.order);
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < S.n; ++i) {
        double val = vR1[i].to_double();
        double err = std::abs(K.sub(vR[i], vR1[i]).to_double()) + tail;
        out.emplace_back(val, err);
    }
    return out;
}

} // namespace idalg

#endif
