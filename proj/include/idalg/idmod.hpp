#ifndef IDALG_IDMOD_HPP
#define IDALG_IDMOD_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hasse.hpp"
#include "matrix.hpp"

namespace idalg {

using FpRatRing = RatFunRing<PrimeField>;
using FpRatMat = Mat<FpRatRing>;
using FpRat = RatFun<PrimeField>;

// Iterative differential module of rank r at level m over F_p(t), given
// by the matrices A_n of the p-power maps nabla_{p^n}, 0 <= n <= m.
//
// The full family nabla_i, 0 <= i <= p^{m+1}-1, is realized through two
// matrix families derived from the A_n:
//   C_i: the "solution side", with C_0 = I, C_{p^n} = -A_n, and composite
//        indices generated by descending to the lowest nonzero base-p
//        digit:  C(i, p^n) * C_i = sum_{k+l = p^n} d_k(C_j) C_l  where
//        i = j + p^n and p^n is the lowest nonzero digit of i;
//   D_k: the convolution inverse of C (D_0 = I, D_k = -sum D_{k-b} C_b),
// and then nabla_i(v) = sum_{k+l=i} D_k d_l(v).  This family satisfies
// the module Leibniz rule by construction; the composition rule
// nabla_i nabla_j = C(i+j,i) nabla_{i+j} is a genuine property that
// check_iterative verifies rather than assumes.
struct IDModule {
    PrimeField K;
    long rank;
    long level; // m
    std::int64_t imax; // p^{m+1} - 1
    std::vector<FpRatMat> A; // level+1 entries
    std::vector<FpRatMat> C; // 0..imax
    std::vector<FpRatMat> D; // 0..imax

    FpRatRing ring() const { return FpRatRing{K}; }
};

namespace detail {

inline FpRatMat mat_hasse(const PrimeField& K, long k, const FpRatMat& m) {
    FpRatMat r = m;
    for (auto& e : r.a) e = hasse_apply(K, k, e);
    return r;
}

} // namespace detail

inline IDModule idmod_build(const PrimeField& K, std::vector<FpRatMat> A) {
    if (A.empty()) throw parameter_error("module needs at least one p-power matrix");
    std::size_t r = A[0].rows;
    for (auto& m : A)
        if (m.rows != r || m.cols != r) throw parameter_error("p-power matrices must be square of equal size");
    long m = static_cast<long>(A.size()) - 1;
    std::int64_t imax = 1;
    for (long s = 0; s < m + 1; ++s) imax *= K.p();
    imax -= 1; // p^{m+1} - 1

    FpRatRing R{K};
    IDModule M{K, static_cast<long>(r), m, imax, std::move(A), {}, {}};
    M.C.assign(static_cast<std::size_t>(imax) + 1, FpRatMat{});
    M.C[0] = mat_identity(R, r);
    std::int64_t pn = 1;
    for (long n = 0; n <= m; ++n) {
        M.C[static_cast<std::size_t>(pn)] = mat_neg(R, M.A[static_cast<std::size_t>(n)]);
        pn *= K.p();
    }
    for (std::int64_t i = 2; i <= imax; ++i) {
        if (!M.C[static_cast<std::size_t>(i)].a.empty()) continue;
        auto digits = base_p_digits(i, K.p());
        std::size_t n = 0;
        while (digits[n] == 0) ++n;
        std::int64_t q = 1;
        for (std::size_t s = 0; s < n; ++s) q *= K.p();
        std::int64_t j = i - q;
        auto coef = K.binom(i, q);
        if (K.is_zero(coef)) throw contract_error("vanishing digit binomial in C-recursion");
        auto S = mat_zero(R, r, r);
        for (std::int64_t k = 0; k <= q; ++k)
            S = mat_add(R, S,
                        mat_mul(R, detail::mat_hasse(K, static_cast<long>(k),
                                                     M.C[static_cast<std::size_t>(j)]),
                                M.C[static_cast<std::size_t>(q - k)]));
        auto ci = rf_from_poly(K, p_const(K, K.inv(coef)));
        for (auto& e : S.a) e = rf_mul(K, e, ci);
        M.C[static_cast<std::size_t>(i)] = std::move(S);
    }
    M.D.assign(static_cast<std::size_t>(imax) + 1, FpRatMat{});
    M.D[0] = mat_identity(R, r);
    for (std::int64_t k = 1; k <= imax; ++k) {
        auto S = mat_zero(R, r, r);
        for (std::int64_t b = 1; b <= k; ++b)
            S = mat_add(R, S, mat_mul(R, M.D[static_cast<std::size_t>(k - b)],
                                      M.C[static_cast<std::size_t>(b)]));
        M.D[static_cast<std::size_t>(k)] = mat_neg(R, S);
    }
    return M;
}

// The worked rank-2 family: A_n = [[0, 1], [0, a_n t^{-p^n}]].
inline IDModule example_system(std::int64_t p, const std::vector<std::int64_t>& a) {
    if (p == 2) throw parameter_error("example system needs odd characteristic");
    PrimeField K(p);
    if (a.empty()) throw parameter_error("digit list must be nonempty");
    std::vector<FpRatMat> A;
    FpRatRing R{K};
    std::int64_t pn = 1;
    for (auto an : a) {
        if (an < 1 || an > p - 1)
            throw parameter_error("digit out of range [1, p-1]: " + std::to_string(an));
        auto m = mat_zero(R, 2, 2);
        m.at(0, 1) = rf_from_int(K, 1);
        m.at(1, 1) = rf_make(K, p_const(K, K.from_int(an)),
                             p_monomial(K, K.one(), static_cast<long>(pn)));
        A.push_back(std::move(m));
        pn *= p;
    }
    return idmod_build(K, std::move(A));
}

// nabla_i on exact rational-function vectors.
inline std::vector<FpRat> nabla_apply(const IDModule& M, std::int64_t i,
                                      const std::vector<FpRat>& v) {
    if (i < 0 || i > M.imax)
        throw parameter_error("connection index outside representable range");
    if (static_cast<long>(v.size()) != M.rank) throw contract_error("vector has wrong rank");
    FpRatRing R{M.K};
    std::vector<FpRat> out(v.size(), rf_zero(M.K));
    for (std::int64_t k = 0; k <= i; ++k) {
        std::vector<FpRat> dv(v.size(), rf_zero(M.K));
        for (std::size_t c = 0; c < v.size(); ++c)
            dv[c] = hasse_apply(M.K, static_cast<long>(i - k), v[c]);
        auto term = mat_apply(R, M.D[static_cast<std::size_t>(k)], dv);
        for (std::size_t c = 0; c < v.size(); ++c) out[c] = rf_add(M.K, out[c], term[c]);
    }
    return out;
}

// nabla_i on truncated-series vectors; precision loss from the t^{-p^n}
// denominators is tracked by the series orders.
inline std::vector<TruncSeries<PrimeField>> nabla_apply(const IDModule& M, std::int64_t i,
                                                        const std::vector<TruncSeries<PrimeField>>& v) {
    if (i < 0 || i > M.imax)
        throw parameter_error("connection index outside representable range");
    if (static_cast<long>(v.size()) != M.rank) throw contract_error("vector has wrong rank");
    std::int64_t outorder = INT64_MAX;
    std::vector<TruncSeries<PrimeField>> out(v.size());
    bool first = true;
    for (std::int64_t k = 0; k <= i; ++k) {
        const auto& Dk = M.D[static_cast<std::size_t>(k)];
        for (std::size_t row = 0; row < v.size(); ++row) {
            auto acc = ts_zero(M.K, INT64_MAX / 2);
            for (std::size_t col = 0; col < v.size(); ++col) {
                if (Dk.at(row, col).is_zero()) continue;
                auto dv = (i - k == 0) ? v[col] : hasse_apply(M.K, static_cast<long>(i - k), v[col]);
                acc = ts_add(M.K, acc, ts_mul_ratfun(M.K, Dk.at(row, col), dv));
            }
            if (first) out[row] = acc;
            else out[row] = ts_add(M.K, out[row], acc);
        }
        first = false;
    }
    for (auto& s : out) outorder = std::min(outorder, s.order);
    for (auto& s : out) { s.order = outorder; ts_normalize(M.K, s); }
    return out;
}

// Pass/fail report from check_iterative.
struct IterativeReport {
    bool pass = true;
    std::int64_t fail_i = -1, fail_j = -1;
    std::string detail;
};

namespace detail {

inline Poly<PrimeField> random_poly(const PrimeField& K, std::mt19937& rng, long maxdeg) {
    std::uniform_int_distribution<long> dd(0, maxdeg);
    std::uniform_int_distribution<std::int64_t> dc(0, K.p() - 1);
    Poly<PrimeField> f;
    long d = dd(rng);
    f.c.assign(static_cast<std::size_t>(d) + 1, K.zero());
    for (auto& c : f.c) c = K.from_int(dc(rng));
    p_trim(K, f);
    return f;
}

} // namespace detail

// Verifies, exactly over F_p(t), that the induced family {nabla_i}
// satisfies the module axioms on random polynomial vectors:
//   (1) nabla_0 = id,
//   (2) Leibniz: nabla_i(f v) = sum_{j+l=i} d_j(f) nabla_l(v),
//   (3) nabla_i nabla_j = C(i+j, i) nabla_{i+j} for all i+j <= B.
// Failures are reported with the first offending index pair.  The checks
// are exact, so they hold modulo t^N for every N; the N argument is kept
// for interface symmetry with the series-based solvers.
inline IterativeReport check_iterative(const IDModule& M, std::int64_t B, std::int64_t /*N*/ = 0,
                                       int trials = 4) {
    IterativeReport rep;
    if (B > M.imax) throw parameter_error("test order exceeds representable range");
    std::mt19937 rng(20260826u);
    for (int t = 0; t < trials; ++t) {
        std::vector<FpRat> v;
        for (long c = 0; c < M.rank; ++c)
            v.push_back(rf_from_poly(M.K, detail::random_poly(M.K, rng, 6)));
        // axiom (1)
        auto v0 = nabla_apply(M, 0, v);
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!rf_eq(M.K, v0[c], v[c])) {
                rep.pass = false;
                rep.fail_i = 0; rep.fail_j = 0;
                rep.detail = "nabla_0 is not the identity";
                return rep;
            }
        // axiom (2)
        auto f = rf_from_poly(M.K, detail::random_poly(M.K, rng, 4));
        std::vector<FpRat> fv(v.size(), rf_zero(M.K));
        for (std::size_t c = 0; c < v.size(); ++c) fv[c] = rf_mul(M.K, f, v[c]);
        for (std::int64_t i = 1; i <= B; ++i) {
            auto lhs = nabla_apply(M, i, fv);
            std::vector<FpRat> rhs(v.size(), rf_zero(M.K));
            for (std::int64_t j = 0; j <= i; ++j) {
                auto df = hasse_apply(M.K, static_cast<long>(j), f);
                auto nv = nabla_apply(M, i - j, v);
                for (std::size_t c = 0; c < v.size(); ++c)
                    rhs[c] = rf_add(M.K, rhs[c], rf_mul(M.K, df, nv[c]));
            }
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!rf_eq(M.K, lhs[c], rhs[c])) {
                    rep.pass = false;
                    rep.fail_i = i; rep.fail_j = -1;
                    rep.detail = "Leibniz rule fails at i=" + std::to_string(i);
                    return rep;
                }
        }
        // axiom (3)
        for (std::int64_t i = 0; i <= B; ++i)
            for (std::int64_t j = 0; i + j <= B; ++j) {
                auto lhs = nabla_apply(M, i, nabla_apply(M, j, v));
                auto rhs = nabla_apply(M, i + j, v);
                auto coef = rf_from_poly(M.K, p_const(M.K, M.K.binom(i + j, i)));
                for (std::size_t c = 0; c < v.size(); ++c)
                    rhs[c] = rf_mul(M.K, rhs[c], coef);
                for (std::size_t c = 0; c < v.size(); ++c)
                    if (!rf_eq(M.K, lhs[c], rhs[c])) {
                        rep.pass = false;
                        rep.fail_i = i; rep.fail_j = j;
                        rep.detail = "composition rule fails at (i,j)=(" +
                                     std::to_string(i) + "," + std::to_string(j) + ")";
                        return rep;
                    }
            }
    }
    return rep;
}

// Basis of power-series vectors annihilated by every nabla_{p^n}, n <= m,
// to the achievable precision.  Coefficients are sought for exponents
// 0..N-1; when N <= p^{m+1} the surviving vectors are exactly the
// truncations of honest horizontal sections (every exponent below p^{m+1}
// is controlled by some tested p-power map).
struct SectionBasis {
    std::int64_t order;
    std::vector<std::vector<TruncSeries<PrimeField>>> basis;
};

inline SectionBasis horizontal_sections(const IDModule& M, std::int64_t N) {
    std::int64_t pm = 1;
    for (long s = 0; s < M.level; ++s) pm *= M.K.p();
    if (N <= pm) throw parameter_error("precision must exceed the largest tested p-power");
    const std::size_t r = static_cast<std::size_t>(M.rank);
    const std::size_t nun = static_cast<std::size_t>(N) * r;
    // images of each unknown basis monomial under each tested map
    std::vector<std::vector<typename PrimeField::Elem>> rows;
    std::int64_t q = 1;
    for (long n = 0; n <= M.level; ++n) {
        std::vector<std::vector<TruncSeries<PrimeField>>> imgs;
        imgs.reserve(nun);
        std::int64_t ordmin = INT64_MAX, valmin = INT64_MAX;
        for (std::size_t comp = 0; comp < r; ++comp)
            for (std::int64_t e = 0; e < N; ++e) {
                std::vector<TruncSeries<PrimeField>> v(r, ts_zero(M.K, N));
                v[comp] = ts_monomial(M.K, M.K.one(), e, N);
                auto img = nabla_apply(M, q, v);
                for (auto& s : img) {
                    ordmin = std::min(ordmin, s.order);
                    if (!s.is_zero()) valmin = std::min(valmin, s.val);
                }
                imgs.push_back(std::move(img));
            }
        if (valmin == INT64_MAX) valmin = 0;
        for (std::size_t comp = 0; comp < r; ++comp)
            for (std::int64_t e = valmin; e < ordmin; ++e) {
                std::vector<typename PrimeField::Elem> row;
                row.reserve(nun);
                bool nz = false;
                for (auto& img : imgs) {
                    auto c = ts_coeff(M.K, img[comp], e);
                    nz = nz || !M.K.is_zero(c);
                    row.push_back(c);
                }
                if (nz) rows.push_back(std::move(row));
            }
        q *= M.K.p();
    }
    Mat<PrimeField> sys{rows.size(), nun, {}};
    sys.a.reserve(rows.size() * nun);
    for (auto& row : rows) sys.a.insert(sys.a.end(), row.begin(), row.end());
    auto ker = mat_nullspace(M.K, std::move(sys));
    SectionBasis out{N, {}};
    for (auto& vec : ker) {
        std::vector<TruncSeries<PrimeField>> sect;
        for (std::size_t comp = 0; comp < r; ++comp) {
            TruncSeries<PrimeField> s{0, {}, N};
            s.c.assign(static_cast<std::size_t>(N), M.K.zero());
            for (std::int64_t e = 0; e < N; ++e)
                s.c[static_cast<std::size_t>(e)] = vec[comp * static_cast<std::size_t>(N) +
                                                       static_cast<std::size_t>(e)];
            ts_normalize(M.K, s);
            sect.push_back(std::move(s));
        }
        out.basis.push_back(std::move(sect));
    }
    return out;
}

// --- the first-obstruction search: t d(f) g - t f d(g) = t g^2 - a0 f g ---

using FpPoly = Poly<PrimeField>;

inline bool b1_equation_holds(const PrimeField& K, std::int64_t a0,
                              const FpPoly& f, const FpPoly& g) {
    auto t = p_monomial(K, K.one(), 1);
    auto lhs = p_sub(K, p_mul(K, t, p_mul(K, hasse_apply(K, 1, f), g)),
                     p_mul(K, t, p_mul(K, f, hasse_apply(K, 1, g))));
    auto rhs = p_sub(K, p_mul(K, t, p_mul(K, g, g)),
                     p_scale(K, p_mul(K, f, g), K.from_int(a0)));
    return p_eq(K, lhs, rhs);
}

// All coprime pairs (f, g) with g monic, deg f, deg g <= Dmax solving the
// obstruction equation.  For fixed g the equation is linear in the
// coefficients of f, so the outer loop enumerates monic g only.
inline std::vector<std::pair<FpPoly, FpPoly>> b1_bruteforce(std::int64_t p, std::int64_t a0,
                                                            long Dmax) {
    PrimeField K(p);
    if (a0 < 1 || a0 > p - 1) throw parameter_error("a0 out of range [1, p-1]");
    if (Dmax < 0 || Dmax > 6) throw parameter_error("degree bound out of supported range");
    std::vector<std::pair<FpPoly, FpPoly>> found;
    auto t = p_monomial(K, K.one(), 1);
    for (long dg = 0; dg <= Dmax; ++dg) {
        // enumerate monic g of degree dg: lower coefficients count in base p
        std::vector<std::int64_t> gc(static_cast<std::size_t>(dg), 0);
        while (true) {
            FpPoly g;
            g.c.assign(static_cast<std::size_t>(dg) + 1, K.zero());
            for (long i = 0; i < dg; ++i) g.c[static_cast<std::size_t>(i)] = K.from_int(gc[static_cast<std::size_t>(i)]);
            g.c.back() = K.one();
            // linear system: for each f-coefficient basis monomial t^k,
            // column = coefficients of t*d(t^k)*g - t*t^k*d(g) + a0*t^k*g
            auto dg1 = hasse_apply(K, 1, g);
            long nvars = Dmax + 1;
            long maxdeg = 2 * Dmax + 1;
            auto rhs = p_mul(K, t, p_mul(K, g, g));
            Mat<PrimeField> Msys{static_cast<std::size_t>(maxdeg + 1),
                                 static_cast<std::size_t>(nvars + 1), {}};
            Msys.a.assign(Msys.rows * Msys.cols, K.zero());
            for (long k = 0; k < nvars; ++k) {
                auto tk = p_monomial(K, K.one(), k);
                auto col = p_add(K, p_sub(K, p_mul(K, t, p_mul(K, hasse_apply(K, 1, tk), g)),
                                          p_mul(K, t, p_mul(K, tk, dg1))),
                                 p_scale(K, p_mul(K, tk, g), K.from_int(a0)));
                for (long e = 0; e <= maxdeg; ++e)
                    Msys.at(static_cast<std::size_t>(e), static_cast<std::size_t>(k)) =
                        p_coeff(K, col, e);
            }
            for (long e = 0; e <= maxdeg; ++e)
                Msys.at(static_cast<std::size_t>(e), static_cast<std::size_t>(nvars)) =
                    p_coeff(K, rhs, e);
            auto pivots = mat_rref(K, Msys);
            bool consistent = true;
            for (auto c : pivots)
                if (c == static_cast<std::size_t>(nvars)) consistent = false;
            if (consistent) {
                std::vector<bool> is_pivot(static_cast<std::size_t>(nvars), false);
                for (auto c : pivots) is_pivot[c] = true;
                std::vector<std::size_t> free_cols;
                for (long c = 0; c < nvars; ++c)
                    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(static_cast<std::size_t>(c));
                // enumerate the affine solution set over the free variables
                std::vector<std::int64_t> fv(free_cols.size(), 0);
                while (true) {
                    std::vector<typename PrimeField::Elem> x(static_cast<std::size_t>(nvars), K.zero());
                    for (std::size_t fi = 0; fi < free_cols.size(); ++fi)
                        x[free_cols[fi]] = K.from_int(fv[fi]);
                    for (std::size_t rr = 0; rr < pivots.size(); ++rr) {
                        auto val = Msys.at(rr, static_cast<std::size_t>(nvars));
                        for (auto fc : free_cols)
                            val = K.sub(val, K.mul(Msys.at(rr, fc), x[fc]));
                        x[pivots[rr]] = val;
                    }
                    FpPoly f;
                    f.c = x;
                    p_trim(K, f);
                    if (!f.is_zero() && p_gcd(K, f, g).deg() == 0 &&
                        b1_equation_holds(K, a0, f, g))
                        found.emplace_back(f, g);
                    // advance free-variable counter
                    std::size_t pos = 0;
                    while (pos < fv.size() && ++fv[pos] == p) { fv[pos] = 0; ++pos; }
                    if (pos == fv.size()) break;
                    if (fv.empty()) break;
                }
            }
            // advance g counter
            std::size_t pos = 0;
            while (pos < gc.size() && ++gc[pos] == p) { gc[pos] = 0; ++pos; }
            if (pos == gc.size()) break;
            if (gc.empty()) break;
        }
    }
    auto key = [&K](const FpPoly& f) {
        std::vector<std::int64_t> k{f.deg()};
        for (auto& c : f.c) k.push_back(c.v);
        (void)K;
        return k;
    };
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        auto ka = key(a.second), kb = key(b.second);
        if (ka != kb) return ka < kb;
        return key(a.first) < key(b.first);
    });
    return found;
}

// Symbolic verdict on the two proof branches for the obstruction
// equation with coprime f, g:
//   branch A: g = t d_1(g) — comparing degrees/leading terms forces
//             a0 = 1, so the branch is refuted whenever a0 != 1;
//   branch B: d_1(g) = 0 — the coefficients c_i of f must satisfy
//             i*c_i*(a0 + 2 + i - 1) = 0 (equivalently i*c_i*(a0+i+1)=0),
//             so a nonzero c_i needs p | i or i = -(a0+1) mod p.  For
//             a0 = p-1 the two residue classes coincide, f is a
//             polynomial in t^p, and the equation cannot produce the
//             required inhomogeneous term: refuted.
struct B1Verdict {
    std::int64_t p, a0;
    bool branch_a_refuted;
    bool branch_b_refuted;
    std::int64_t branch_b_residue; // -(a0+1) mod p, the extra allowed class
    bool both_refuted() const { return branch_a_refuted && branch_b_refuted; }
};

inline B1Verdict b1_case_analysis(std::int64_t p, std::int64_t a0) {
    PrimeField K(p);
    if (a0 < 1 || a0 > p - 1) throw parameter_error("a0 out of range [1, p-1]");
    B1Verdict v{};
    v.p = p;
    v.a0 = a0;
    v.branch_a_refuted = (a0 != 1);
    v.branch_b_residue = ((-(a0 + 1)) % p + p) % p;
    v.branch_b_refuted = (v.branch_b_residue == 0);
    return v;
}

// For two solutions with the same last component, the difference of first
// components must be a constant: d_i(v1 - w1) = 0 mod t^{N-i}.
inline bool invariance_check(const IDModule& M, const std::vector<TruncSeries<PrimeField>>& v,
                             const std::vector<TruncSeries<PrimeField>>& w, std::int64_t N) {
    if (v.size() != w.size() || v.size() != static_cast<std::size_t>(M.rank))
        throw contract_error("vectors must both have the module rank");
    for (std::size_t c = 1; c < v.size(); ++c)
        if (!ts_eq_upto(M.K, v[c], w[c], N))
            throw contract_error("trailing components must agree");
    auto d = ts_sub(M.K, v[0], w[0]);
    for (std::int64_t i = 1; i <= N / 2 && i < d.order; ++i)
        if (!hasse_apply(M.K, static_cast<long>(i), d).is_zero()) return false;
    return true;
}

} // namespace idalg

#endif
