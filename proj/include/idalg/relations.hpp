#ifndef IDALG_RELATIONS_HPP
#define IDALG_RELATIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace idalg {

using QField = RationalField;
using QSeries = TruncSeries<QField>;

// Polynomial in variables X1..Xn (optionally X0 for an adjoined series)
// with rational coefficients; exponent multi-indices map to coefficients,
// zero coefficients never stored.
struct RelationPoly {
    std::size_t nvars = 0;
    std::map<std::vector<int>, BigRational> terms;

    bool is_zero() const { return terms.empty(); }
};

// Graded lexicographic order on exponent vectors: lower total degree
// first; within a degree, lexicographically larger (X1-heavier) first.
inline bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;
}

// All exponent vectors of total degree <= d over n variables, in grlex order.
inline std::vector<std::vector<int>> monomials_upto(std::size_t n, int d) {
    std::vector<std::vector<int>> out;
    for (int deg = 0; deg <= d; ++deg) {
        // enumerate compositions of deg into n parts, lex-descending
        std::vector<std::vector<int>> level;
        std::vector<int> e(n, 0);
        auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
            if (pos + 1 == n) {
                e[pos] = rem;
                level.push_back(e);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                e[pos] = v;
                self(self, pos + 1, rem - v);
            }
        };
        if (n > 0) rec(rec, 0, deg);
        else if (deg == 0) level.push_back({});
        for (auto& m : level) out.push_back(m);
    }
    return out;
}

struct RelationBasis {
    int degree = 0;
    std::int64_t order = 0;
    bool under_determined = false;
    std::vector<RelationPoly> basis;
};

namespace detail {

inline QSeries monomial_series(const QField& K, const std::vector<QSeries>& fs,
                               const std::vector<int>& e, std::int64_t N) {
    auto acc = ts_from_poly(K, p_from_int(K, 1), N);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) acc = ts_mul(K, acc, fs[i]);
    return acc;
}

} // namespace detail

// Exact kernel of the coefficient matrix of all monomials f^e, |e| <= d,
// up to order N.  Each kernel vector is returned as a polynomial relation
// normalized so its grlex-leading coefficient is 1.
inline RelationBasis find_relations(const std::vector<QSeries>& fs, int d, std::int64_t N) {
    QField K;
    if (d < 1) throw parameter_error("degree bound must be >= 1");
    for (auto& f : fs) {
        if (f.order < N) throw precision_error("series order below requested truncation");
        if (!f.is_zero() && f.val < 0)
            throw parameter_error("relations are sought among power series (valuation >= 0)");
    }
    auto mons = monomials_upto(fs.size(), d);
    RelationBasis out;
    out.degree = d;
    out.order = N;
    out.under_determined = (N <= static_cast<std::int64_t>(mons.size()));
    Mat<QField> M{static_cast<std::size_t>(N), mons.size(), {}};
    M.a.assign(M.rows * M.cols, K.zero());
    for (std::size_t j = 0; j < mons.size(); ++j) {
        auto s = detail::monomial_series(K, fs, mons[j], N);
        for (std::int64_t e = 0; e < N; ++e)
            M.at(static_cast<std::size_t>(e), j) = ts_coeff(K, s, e);
    }
    auto ker = mat_nullspace(K, std::move(M));
    for (auto& vec : ker) {
        RelationPoly P;
        P.nvars = fs.size();
        for (std::size_t j = 0; j < mons.size(); ++j)
            if (!K.is_zero(vec[j])) P.terms[mons[j]] = vec[j];
        if (P.is_zero()) continue;
        // normalize: grlex-leading coefficient 1
        const std::vector<int>* lead = nullptr;
        for (auto& [e, c] : P.terms)
            if (!lead || grlex_less(*lead, e)) lead = &e;
        auto li = K.inv(P.terms[*lead]);
        for (auto& [e, c] : P.terms) c = K.mul(c, li);
        out.basis.push_back(std::move(P));
    }
    return out;
}

inline BigRational relation_eval(const RelationPoly& P, const std::vector<BigRational>& vals) {
    QField K;
    if (vals.size() != P.nvars) throw contract_error("value vector has wrong length");
    BigRational acc = K.zero();
    for (auto& [e, c] : P.terms) {
        BigRational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = K.mul(t, vals[i]);
        acc = K.add(acc, t);
    }
    return acc;
}

inline double relation_eval(const RelationPoly& P, const std::vector<double>& vals) {
    if (vals.size() != P.nvars) throw contract_error("value vector has wrong length");
    double acc = 0;
    for (auto& [e, c] : P.terms) {
        double t = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        acc += t;
    }
    return acc;
}

// Exact path: residual must be exactly 0.
inline std::pair<bool, BigRational> specialize_check(const RelationPoly& P,
                                                     const std::vector<BigRational>& vals) {
    auto r = relation_eval(P, vals);
    return {r.is_zero(), r};
}

// Float path: |residual| <= tol.
inline std::pair<bool, double> specialize_check(const RelationPoly& P,
                                                const std::vector<double>& vals, double tol) {
    auto r = relation_eval(P, vals);
    return {std::abs(r) <= tol, r};
}

inline bool relations_equal_up_to_scale(const RelationPoly& a, const RelationPoly& b) {
    // both are leading-coefficient normalized, so equality is literal
    if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
    QField K;
    for (auto& [e, c] : a.terms) {
        auto it = b.terms.find(e);
        if (it == b.terms.end() || !K.eq(c, it->second)) return false;
    }
    return true;
}

struct StabilityReport {
    std::vector<std::pair<std::int64_t, std::size_t>> dims; // (order, kernel dim)
    bool stabilized = false; // same dimension at the two largest orders
    std::vector<RelationPoly> stable; // relations present at both largest orders
    bool under_determined_anywhere = false;
};

inline StabilityReport stability_scan(const std::vector<QSeries>& fs, int d,
                                      const std::vector<std::int64_t>& orders) {
    if (orders.size() < 2) throw parameter_error("stability scan needs at least two orders");
    for (std::size_t i = 1; i < orders.size(); ++i)
        if (orders[i] <= orders[i - 1]) throw parameter_error("orders must be increasing");
    StabilityReport rep;
    std::vector<RelationBasis> bases;
    for (auto N : orders) {
        bases.push_back(find_relations(fs, d, N));
        rep.dims.emplace_back(N, bases.back().basis.size());
        rep.under_determined_anywhere = rep.under_determined_anywhere || bases.back().under_determined;
    }
    const auto& last = bases[bases.size() - 1];
    const auto& prev = bases[bases.size() - 2];
    rep.stabilized = last.basis.size() == prev.basis.size();
    for (auto& P : last.basis)
        for (auto& Q : prev.basis)
            if (relations_equal_up_to_scale(P, Q)) { rep.stable.push_back(P); break; }
    return rep;
}

inline std::string relation_to_string(const RelationPoly& P, bool x0_adjoined = false) {
    if (P.is_zero()) return "0";
    QField K;
    // render grlex-descending: leading term first
    std::vector<const std::vector<int>*> order;
    for (auto& [e, c] : P.terms) order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [](const std::vector<int>* a, const std::vector<int>* b) { return grlex_less(*b, *a); });
    std::string s;
    for (auto* ep : order) {
        const auto& c = P.terms.at(*ep);
        bool neg = c.sign() < 0;
        auto ca = c.abs();
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < ep->size(); ++i) {
            int e = (*ep)[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            std::size_t label = x0_adjoined ? i : i + 1;
            mono += "X" + std::to_string(label);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) s += ca.str();
        else {
            if (!ca.is_one()) s += ca.str() + "*";
            s += mono;
        }
    }
    return s;
}

} // namespace idalg

#endif
