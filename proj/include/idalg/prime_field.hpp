#ifndef IDALG_PRIME_FIELD_HPP
#define IDALG_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace idalg {

// An element of F_p.  The containing PrimeField supplies the modulus;
// elements only store a canonical representative in [0, p).
struct Fp {
    std::int64_t v = 0;
    bool operator==(const Fp& o) const { return v == o.v; }
    bool operator!=(const Fp& o) const { return v != o.v; }
};

// Field context for F_p with p a (small) prime.  All arithmetic stays in
// int64; p is validated on construction so callers cannot silently work
// modulo a composite.
class PrimeField {
  public:
    using Elem = Fp;

    explicit PrimeField(std::int64_t p) : p_(p) {
        if (p < 2) throw parameter_error("modulus must be >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw parameter_error("modulus is not prime: " + std::to_string(p));
    }

    std::int64_t p() const { return p_; }
    long characteristic() const { return static_cast<long>(p_); }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{p_ == 1 ? 0 : 1}; }
    Fp from_int(std::int64_t n) const {
        std::int64_t r = n % p_;
        if (r < 0) r += p_;
        return Fp{r};
    }

    Fp add(Fp a, Fp b) const { std::int64_t r = a.v + b.v; if (r >= p_) r -= p_; return Fp{r}; }
    Fp sub(Fp a, Fp b) const { std::int64_t r = a.v - b.v; if (r < 0) r += p_; return Fp{r}; }
    Fp mul(Fp a, Fp b) const { return Fp{(a.v * b.v) % p_}; }
    Fp neg(Fp a) const { return a.v == 0 ? a : Fp{p_ - a.v}; }

    Fp inv(Fp a) const {
        if (a.v == 0) throw pole_error("inverse of zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a.v;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return Fp{t};
    }
    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    bool is_zero(Fp a) const { return a.v == 0; }
    bool eq(Fp a, Fp b) const { return a.v == b.v; }

    std::string to_string(Fp a) const { return std::to_string(a.v) + " mod " + std::to_string(p_); }
    // parse-friendly rendering: just the canonical representative
    std::string literal(Fp a) const { return std::to_string(a.v); }

    // C(n, k) mod p for 0 <= n, k, via Lucas' theorem.
    Fp binom(std::int64_t n, std::int64_t k) const {
        if (k < 0 || n < 0 || k > n) return zero();
        std::int64_t res = 1;
        while (n > 0 || k > 0) {
            std::int64_t nd = n % p_, kd = k % p_;
            if (kd > nd) return zero();
            res = (res * binom_small(nd, kd)) % p_;
            n /= p_;
            k /= p_;
        }
        return Fp{res};
    }

    // Generalized C(e, i) mod p for integer e (possibly negative), i >= 0:
    // C(e, i) = (-1)^i C(i - e - 1, i) when e < 0.
    Fp binom_int(std::int64_t e, std::int64_t i) const {
        if (i < 0) return zero();
        if (i == 0) return one();
        if (e >= 0) return binom(e, i);
        Fp b = binom(i - e - 1, i);
        return (i % 2 == 0) ? b : neg(b);
    }

  private:
    // C(n, k) for 0 <= k <= n < p; fits comfortably in int64 for the
    // small primes this library targets.
    std::int64_t binom_small(std::int64_t n, std::int64_t k) const {
        std::int64_t res = 1;
        for (std::int64_t j = 1; j <= k; ++j) {
            res = res * ((n - k + j) % p_) % p_;
            res = res * mod_inv(j) % p_;
        }
        return res;
    }
    std::int64_t mod_inv(std::int64_t a) const { return inv(Fp{a % p_}).v; }

    std::int64_t p_;
};

} // namespace idalg

#endif
