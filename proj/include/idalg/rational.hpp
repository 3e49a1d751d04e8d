#ifndef IDALG_RATIONAL_HPP
#define IDALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace idalg {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator (mpq_class canonicalizes on construction; we
// canonicalize manually where GMP does not).
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(long n, long d) : v_(n, d) {
        if (d == 0) throw pole_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit BigRational(const mpz_class& z) : v_(z) {}

    // Accepts "a", "-a", "a/b".
    static BigRational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw parameter_error("bad rational literal: " + s);
        if (q.get_den() == 0) throw pole_error("rational with zero denominator");
        q.canonicalize();
        return BigRational(q);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw pole_error("rational division by zero");
        return BigRational(mpq_class(v_ / o.v_));
    }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

// Field context over Q.  Stateless; mirrors the PrimeField interface so
// algorithms can be written once against a generic field F.
struct RationalField {
    using Elem = BigRational;

    static Elem zero() { return BigRational(0L); }
    static Elem one() { return BigRational(1L); }
    static Elem from_int(long n) { return BigRational(n); }

    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (a.is_zero()) throw pole_error("inverse of zero");
        return BigRational(1L) / a;
    }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static bool is_zero(const Elem& a) { return a.is_zero(); }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    static long characteristic() { return 0; }
    static std::string to_string(const Elem& a) { return a.str(); }
    // parse-friendly rendering (same as to_string over Q)
    static std::string literal(const Elem& a) { return a.str(); }

    // Generalized binomial C(e, i) for integer e (possibly negative), i >= 0.
    static Elem binom_int(long e, long i) {
        if (i < 0) return zero();
        mpz_class num = 1;
        for (long k = 0; k < i; ++k) num *= mpz_class(e - k);
        mpz_class den;
        mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(i));
        mpq_class q(num, den);
        q.canonicalize();
        return BigRational(q);
    }

    static Elem binom(long n, long k) { return binom_int(n, k); }
};

} // namespace idalg

#endif
