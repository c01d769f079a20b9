#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace moduli {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number, always reduced, denominator > 0.
///
/// Thin wrapper over mpq_class that guarantees canonical form on every
/// construction path. All arithmetic is exact; nothing here ever rounds.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}                  // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}           // NOLINT(google-explicit-constructor)

    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int num() const { return Int(v_.get_num()); }
    const Int den() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// The underlying integer; throws unless the denominator is 1.
    Int as_integer() const {
        if (!is_integer()) throw std::domain_error("not an integer: " + str());
        return Int(v_.get_num());
    }
    std::optional<Int> integer() const {
        if (!is_integer()) return std::nullopt;
        return Int(v_.get_num());
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

/// n! for n >= 0.
Int factorial(long n);

/// Generalized binomial coefficient.
///
/// C(n,k) = 0 for k < 0; for n >= 0 the usual value (0 when k > n); for
/// negative n the polynomial extension n(n-1)...(n-k+1)/k!, always an integer.
Int binomial(long n, long k);

/// b^e for e >= 0.
Int int_pow(long base, unsigned long e);

/// Bernoulli number B_q under the x/(e^x - 1) convention, so B_1 = -1/2 and
/// B_q = 0 for odd q > 1. Other sources use the B_1 = +1/2 convention; every
/// identity in this library assumes this one. Cached, safe for concurrent use.
Rational bernoulli(long q);

/// Test-harness hooks: poison or restore a single cached Bernoulli value.
/// Used by negative-control tests to prove the verification suite actually
/// detects corrupted inputs. Never call these outside tests.
void set_bernoulli_override(long q, const Rational& value);
void clear_bernoulli_overrides();

}  // namespace moduli
