#pragma once

#include <mpfr.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

/// Binary floating-point number with explicit mantissa precision in bits.
/// Precision is always chosen by the caller; there is no implicit machine
/// default anywhere in this library.
class BigFloat {
  public:
    explicit BigFloat(int precision_bits);
    BigFloat(const Rational& q, int precision_bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    int precision() const { return prec_; }

    static BigFloat pi(int precision_bits);
    static BigFloat sin(const BigFloat& x);
    static BigFloat cos(const BigFloat& x);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    BigFloat pow(long e) const;
    bool is_zero() const;

    /// The nearest integer when the value lies within 2^tol_log2 of one.
    std::optional<Int> nearest_integer(long tol_log2 = -20) const;

    double to_double() const;
    std::string str(int digits = 30) const;

  private:
    mpfr_t x_;
    int prec_;
};

/// One summand of a trigonometric evaluation: sign * weight / f(angle)^power,
/// with angle = angle_over_pi * pi. Any scalar prefactor raised to `power`
/// (the q or k of the closed forms) is folded into `weight` exactly by the
/// caller.
struct TrigTerm {
    int sign;                // +1 or -1
    Rational weight;         // exact prefactor, includes base^power
    Rational angle_over_pi;  // angle as a rational multiple of pi
    int power;               // exponent on the denominator
};

/// Denominator shape of a TrigTerm.
enum class TrigDenom {
    SinSquared,   // sin^2(angle)
    OneMinusCos,  // 1 - cos(angle)
};

struct TrigSumResult {
    BigFloat value;
    std::optional<Int> integer;  // set only when stable across two precisions
};

/// Evaluates sum_i sign_i * weight_i / f(angle_i)^power_i at `precision_bits`
/// and again at twice that precision; the integer field is set only when both
/// evaluations recognize the same integer within 2^-20. Angles that make the
/// denominator vanish raise "pole in summand".
TrigSumResult trig_sum(std::span<const TrigTerm> terms, TrigDenom denom, int precision_bits);

}  // namespace moduli
