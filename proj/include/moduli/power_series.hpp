#pragma once

#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

/// Truncated univariate formal power series with exact rational coefficients.
///
/// A series of order N keeps degrees 0..N. Binary operations truncate to the
/// minimum of the two operands' orders. The variable name is a diagnostic
/// label only and is never used to reject operands.
class PowerSeries {
  public:
    PowerSeries(std::string variable, int order)
        : variable_(std::move(variable)), coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::domain_error("series order must be >= 0");
    }
    PowerSeries(std::string variable, std::vector<Rational> coeffs)
        : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::domain_error("series needs at least the constant term");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& variable() const { return variable_; }

    const Rational& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    void set(int i, Rational c) { coeffs_.at(static_cast<size_t>(i)) = std::move(c); }

    bool is_zero() const;

    PowerSeries truncated(int order) const;

    /// Reinterpret coefficient i as the degree-2i coefficient of `variable`.
    /// Inverse of the squared-variable storage used for even series.
    PowerSeries inflated_even(std::string variable) const;

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator-(const PowerSeries& a);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    /// Long division; throws "non-unit divisor" when b(0) = 0.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, PowerSeries a);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    std::string variable_;
    std::vector<Rational> coeffs_;
};

/// Formal exponential; requires zero constant term.
PowerSeries exp(const PowerSeries& a);

/// Formal logarithm; requires constant term 1.
PowerSeries log(const PowerSeries& a);

/// Termwise d/dx, order drops by one.
PowerSeries derivative(const PowerSeries& a);

/// Multiply by x^k; top k coefficients fall off the truncation, order is kept.
PowerSeries shifted_up(const PowerSeries& a, int k);

// Named even series. Each is an even function of its natural variable v and
// is returned indexed by v^2: coefficient i is the v^{2i} coefficient. The
// `order` argument is the truncation degree in v, so the result stores
// indices 0..order/2.

/// t/sinh t = 1 - t^2/6 + 7t^4/360 - ...
PowerSeries t_over_sinh_t(int order);

/// (u/sinh u)^m.
PowerSeries u_over_sinh_u_power(int m, int order);

/// sinh(ku)/u = k + k^3 u^2/6 + ...
PowerSeries sinh_ku_over_u(long k, int order);

/// 2 cosh(sqrt(b)) = 2 + b + b^2/12 + ..., indexed by b.
PowerSeries two_cosh_sqrt(int order);

}  // namespace moduli
