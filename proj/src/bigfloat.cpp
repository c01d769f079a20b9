#include "moduli/bigfloat.hpp"

#include <cmath>

namespace moduli {

BigFloat::BigFloat(int precision_bits) : prec_(precision_bits) {
    if (precision_bits < 2) throw std::domain_error("precision below 2 bits");
    mpfr_init2(x_, precision_bits);
    mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(const Rational& q, int precision_bits) : BigFloat(precision_bits) {
    mpfr_set_q(x_, q.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(x_, o.prec_);
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(x_, o.prec_);
    mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(x_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(x_, o.x_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::pi(int precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat r(x.prec_);
    mpfr_sin(r.x_, x.x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.prec_);
    mpfr_cos(r.x_, x.x_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::pow(long e) const {
    BigFloat r(prec_);
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(x_) != 0; }

std::optional<Int> BigFloat::nearest_integer(long tol_log2) const {
    mpfr_t rounded, diff;
    mpfr_init2(rounded, prec_);
    mpfr_init2(diff, prec_);
    mpfr_round(rounded, x_);
    mpfr_sub(diff, x_, rounded, MPFR_RNDN);
    mpfr_abs(diff, diff, MPFR_RNDN);
    bool close = mpfr_cmp_d(diff, std::ldexp(1.0, static_cast<int>(tol_log2))) < 0;
    std::optional<Int> result;
    if (close) {
        Int z;
        mpfr_get_z(z.get_mpz_t(), rounded, MPFR_RNDN);
        result = z;
    }
    mpfr_clear(rounded);
    mpfr_clear(diff);
    return result;
}

double BigFloat::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, x_) < 0) return "<mpfr error>";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {

bool denominator_vanishes(const Rational& angle_over_pi, TrigDenom denom) {
    // sin(r*pi) = 0 iff r is an integer; 1 - cos(r*pi) = 0 iff r is an even integer.
    if (!angle_over_pi.is_integer()) return false;
    if (denom == TrigDenom::SinSquared) return true;
    return angle_over_pi.as_integer() % 2 == 0;
}

BigFloat evaluate_once(std::span<const TrigTerm> terms, TrigDenom denom, int bits) {
    BigFloat total(bits);
    BigFloat pi = BigFloat::pi(bits);
    for (const auto& term : terms) {
        if (denominator_vanishes(term.angle_over_pi, denom))
            throw std::domain_error("pole in summand");
        BigFloat angle = BigFloat(term.angle_over_pi, bits) * pi;
        BigFloat den(bits);
        if (denom == TrigDenom::SinSquared) {
            BigFloat s = BigFloat::sin(angle);
            den = s * s;
        } else {
            den = BigFloat(Rational(1), bits) - BigFloat::cos(angle);
        }
        BigFloat contrib = BigFloat(term.weight, bits) / den.pow(term.power);
        if (term.sign < 0)
            total -= contrib;
        else
            total += contrib;
    }
    return total;
}

}  // namespace

TrigSumResult trig_sum(std::span<const TrigTerm> terms, TrigDenom denom, int precision_bits) {
    if (precision_bits < 64) throw std::domain_error("trig_sum precision below 64 bits");
    BigFloat lo = evaluate_once(terms, denom, precision_bits);
    BigFloat hi = evaluate_once(terms, denom, 2 * precision_bits);
    auto lo_int = lo.nearest_integer();
    auto hi_int = hi.nearest_integer();
    TrigSumResult result{hi, std::nullopt};
    if (lo_int && hi_int && *lo_int == *hi_int) result.integer = hi_int;
    return result;
}

}  // namespace moduli
