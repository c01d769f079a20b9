#include "moduli/characteristic.hpp"

namespace moduli {

CharClass::CharClass(CohClass cls, Rational rank) : cls_(std::move(cls)), rank_(std::move(rank)) {
    if (cls_.coefficient({0, 0, 0}) != rank_)
        throw std::domain_error("declared rank disagrees with weight-0 part");
}

CharClass& CharClass::operator+=(const CharClass& o) {
    cls_ += o.cls_;
    rank_ += o.rank_;
    return *this;
}

CharClass& CharClass::operator-=(const CharClass& o) {
    cls_ -= o.cls_;
    rank_ -= o.rank_;
    return *this;
}

CharClass dual(const CharClass& x) {
    CohClass r(x.context());
    for (const auto& [mono, coeff] : x.cls().terms())
        r.accumulate(mono, mono.weight() % 2 == 0 ? coeff : -coeff);
    return CharClass(std::move(r), x.rank());
}

CharClass adams(long r, const CharClass& x) {
    CohClass out(x.context());
    for (const auto& [mono, coeff] : x.cls().terms()) {
        Int scale = int_pow(r, static_cast<unsigned long>(mono.weight()));
        out.accumulate(mono, coeff * Rational(scale));
    }
    return CharClass(std::move(out), x.rank());
}

CohClass exp_class(const CohClass& x) {
    if (!x.coefficient({0, 0, 0}).is_zero())
        throw std::domain_error("exp of class with nonzero weight-0 part");
    const auto& ctx = x.context();
    CohClass acc = CohClass::one(ctx);
    CohClass power = CohClass::one(ctx);
    for (int j = 1; j <= ctx.top_weight; ++j) {
        power = cup(power, x);
        if (power.is_zero_polynomial()) break;
        acc += Rational(Int(1), factorial(j)) * power;
    }
    return acc;
}

CharClass exp_alpha(const GenusContext& ctx, const Rational& c) {
    CohClass r(ctx);
    for (int k = 0; k <= ctx.top_weight; ++k)
        r.accumulate({k, 0, 0}, c.pow(k) / Rational(factorial(k)));
    return CharClass(std::move(r), 1);
}

CharClass ch_T(const GenusContext& ctx) {
    CohClass r(ctx);
    r.accumulate({0, 0, 0}, 3 * ctx.g - 3);
    r.accumulate({1, 0, 0}, 2);
    for (int k = 2; k <= ctx.top_weight; ++k) {
        Rational inv_fact(Int(1), factorial(k));
        if (k % 2 == 0) {
            int j = k / 2;
            r.accumulate({0, j, 0}, Rational(2 * (ctx.g - 1)) * inv_fact);
        } else {
            int j = (k + 1) / 2;  // k = 2j-1, j >= 2
            r.accumulate({1, j - 1, 0}, Rational(2) * inv_fact);
            r.accumulate({0, j - 2, 1}, Rational(-8 * (j - 1)) * inv_fact);
        }
    }
    return CharClass(std::move(r), 3 * ctx.g - 3);
}

CharClass ch_Q(const GenusContext& ctx) {
    CohClass r(ctx);
    r.accumulate({0, 0, 0}, ctx.g - 1);
    r.accumulate({1, 0, 0}, 1);
    for (int k = 2; k <= ctx.top_weight; ++k) {
        Rational inv_fact(Int(1), factorial(k));
        if (k % 2 == 0) {
            r.accumulate({0, k / 2, 0}, -inv_fact);
        } else {
            int j = (k + 1) / 2;
            r.accumulate({1, j - 1, 0}, inv_fact);
            r.accumulate({0, j - 2, 1}, Rational(2) * inv_fact);
        }
    }
    return CharClass(std::move(r), ctx.g - 1);
}

CharClass ch_W(const GenusContext& ctx) {
    CohClass r(ctx);
    r.accumulate({0, 0, 0}, 4);
    for (int j = 1; 2 * j <= ctx.top_weight; ++j)
        r.accumulate({0, j, 0}, Rational(Int(2), factorial(2 * j)));
    return CharClass(std::move(r), 4);
}

CohClass beta_substitute(const GenusContext& ctx, const PowerSeries& even_series,
                         const Rational& scale_per_index) {
    CohClass r(ctx);
    for (int i = 0; i <= even_series.order(); ++i)
        r.accumulate({0, i, 0}, even_series[i] * scale_per_index.pow(i));
    return r;
}

CharClass ahat(const GenusContext& ctx) {
    PowerSeries series = u_over_sinh_u_power(2 * ctx.g - 2, ctx.top_weight);
    return CharClass(beta_substitute(ctx, series, Rational(1, 4)), 1);
}

CharClass todd(const GenusContext& ctx) { return exp_alpha(ctx, 1) * ahat(ctx); }

std::vector<CohClass> chern_Q_recurrence(const GenusContext& ctx, int upto) {
    if (upto < 0) throw std::domain_error("negative Chern index");
    std::vector<CohClass> c;
    c.reserve(static_cast<size_t>(upto) + 1);
    c.push_back(CohClass::one(ctx));
    if (upto >= 1) c.push_back(CohClass::alpha(ctx));
    CohClass a = CohClass::alpha(ctx), b = CohClass::beta(ctx), g = CohClass::gamma(ctx);
    for (int k = 1; k < upto; ++k) {
        CohClass next = cup(a, c[static_cast<size_t>(k)]);
        next += Rational(k) * cup(b, c[static_cast<size_t>(k - 1)]);
        if (k >= 2) next += Rational(2) * cup(g, c[static_cast<size_t>(k - 2)]);
        c.push_back(Rational(1, k + 1) * next);
    }
    return c;
}

std::vector<CohClass> chern_Q_series(const GenusContext& ctx, int upto) {
    if (upto < 0) throw std::domain_error("negative Chern index");
    // Exponent of the generating function, with the t-degree of each term
    // equal to its weight, so powers of t need no separate bookkeeping.
    CohClass x(ctx);
    x.accumulate({1, 0, 0}, 1);
    for (int n = 2; 2 * n - 1 <= ctx.top_weight; ++n) {
        Rational inv(Int(1), Int(2 * n - 1));
        x.accumulate({1, n - 1, 0}, inv);
        x.accumulate({0, n - 2, 1}, Rational(2) * inv);
    }
    for (int n = 1; 2 * n <= ctx.top_weight; ++n) x.accumulate({0, n, 0}, Rational(1, 2 * n));
    CohClass total = exp_class(x);
    std::vector<CohClass> c;
    for (int k = 0; k <= upto; ++k) c.push_back(total.weight_part(k));
    return c;
}

std::vector<CohClass> chern_from_character(const CharClass& x, int upto) {
    if (upto < 0) throw std::domain_error("negative Chern index");
    const auto& ctx = x.context();
    CohClass exponent(ctx);
    for (int k = 1; k <= ctx.top_weight; ++k) {
        Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
        exponent += (sign * Rational(factorial(k - 1))) * x.cls().weight_part(k);
    }
    CohClass total = exp_class(exponent);
    std::vector<CohClass> c;
    for (int k = 0; k <= upto; ++k) c.push_back(total.weight_part(k));
    return c;
}

CharClass ch_sym_U(const GenusContext& ctx, int k) {
    if (k < 0) throw std::domain_error("negative symmetric power");
    PowerSeries ratio =
        sinh_ku_over_u(k + 1, ctx.top_weight) / sinh_ku_over_u(1, ctx.top_weight);
    CohClass even = beta_substitute(ctx, ratio, Rational(1, 4));
    CharClass result = CharClass(std::move(even), k + 1) * exp_alpha(ctx, Rational(k, 2));
    return result;
}

}  // namespace moduli
