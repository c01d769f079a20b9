#include "moduli/cohomology.hpp"

#include <sstream>

namespace moduli {

std::string Monomial::str() const {
    if (m == 0 && n == 0 && p == 0) return "1";
    std::ostringstream os;
    auto emit = [&os](const char* sym, int e) {
        if (e == 0) return;
        os << sym;
        if (e > 1) os << "^" << e;
    };
    emit("α", m);
    emit("β", n);
    emit("γ", p);
    return os.str();
}

CohClass CohClass::monomial(const GenusContext& ctx, Monomial mono, Rational coeff) {
    CohClass r(ctx);
    r.accumulate(mono, coeff);
    return r;
}

Rational CohClass::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

CohClass CohClass::weight_part(int weight) const {
    CohClass r(ctx_);
    for (const auto& [mono, coeff] : terms_)
        if (mono.weight() == weight) r.terms_.emplace(mono, coeff);
    return r;
}

std::vector<int> CohClass::weights() const {
    std::vector<int> ws;
    for (const auto& [mono, coeff] : terms_) {
        int w = mono.weight();
        if (ws.empty() || ws.back() != w) ws.push_back(w);
    }
    return ws;
}

void CohClass::accumulate(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero() || mono.weight() > ctx_.top_weight) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CohClass::require_same_context(const CohClass& o) const {
    if (ctx_.g != o.ctx_.g) throw std::domain_error("context mismatch between cohomology classes");
}

CohClass& CohClass::operator+=(const CohClass& o) {
    require_same_context(o);
    for (const auto& [mono, coeff] : o.terms_) accumulate(mono, coeff);
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    require_same_context(o);
    for (const auto& [mono, coeff] : o.terms_) accumulate(mono, -coeff);
    return *this;
}

CohClass operator-(const CohClass& a) {
    CohClass r(a.ctx_);
    for (const auto& [mono, coeff] : a.terms_) r.terms_.emplace(mono, -coeff);
    return r;
}

CohClass operator*(const Rational& c, CohClass a) {
    if (c.is_zero()) return CohClass(a.ctx_);
    for (auto& [mono, coeff] : a.terms_) coeff *= c;
    return a;
}

CohClass cup(const CohClass& a, const CohClass& b) {
    a.require_same_context(b);
    CohClass r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial prod{ma.m + mb.m, ma.n + mb.n, ma.p + mb.p};
            if (prod.weight() > a.ctx_.top_weight) continue;
            r.accumulate(prod, ca * cb);
        }
    }
    return r;
}

std::string CohClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) os << (coeff.sign() < 0 ? " - " : " + ");
        else if (coeff.sign() < 0) os << "-";
        Rational abs = coeff.sign() < 0 ? -coeff : coeff;
        bool unit_monomial = mono.weight() == 0;
        if (abs != Rational(1) || unit_monomial) {
            os << abs.str();
            if (!unit_monomial) os << " ";
        }
        if (!unit_monomial) os << mono.str();
        first = false;
    }
    return os.str();
}

Rational intersection_number(int g, const Monomial& mono) {
    if (g < 1) throw std::domain_error("intersection number needs genus >= 1");
    const auto [m, n, p] = mono;
    if (mono.weight() != 3 * g - 3)
        throw std::domain_error("not top degree: weight " + std::to_string(mono.weight()) +
                                " at genus " + std::to_string(g));
    if (p > g) return 0;
    long q = m + p - g + 1;
    if (q < 0) return 0;
    Rational value = Rational(factorial(g) * factorial(m), factorial(g - p) * factorial(q));
    value *= Rational(int_pow(2, static_cast<unsigned long>(2 * g - 2 - p)));
    value *= Rational(int_pow(2, static_cast<unsigned long>(q)) - 2);
    value *= bernoulli(q);
    if ((p - g) % 2 != 0) value = -value;
    return value;
}

Rational intersection_number(const GenusContext& ctx, const Monomial& mono) {
    return intersection_number(ctx.g, mono);
}

Rational evaluate(const CohClass& x) {
    Rational total(0);
    for (const auto& [mono, coeff] : x.terms()) {
        if (mono.weight() != x.context().top_weight) continue;
        total += coeff * intersection_number(x.context(), mono);
    }
    return total;
}

Rational top_pairing(const CohClass& a, const CohClass& b) {
    a.require_same_context(b);
    int top = a.ctx_.top_weight;
    Rational total(0);
    for (const auto& [ma, ca] : a.terms_) {
        int need = top - ma.weight();
        for (const auto& [mb, cb] : b.terms_) {
            if (mb.weight() != need) continue;
            total += ca * cb * intersection_number(a.ctx_, {ma.m + mb.m, ma.n + mb.n, ma.p + mb.p});
        }
    }
    return total;
}

std::vector<Monomial> monomials_of_weight(int weight) {
    std::vector<Monomial> result;
    for (int p = 0; 3 * p <= weight; ++p)
        for (int n = 0; 2 * n + 3 * p <= weight; ++n)
            result.push_back({weight - 2 * n - 3 * p, n, p});
    std::sort(result.begin(), result.end());
    return result;
}

bool is_zero_in_cohomology(const CohClass& x) {
    const auto& ctx = x.context();
    for (int w : x.weights()) {
        CohClass part = x.weight_part(w);
        for (const auto& mono : monomials_of_weight(ctx.top_weight - w)) {
            if (!top_pairing(part, CohClass::monomial(ctx, mono, 1)).is_zero()) return false;
        }
    }
    return true;
}

Rational gamma_reduce(const GenusContext& ctx, const Monomial& mono) {
    if (mono.p < 1) throw std::domain_error("gamma reduction needs p >= 1");
    if (mono.weight() != ctx.top_weight) throw std::domain_error("not top degree");
    return Rational(2 * ctx.g) * intersection_number(ctx.g - 1, {mono.m, mono.n, mono.p - 1});
}

Rational i_coefficient(const GenusContext& ctx, int k) {
    if (k < 0 || k > ctx.g - 1) throw std::domain_error("I_k index out of range");
    Monomial mono{ctx.g - 1 + 2 * k, ctx.g - 1 - k, 0};
    return intersection_number(ctx, mono) / Rational(factorial(ctx.g - 1 + 2 * k));
}

PowerSeries i_series(const GenusContext& ctx) {
    PowerSeries s("t2", ctx.g - 1);
    for (int k = 0; k <= ctx.g - 1; ++k) s.set(k, i_coefficient(ctx, k));
    return s;
}

PowerSeries i_series_ode_residual(int g) {
    if (g < 3) throw std::domain_error("ODE residual needs genus >= 3");
    int order = 2 * g;  // work modulo t^{2g}
    PowerSeries i_g = i_series(GenusContext(g)).inflated_even("t").truncated(order);
    PowerSeries i_gm1 = i_series(GenusContext(g - 1)).inflated_even("t").truncated(order);

    PowerSeries sinh_t("t", order);
    for (int i = 1; i <= order; i += 2) sinh_t.set(i, Rational(Int(1), factorial(i)));
    PowerSeries sinh_over_t("t", order);
    for (int i = 0; i <= order; i += 2) sinh_over_t.set(i, Rational(Int(1), factorial(i + 1)));

    PowerSeries lhs = shifted_up(derivative(i_g * sinh_over_t).truncated(order), 2);
    PowerSeries t("t", order);
    t.set(1, 1);
    PowerSeries rhs = Rational(g) * ((t - sinh_t) * (i_g + Rational(4) * i_gm1));
    return (lhs - rhs).truncated(2 * g - 1);
}

}  // namespace moduli
