#include "moduli/verlinde.hpp"

#include <sstream>

#include "moduli/bigfloat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace moduli {

PowerSeries f_series(long p, int order) {
    PowerSeries f("w", order);
    for (int h = 0; h <= order; ++h)
        f.set(h, Rational(4 * binomial(p + h, 2 * h + 1) + binomial(p + h - 1, 2 * h - 1)));
    return f;
}

Rational g_coefficient(long p, long q, int k) {
    if (q == 0) throw std::domain_error("G undefined at q=0");
    if (k < 0) throw std::domain_error("negative series index");
    PowerSeries fq = f_series(q, k);
    return (f_series(p, k) / (fq * fq))[k];
}

Rational v_gen(int h, long p, long q) {
    if (h < 1) throw std::domain_error("v_gen needs h >= 1");
    if (q == 0 || p == 0) return 0;
    if (q < 0) {
        Rational v = v_gen(h, -p, -q);
        return h % 2 == 0 ? v : -v;
    }
    if (p < 0) return -v_gen(h, -p, q);
    Rational scale = Rational(4) * Rational(-4 * q).pow(h);
    return scale *
           (Rational(p * (h + 1)) * g_coefficient(q, q, h) - Rational(q) * g_coefficient(p, q, h));
}

Rational v_hrr(const GenusContext& ctx, long p, long q) {
    CharClass twisted = adams(p - q, ch_Q(ctx)) * exp_alpha(ctx, Rational(q - 1));
    return top_pairing(twisted.cls(), todd(ctx).cls());
}

namespace {

Int recognized_integer(std::span<const TrigTerm> terms, TrigDenom denom, int precision_bits) {
    TrigSumResult r = trig_sum(terms, denom, precision_bits);
    if (!r.integer) r = trig_sum(terms, denom, 2 * precision_bits);
    if (!r.integer) throw std::domain_error("trig route unstable");
    return *r.integer;
}

}  // namespace

Int v_trig(int h, long c, long q, int precision_bits) {
    if (h < 1) throw std::domain_error("v_trig needs h >= 1");
    if (q < 1) throw std::domain_error("v_trig needs q >= 1");
    // 0 <= c <= 2 + (g-2)/q with g = h+1, i.e. cq <= 2q + h - 1.
    if (c < 0 || c * q > 2 * q + h - 1) throw std::domain_error("c outside the admissible range");
    if (c == 0) return 0;
    Rational q_pow = Rational(q).pow(h);
    std::vector<TrigTerm> terms;
    for (long j = 1; j <= 2 * q - 1; ++j) {
        int parity_weight = (j * (c + 1)) % 2 == 0 ? 1 : -1;  // (-1)^{j(c+1)}
        Rational weight = Rational(c) * Rational(h + 1 - parity_weight) * q_pow;
        terms.push_back({j % 2 == 1 ? 1 : -1, weight, Rational(j, 2 * q), h});
    }
    return recognized_integer(terms, TrigDenom::SinSquared, precision_bits);
}

Int twisted_dim(const GenusContext& ctx, int level) {
    if (level < 0) throw std::domain_error("negative level");
    long q = level + 1;
    Rational v = v_gen(ctx.h, q, q) / Rational(ctx.h);
    auto z = v.integer();
    if (!z) throw std::domain_error("twisted dimension not an integer: " + v.str());
    return *z;
}

Int untwisted_dim_trig(int g, long k, int precision_bits) {
    if (g < 2) throw std::domain_error("genus must be >= 2");
    if (k < 2) throw std::domain_error("untwisted trig route needs k >= 2");
    Rational k_pow = Rational(k).pow(g - 1);
    std::vector<TrigTerm> terms;
    for (long j = 1; j <= k - 1; ++j)
        terms.push_back({1, k_pow, Rational(2 * j, k), g - 1});
    return recognized_integer(terms, TrigDenom::OneMinusCos, precision_bits);
}

Rational untwisted_dim_pairing(const GenusContext& ctx, int k) {
    return top_pairing(ch_sym_U(ctx, k).cls(), todd(ctx).cls());
}

Rational saturation(const GenusContext& ctx, SaturationFamily which, int j) {
    if (j < 0) throw std::domain_error("negative power of beta");
    CharClass base = which == SaturationFamily::QStar
                         ? dual(ch_Q(ctx))
                         : dual(ch_T(ctx)) - CharClass::constant(ctx, ctx.g - 1);
    CohClass weighted = cup(base.cls(), exp_alpha(ctx, 1).cls());
    return top_pairing(weighted, CohClass::monomial(ctx, {0, j, 0}, 1));
}

Rational quat_volume(int g) {
    if (g < 2) throw std::domain_error("genus must be >= 2");
    return Rational(2, g) * Rational(binomial(4 * g - 3, 2 * g - 1));
}

const Int& VerlindeTable::value(long p, long q) const {
    if (!in_range(p, q)) throw std::out_of_range("table cell out of range");
    size_t cols = static_cast<size_t>(q_max - q_min + 1);
    return values[static_cast<size_t>(p - p_min) * cols + static_cast<size_t>(q - q_min)];
}

bool VerlindeTable::all_pass() const {
    for (const auto& a : audits)
        if (!a.pass) return false;
    return true;
}

namespace {

TableAudit audit_law(const std::string& name, long checked, const std::string& first_failure) {
    if (first_failure.empty())
        return {name, true, std::to_string(checked) + " cells checked"};
    return {name, false, first_failure};
}

}  // namespace

VerlindeTable build_table(const GenusContext& ctx, int p_min, int p_max, int q_min, int q_max,
                          Exec policy) {
    if (p_min > p_max || q_min > q_max) throw std::domain_error("empty table range");
    VerlindeTable table{ctx, p_min, p_max, q_min, q_max, {}, {}};
    long rows = p_max - p_min + 1, cols = q_max - q_min + 1;
    long cells = rows * cols;
    table.values.resize(static_cast<size_t>(cells));

    auto fill_cell = [&](long idx) {
        long p = p_min + idx / cols;
        long q = q_min + idx % cols;
        Rational v = v_gen(ctx.h, p, q);
        auto z = v.integer();
        if (!z) throw std::domain_error("non-integer Verlinde value at (" + std::to_string(p) +
                                        "," + std::to_string(q) + "): " + v.str());
        table.values[static_cast<size_t>(idx)] = *z;
    };

    if (policy == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long idx = 0; idx < cells; ++idx) fill_cell(idx);
    } else {
        for (long idx = 0; idx < cells; ++idx) fill_cell(idx);
    }

    // Audit pass, after all cells are complete.
    long odd_checked = 0, serre_checked = 0, p0_checked = 0, q0_checked = 0;
    std::string odd_fail, serre_fail, p0_fail, q0_fail;
    auto cell_str = [](long p, long q) {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    };
    for (long p = p_min; p <= p_max; ++p) {
        for (long q = q_min; q <= q_max; ++q) {
            const Int& v = table.value(p, q);
            if (table.in_range(-p, q)) {
                ++odd_checked;
                if (odd_fail.empty() && v + table.value(-p, q) != 0)
                    odd_fail = "V(p,q) + V(-p,q) != 0 at " + cell_str(p, q);
            }
            if (table.in_range(-p, -q)) {
                ++serre_checked;
                Int expect = ctx.h % 2 == 0 ? table.value(-p, -q) : Int(-table.value(-p, -q));
                if (serre_fail.empty() && v != expect)
                    serre_fail = "V(p,q) != (-1)^h V(-p,-q) at " + cell_str(p, q);
            }
            if (p == 0) {
                ++p0_checked;
                if (p0_fail.empty() && v != 0) p0_fail = "V(0,q) != 0 at " + cell_str(p, q);
            }
            if (q == 0) {
                ++q0_checked;
                if (q0_fail.empty() && v != 0) q0_fail = "V(p,0) != 0 at " + cell_str(p, q);
            }
        }
    }
    table.audits.push_back(audit_law("odd_in_p", odd_checked, odd_fail));
    table.audits.push_back(audit_law("serre_duality", serre_checked, serre_fail));
    table.audits.push_back(audit_law("axis_p0", p0_checked, p0_fail));
    table.audits.push_back(audit_law("axis_q0", q0_checked, q0_fail));
    return table;
}

std::vector<Rational> hrr_grid(const GenusContext& ctx, int p_min, int p_max, int q_min,
                               int q_max, Exec policy) {
    if (p_min > p_max || q_min > q_max) throw std::domain_error("empty grid range");
    long rows = p_max - p_min + 1, cols = q_max - q_min + 1;
    long cells = rows * cols;
    std::vector<Rational> grid(static_cast<size_t>(cells));
    CharClass q_char = ch_Q(ctx);
    CohClass todd_cls = todd(ctx).cls();

    auto fill_cell = [&](long idx) {
        long p = p_min + idx / cols;
        long q = q_min + idx % cols;
        CharClass twisted = adams(p - q, q_char) * exp_alpha(ctx, Rational(q - 1));
        grid[static_cast<size_t>(idx)] = top_pairing(twisted.cls(), todd_cls);
    };

    if (policy == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long idx = 0; idx < cells; ++idx) fill_cell(idx);
    } else {
        for (long idx = 0; idx < cells; ++idx) fill_cell(idx);
    }
    return grid;
}

}  // namespace moduli
