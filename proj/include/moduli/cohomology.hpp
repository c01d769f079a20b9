#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "moduli/power_series.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// The ambient genus and everything derived from it. Weights follow the
/// grading a -> 1, b -> 2, c -> 3, so complex degree = weight and the top
/// pairing lives in weight 3g-3.
struct GenusContext {
    int g;
    int h;           // g - 1
    int top_weight;  // 3g - 3
    int precision_bits;

    explicit GenusContext(int genus, int precision = 128)
        : g(genus), h(genus - 1), top_weight(3 * genus - 3), precision_bits(precision) {
        if (genus < 2) throw std::domain_error("genus must be >= 2");
        if (precision < 64) throw std::domain_error("precision below 64 bits");
    }

    friend bool operator==(const GenusContext& a, const GenusContext& b) {
        return a.g == b.g && a.precision_bits == b.precision_bits;
    }
};

/// Monomial a^m b^n c^p in the three invariant generators.
struct Monomial {
    int m = 0;
    int n = 0;
    int p = 0;

    int weight() const { return m + 2 * n + 3 * p; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Display order: weight ascending, then higher a-power first.
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.weight() <=> y.weight(); c != 0) return c;
        if (auto c = y.m <=> x.m; c != 0) return c;
        return y.n <=> x.n;
    }

    std::string str() const;
};

/// Element of the invariant cohomology ring: a rational-weighted sum of
/// monomials, silently truncated above weight 3g-3. Immutable in spirit;
/// all ring operations return fresh values.
class CohClass {
  public:
    explicit CohClass(const GenusContext& ctx) : ctx_(ctx) {}

    static CohClass zero(const GenusContext& ctx) { return CohClass(ctx); }
    static CohClass one(const GenusContext& ctx) { return monomial(ctx, {0, 0, 0}, 1); }
    static CohClass alpha(const GenusContext& ctx) { return monomial(ctx, {1, 0, 0}, 1); }
    static CohClass beta(const GenusContext& ctx) { return monomial(ctx, {0, 1, 0}, 1); }
    static CohClass gamma(const GenusContext& ctx) { return monomial(ctx, {0, 0, 1}, 1); }
    static CohClass monomial(const GenusContext& ctx, Monomial mono, Rational coeff);

    const GenusContext& context() const { return ctx_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero_polynomial() const { return terms_.empty(); }
    Rational coefficient(const Monomial& mono) const;

    /// The homogeneous piece of the given weight.
    CohClass weight_part(int weight) const;
    /// Weights that actually occur, ascending.
    std::vector<int> weights() const;

    /// Adds coeff * mono, dropping the term if it lands above top weight or
    /// cancels to zero.
    void accumulate(const Monomial& mono, const Rational& coeff);

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator-(const CohClass& a);
    friend CohClass operator*(const Rational& c, CohClass a);

    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.ctx_.g == b.ctx_.g && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    GenusContext ctx_;
    std::map<Monomial, Rational> terms_;

    void require_same_context(const CohClass& o) const;

    friend CohClass cup(const CohClass& a, const CohClass& b);
    friend Rational top_pairing(const CohClass& a, const CohClass& b);
};

/// Truncated cup product.
CohClass cup(const CohClass& a, const CohClass& b);

/// Thaddeus' intersection number <a^m b^n c^p, [M_g]> for weight 3g-3:
/// (-1)^{p-g} g! m! / ((g-p)! q!) * 2^{2g-2-p} (2^q - 2) B_q, q = m+p-g+1,
/// extended by 0 for q < 0 and p > g. Accepts g >= 1; genus 1 is the
/// single-point convention with <1> = 1.
Rational intersection_number(int g, const Monomial& mono);
Rational intersection_number(const GenusContext& ctx, const Monomial& mono);

/// Pairing against the fundamental class: top-weight terms evaluate through
/// intersection_number, everything else contributes zero.
Rational evaluate(const CohClass& x);

/// evaluate(cup(a, b)) without materializing the product; only term pairs of
/// complementary weight contribute.
Rational top_pairing(const CohClass& a, const CohClass& b);

/// True iff every homogeneous component of x pairs to zero with all
/// monomials of complementary weight. Zero test in the invariant ring via
/// Poincare duality.
bool is_zero_in_cohomology(const CohClass& x);

/// All monomials of exactly the given weight, in display order.
std::vector<Monomial> monomials_of_weight(int weight);

/// The genus-reduction route for the same pairing: 2g times the intersection
/// number of a^m b^n c^{p-1} one genus down. Requires p >= 1.
Rational gamma_reduce(const GenusContext& ctx, const Monomial& mono);

/// I_k = <a^{g-1+2k} b^{g-1-k}> / (g-1+2k)! for 0 <= k <= g-1.
Rational i_coefficient(const GenusContext& ctx, int k);

/// sum_k I_k t^{2k}, returned indexed by t^2 with order g-1. Equals
/// (-4)^{g-1} t/sinh t truncated at t^{2g-2}.
PowerSeries i_series(const GenusContext& ctx);

/// Residual of the differential identity satisfied by the I-series:
/// t^2 d/dt[I^{(g)}(t) sinh(t)/t] - g (t - sinh t)(I^{(g)} + 4 I^{(g-1)}),
/// truncated at t^{2g-1}. Identically zero for g >= 3.
PowerSeries i_series_ode_residual(int g);

}  // namespace moduli
