#pragma once

#include <vector>

#include "moduli/cohomology.hpp"

namespace moduli {

/// A Chern character: cohomology class plus its declared virtual rank, which
/// must coincide with the weight-0 coefficient.
class CharClass {
  public:
    CharClass(CohClass cls, Rational rank);

    static CharClass constant(const GenusContext& ctx, const Rational& rank) {
        return CharClass(CohClass::monomial(ctx, {0, 0, 0}, rank), rank);
    }

    const CohClass& cls() const { return cls_; }
    const Rational& rank() const { return rank_; }
    const GenusContext& context() const { return cls_.context(); }

    CharClass& operator+=(const CharClass& o);
    CharClass& operator-=(const CharClass& o);
    friend CharClass operator+(CharClass a, const CharClass& b) { return a += b; }
    friend CharClass operator-(CharClass a, const CharClass& b) { return a -= b; }
    friend CharClass operator*(const CharClass& a, const CharClass& b) {
        return CharClass(cup(a.cls_, b.cls_), a.rank_ * b.rank_);
    }
    friend bool operator==(const CharClass& a, const CharClass& b) {
        return a.rank_ == b.rank_ && a.cls_ == b.cls_;
    }

  private:
    CohClass cls_;
    Rational rank_;
};

/// Dual bundle: weight-k part picks up (-1)^k.
CharClass dual(const CharClass& x);

/// Adams operation: weight-k part scales by r^k. r = 0 keeps only the rank;
/// negative r is the dual composed with the positive operation.
CharClass adams(long r, const CharClass& x);

/// exp of a class with zero weight-0 part, truncated at top weight.
CohClass exp_class(const CohClass& x);

/// e^{c*a} as a rank-1 character (a line-bundle exponential).
CharClass exp_alpha(const GenusContext& ctx, const Rational& c);

/// Chern character of the holomorphic tangent bundle:
/// 3g-3 + 2a + sum_{k>=2} s_k/k! with s_{2k-1} = 2ab^{k-1} - 8(k-1)cb^{k-2}
/// and s_{2k} = 2(g-1)b^k.
CharClass ch_T(const GenusContext& ctx);

/// Chern character of the rank g-1 tautological bundle:
/// g-1 + a + sum_{k>=2} s'_k/k! with s'_{2k-1} = ab^{k-1} + 2cb^{k-2} and
/// s'_{2k} = -b^k. The k=1 odd term is the bare a.
CharClass ch_Q(const GenusContext& ctx);

/// Chern character of the rank-4 orthogonal bundle: 2 + 2cosh(sqrt b),
/// i.e. 4 + b + b^2/12 + ...
CharClass ch_W(const GenusContext& ctx);

/// The multiplicative genus ((u)/(sinh u))^{2g-2} with u^2 = b/4; a
/// polynomial in b here.
CharClass ahat(const GenusContext& ctx);

/// Todd class as e^a * ahat (c_1 = 2a).
CharClass todd(const GenusContext& ctx);

/// Chern classes of Q by the three-term recurrence
/// (k+1) c_{k+1} = a c_k + k b c_{k-1} + 2 c c_{k-2}, c_0 = 1, c_1 = a.
std::vector<CohClass> chern_Q_recurrence(const GenusContext& ctx, int upto);

/// Chern classes of Q from the explicit exponential generating function.
std::vector<CohClass> chern_Q_series(const GenusContext& ctx, int upto);

/// Newton conversion from a Chern character to Chern classes:
/// c = exp(sum_k (-1)^{k-1} (k-1)! ch_k).
std::vector<CohClass> chern_from_character(const CharClass& x, int upto);

/// ch(Sym^k U_x) = e^{ka/2} sinh((k+1)u)/sinh(u), u^2 = b/4, for the rank-2
/// universal fiber with det U_x = L.
CharClass ch_sym_U(const GenusContext& ctx, int k);

/// Turn an even series into a polynomial in b: coefficient i contributes
/// coeff * scale_per_index^i * b^i. For a series indexed by u^2 with
/// u^2 = b/4 the scale is 1/4; for a series already indexed by b it is 1.
CohClass beta_substitute(const GenusContext& ctx, const PowerSeries& even_series,
                         const Rational& scale_per_index);

}  // namespace moduli
