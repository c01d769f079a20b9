#pragma once

#include <string>
#include <vector>

#include "moduli/characteristic.hpp"

namespace moduli {

/// Execution policy for grid kernels. Serial is the reference
/// implementation; Parallel fans cells out over OpenMP threads and must
/// produce identical results (asserted in tests).
enum class Exec { Serial, Parallel };

/// F(w,p) = sum_h [4 C(p+h, 2h+1) + C(p+h-1, 2h-1)] w^h, the generating
/// series whose ratio F(w,p)/F(w,q)^2 produces the numbers V_h(p,q).
/// F(w,1) = 4 + w exactly; the constant term is 4p.
PowerSeries f_series(long p, int order);

/// G_k(p,q): coefficient of w^k in F(w,p)/F(w,q)^2. Undefined at q = 0.
/// The division runs at order exactly k.
Rational g_coefficient(long p, long q, int k);

/// V_h(p,q) by the generating-function route:
/// 4(-4q)^h (p(h+1) G_h(q,q) - q G_h(p,q)) for p,q > 0, extended to all
/// integers by V_h(p,0) = 0, oddness in p, and V_h(p,q) = (-1)^h V_h(-p,-q).
Rational v_gen(int h, long p, long q);

/// V_h(p,q) as a holomorphic Euler characteristic via Riemann-Roch:
/// <ch(psi^{p-q} Q) e^{(q-1)a} td(M), [M]> with g = h+1.
Rational v_hrr(const GenusContext& ctx, long p, long q);

/// V_h(cq,q) by the closed trigonometric sum
///   c sum_j (-1)^{j+1} (h+1 - (-1)^{j(c+1)}) (q / sin^2(j pi / 2q))^h.
/// Requires q >= 1 and 0 <= c <= 2 + (g-2)/q with g = h+1.
///
/// The summation range is j = 1..2q-1. The shorter range j = 1..q that
/// appears in some statements of this formula fails desk evaluation (h=1,
/// c=1, q=2 gives 2 where the generating-function route and the geometry
/// both give 6); the full half-period range reproduces the exact routes on
/// every tested instance.
Int v_trig(int h, long c, long q, int precision_bits);

/// dim H^0(M, L^{q-1}) with q = level+1, i.e. V_h(q,q)/h. Throws if the
/// division is not exact, which would falsify the defining identity.
Int twisted_dim(const GenusContext& ctx, int level);

/// dim H^0(N_g, L0^{k-2}) = sum_{j=1}^{k-1} (k / (1 - cos(2j pi/k)))^{g-1},
/// for k >= 2, evaluated in big floats and integer-recognized.
Int untwisted_dim_trig(int g, long k, int precision_bits);

/// The same dimension at level k (so trig index k+2) as an exact pairing:
/// <ch(Sym^k U_x) td(M), [M]>.
Rational untwisted_dim_pairing(const GenusContext& ctx, int k);

/// Families whose twists by L are saturated (pair to zero with every power
/// of b after multiplying by e^a).
enum class SaturationFamily { QStar, TTilde };

/// <ch_X e^a b^j, [M]> where ch_X is ch(Q*) or ch(T* - g + 1); expected 0
/// for every j >= 0.
Rational saturation(const GenusContext& ctx, SaturationFamily which, int j);

/// Quaternionic volume of the ambient real Grassmannian: (2/g) C(4g-3, 2g-1).
Rational quat_volume(int g);

struct TableAudit {
    std::string name;
    bool pass;
    std::string detail;
};

/// Rectangular grid of V_h(p,q) values with a symmetry-audit report.
struct VerlindeTable {
    GenusContext ctx;
    int p_min, p_max, q_min, q_max;
    std::vector<Int> values;  // row-major: p rows, q columns
    std::vector<TableAudit> audits;

    const Int& value(long p, long q) const;
    bool in_range(long p, long q) const {
        return p >= p_min && p <= p_max && q >= q_min && q <= q_max;
    }
    bool all_pass() const;
};

/// Fills the grid with v_gen values (cells are independent; the parallel
/// policy fans them out) and audits oddness in p, Serre duality, and both
/// axis vanishings over the grid.
VerlindeTable build_table(const GenusContext& ctx, int p_min, int p_max, int q_min, int q_max,
                          Exec policy);

/// v_hrr over a grid, the exact-route kernel used by the route-agreement
/// check and the benchmark.
std::vector<Rational> hrr_grid(const GenusContext& ctx, int p_min, int p_max, int q_min,
                               int q_max, Exec policy);

}  // namespace moduli
