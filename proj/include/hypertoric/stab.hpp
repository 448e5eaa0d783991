#pragma once

#include "hypertoric/arrangement.hpp"
#include "hypertoric/data.hpp"
#include "hypertoric/report.hpp"
#include "hypertoric/theta.hpp"

namespace htx {

/** Elliptic stable envelope of the fixed point p as a canonical theta
 *  expression in x_1..x_n, z_1..z_n, hbar:
 *
 *    prod_{i in p+} th(hbar x_i) * prod_{i in p-} th(x_i)
 *    * prod_{j in A} th(x_j w_j) / th(c_j w_j),
 *
 *  w_j = zeta_j(p) hbar^{-hshift(j)} and c_j = hbar^{-1} for j in A-, else 1.
 *  With sharp set, zeta_j(p) is replaced by zeta#_j(p)^{-1} inside every
 *  argument (the change of variables entering the mirror matrix). */
ThetaExpr stab_section(const FramedData& f, bool sharp = false);

/** Normalized envelope: the numerator factors alone,
 *  prod_{p+} th(hbar x_i) prod_{p-} th(x_i) prod_{j in A} th(x_j w_j). */
ThetaExpr normalized_stab(const FramedData& f);

/** Substitute x_i -> x_i|_q for every i and canonicalize. Restrictions
 *  outside the attracting closure collapse to the zero expression (the Zero
 *  state, not a numeric zero). */
ThetaExpr stab_restrict(const ThetaExpr& s, const FramedData& fq);

/** Diagonal closed form prod_{p+} th(hbar x_i|_p) prod_{p-} th(x_i|_p). */
ThetaExpr stab_diagonal(const FramedData& f);

/** Support vanishing and diagonal identity over all ordered pairs of fixed
 *  points. */
Report check_stab_axioms(const HypertoricData& x);

}  // namespace htx
