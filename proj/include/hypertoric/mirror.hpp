#pragma once

#include "hypertoric/stab.hpp"
#include "hypertoric/vertex.hpp"

namespace htx {

/** A datum, its dual, and the fixed points matched up: dual[t] is the
 *  standard frame of the dual datum at the complementary index set of
 *  frames[t].p.  The bijection squares to the identity under double
 *  dualization. */
struct MirrorPair {
  HypertoricData x;
  HypertoricData y;
  std::vector<FramedData> frames;
  std::vector<FramedData> dual;

  static MirrorPair make(const HypertoricData& x);
};

/** Relabel the plain symbol families to their primed copies (a -> a',
 *  z -> z', x -> x'), so expressions built from the dual datum can live in
 *  the same ring as expressions of the original one.  Throws DataError on
 *  input that is already primed. */
SignedMonomial to_primed(const SignedMonomial& s);
ThetaExpr to_primed(const ThetaExpr& e);

/** Kaehler/equivariant swap on sections: z_i <-> a'_i, a_i <-> z'_i and
 *  hbar -> hbar^{-1}; q and both x families stay put.  An involution. */
SignedMonomial kappa_stab(const SignedMonomial& s);
ThetaExpr kappa_stab(const ThetaExpr& e);

/** Parameter swap carrying vertex functions between the two theories:
 *      q -> q,  hbar -> q hbar^{-1},
 *      a_i -> -hbar^{1/2} z'_i,  z_i -> -q^{1/2} hbar^{-1/2} (a'_i)^{-1},
 *  and symmetrically on the primed families, where the image hbar is read
 *  in the partner theory.  Squares to the identity on symbols.  The x
 *  families have no image: UnmappedSymbol. */
SignedMonomial kappa_vtx(const SignedMonomial& s);
ThetaExpr kappa_vtx(const ThetaExpr& e);
LogForm kappa_vtx(const LogForm& P);

/** Numeric counterpart of kappa_vtx on parameter values:
 *      q' = q,  h' = q/h,  a'_i = -sqrt(h)/z_i,  z'_i = -sqrt(h/q) a_i.
 *  Square roots are principal.  Applying it twice is not the identity on
 *  values (a -> q/(h a), z -> 1/z); the symbol map is an involution only
 *  because the symbols are reinterpreted in the partner theory. */
NumParams kappa_vtx_params(const NumParams& np, int n);

/** Sign splittings of the dual fixed point (A'^{+-} = p^{-+} and
 *  (p')^{+-} = A^{-+}), the circuit/cocircuit exchange with orientation
 *  flip, the explicit dual restriction monomials, the double dual, and an
 *  independent brute-force enumeration of the minimal dependencies. */
Report check_combinatorial_duality(const MirrorPair& mp);

/** The diagonal theta kernel prod_i th(x_i x'_i), restricted in either
 *  factor and pushed through kappa_stab, reproduces the normalized
 *  envelopes of both theories; the dual diagonal cancels the envelope
 *  denominator exactly. */
Report duality_interface_check(const MirrorPair& mp);

/** Ratio symmetry of envelopes under the swap of the two fixed points:
 *      Stab(p)|_q / Stab(q)|_q  =  kappa_stab( Stab'(q')|_{p'} / Stab'(p')|_{p'} )
 *  checked exactly on every ordered pair, plus seeded numeric spot checks
 *  of the evaluator on the same ratios. */
Report check_cor_stab(const MirrorPair& mp, int spots = 5, uint64_t seed = 1);

/** The two bilinear log identities behind the conjugated difference
 *  operators: the zeta-collection identity, and the kappa_vtx match of the
 *  dual magnetic prefactor against the original one.  Exact cancellation
 *  of quadratic forms in formal logarithms, per fixed point; the second
 *  identity lives in the quotient by the sign relation 2 ln(-1) = 0 and
 *  carries a cross term ln(q/hbar) ln(hbar) for every index in p^+ (the
 *  hbar^{-1} restrictions on A'^- = p^+ meet the q/hbar twist of the
 *  opposite-side polarization there). */
Report check_log_identities(const MirrorPair& mp);

/** kappa_vtx of the Pochhammer content of the opposite polarization at the
 *  dual fixed point: the denominator block of pmatrix_entry, and the
 *  closed form of the fully attracting vertex limit. */
ThetaExpr kappa_phi_dual_polarization(const MirrorPair& mp, int qi);

/** Transition matrix entry (row qi, column pi):
 *
 *    Stab#(q)|_p / Theta(T|_p) * Phi((q-hbar) T|_p)
 *      / kappa_vtx(Phi((q-hbar) Pol'|_{q'})) * (-hbar^{1/2})^{|q+|}
 *      * prod_{i in q+} x_i|_q,
 *
 *  with T = sum_i x_i - k, assembled as one theta/phi multiset and
 *  cancelled once; every on-support entry ends with no vanishing factor,
 *  off-support entries are the Zero expression.  Throws SingularFactor if
 *  cancellation fails (a construction bug, not a data property). */
ThetaExpr pmatrix_entry(const MirrorPair& mp, int qi, int pi);

/** Numeric value of pmatrix_entry; off-support entries give 0 without
 *  evaluation. */
std::complex<double> pmatrix(const MirrorPair& mp, int qi, int pi,
                             const NumParams& np, int trunc = 40);

/** Numeric mirror identity at box degree D:
 *      V'(q') = sum_p P_{q,p} V(p)
 *  with V' the opposite-polarization vertex of the dual datum evaluated at
 *  kappa_vtx_params(np), every fixed point checked, tolerance 10x the
 *  measured truncation tail (D vs D-2).  Also cross-checks the denominator
 *  block of every row against the closed vertex limit. */
Report check_mirror_vertex(const MirrorPair& mp, int D, const NumParams& np);

}  // namespace htx
