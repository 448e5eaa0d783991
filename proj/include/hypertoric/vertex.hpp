#pragma once

#include "hypertoric/arrangement.hpp"
#include "hypertoric/logform.hpp"
#include "hypertoric/qseries.hpp"
#include "hypertoric/report.hpp"

#include <complex>
#include <map>
#include <optional>

namespace htx {

/** Vertex series request: a framed fixed point, a descendent insertion tau
 *  (Laurent polynomial in the X symbols, X_i = i-th tautological character),
 *  and a box radius D for the Kaehler cone degrees.  With opposite set the
 *  polarization is flipped, which negates the half-integral q-power. */
struct VertexSpec {
  FramedData f;
  Poly tau = Poly::one();
  int D = 8;
  bool opposite = false;
};

/** Vertex series at the framed point.  The coefficient of the degree-d
 *  monomial is q^{-(D_1+...+D_n)/2} * prod_i {x_i|_p}_{D_i} * tau(x|_p q^D)
 *  where D = full_degree(f, d); the q-power sign flips for the opposite
 *  polarization. */
KahlerSeries bare_vertex(const VertexSpec& spec);

/** Conjugation prefactor as a bilinear log form:
 *  P = sum_j ln z_eps_j ln x_j|_p / ln q  -  sum_j ln z_sharp_j ln a_j / ln q.
 *  Shifting a variable in this form produces the exact monomial factor that
 *  conjugates the bare difference operators. */
LogForm vertex_prefactor_form(const FramedData& f);

/** Conjugated shift operator in the equivariant variable a_i: a monomial
 *  factor from vertex_prefactor_form, a Pochhammer ratio over the frame
 *  rows, the shift a_i -> q a_i, and a box-degree shift for the z-part. */
struct ShiftOperator {
  int i = 0;
  RatFun factor;               // scalar part (no z symbols)
  std::vector<int64_t> delta;  // box-degree shift carried by the z-part
  KahlerSeries apply(const KahlerSeries& s) const;
};

ShiftOperator make_shift_operator(const FramedData& f, int i);

/** Difference equation along a circuit, in conjugated form:
 *  prod_{S+}(1 - L_i) prod_{S-}(1 - h L_i) V
 *    = zs^{beta_S} prod_{S+}(1 - h L_i) prod_{S-}(1 - L_i) V
 *  where zs^{beta_S} carries the sign-and-h-shifted Kaehler monomial.
 *  Verified exactly on every box degree where both sides are known. */
Report check_circuit_qde(const VertexSpec& spec, const KahlerSeries& V,
                         const Circuit& circ);

/** Difference equation along a cocircuit, in conjugated form:
 *  prod_{R+}(1 - A_i) prod_{R-}(1 - q/h A_i) V
 *    = (h a)^alpha prod_{R+}(1 - q/h A_i) prod_{R-}(1 - A_i) V. */
Report check_cocircuit_qde(const VertexSpec& spec, const KahlerSeries& V,
                           const Cocircuit& coc);

/** Every known coefficient is regular at q^{1/2} = 0 and bounded as
 *  q^{1/2} -> infinity (exact valuation and degree on the factored form). */
Report check_q_boundedness(const KahlerSeries& V);

/** Numeric parameters for series evaluation. */
struct NumParams {
  std::complex<double> q{0.3, 0.0};
  std::complex<double> h{0.55, 0.0};
  std::map<int, std::complex<double>> a;  // 0-based index -> value
  std::map<int, std::complex<double>> z;  // 0-based index -> value
};

/** Evaluate the series numerically: sum over known degrees of
 *  coeff * prod_j z_j^{D_j(d)}. */
std::complex<double> eval_series(const FramedData& f, const KahlerSeries& V,
                                 const NumParams& np);

/** Closed-form value of the fully attracting limit of the vertex:
 *    prod_{A+} phi(h Z_j)/phi(Z_j) * prod_{A-} phi(q/Z_j)/phi(q Z_j / h)
 *  with Z_j = zeta_sharp_j(p) (q/h)^{-hshift(j)}, truncated at trunc
 *  Pochhammer factors. */
std::complex<double> vertex_limit_closed(const FramedData& f,
                                         const NumParams& np, int trunc);

/** Degeneration check: along alpha_i(p) = w_i t^{-1} (i in p+) and
 *  w_i t (i in p-), the vertex approaches vertex_limit_closed.  Compared
 *  numerically along a decreasing t sequence. */
Report check_vertex_limit(const VertexSpec& spec, const KahlerSeries& V,
                          const NumParams& np, const std::vector<double>& ts,
                          double tol);

/** Residue matching along an invariant curve between two fixed points:
 *  for each box degree beta with D_i(beta) >= m,
 *    Res_{q = lambda^{-1/m}} c^{(p)}_beta dq/q
 *      = -(1/(m E_{p,q}(m))) c^{(q)}_{beta - m [C]}(lambda^{-1/m})
 *  verified exactly on the m-fold cover of the parameter torus.
 *  Higher-order poles are reported, not guessed. */
Report check_jfunction_residues(const FramedData& fp, const KahlerSeries& Vp,
                                const FramedData& fq, const KahlerSeries& Vq,
                                const InvariantCurve& curve, int m);

}  // namespace htx
