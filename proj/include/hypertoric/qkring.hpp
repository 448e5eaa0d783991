#pragma once

#include "hypertoric/arrangement.hpp"
#include "hypertoric/polynomial.hpp"
#include "hypertoric/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace htx {

/** Multiplicative relation prod_i (x_i / a_i)^{e_i} = 1, one per row of the
 *  presentation matrix of the framing quotient. */
struct LinearRelation {
  IVec e;
  SignedMonomial lhs() const;  // x part
  SignedMonomial rhs() const;  // a part
  std::string str() const;
};

/** One circuit's relation.
 *  classical = prod_{S+}(1 - x_i) prod_{S-}(1 - hbar x_i); flipped swaps the
 *  two factor families; the quantum relation is classical - zcoef * flipped
 *  where zcoef is the signed Kaehler monomial of the circuit's curve class,
 *  zcoef = prod_i (z_i * (-hbar^{-1/2}))^{v_i} with v the circuit vector. */
struct CircuitRelation {
  Circuit circ;
  Poly classical;
  Poly flipped;
  SignedMonomial zcoef;
  bool quantum = false;

  Poly relation() const;
  std::string str() const;
};

/** Generators x_1..x_n subject to the monomial relations of the framing
 *  quotient and one relation per circuit; a quantum presentation carries the
 *  z-deformation term, and drops back to the classical one at z = 0. */
struct RingPresentation {
  bool quantum = false;
  std::vector<LinearRelation> linear;
  std::vector<CircuitRelation> circuits;

  std::vector<std::string> relation_strings() const;
};

RingPresentation classical_relations(const HypertoricData& x);
RingPresentation quantum_relations(const HypertoricData& x);

/** Every classical circuit relation vanishes exactly at every fixed point:
 *  a combinatorial witness (S+ meets A_p^+, or S- meets A_p^-), then the
 *  algebraic zero after substituting the fixed-point restrictions.  As
 *  evidence for the quantum deformation, the circuit difference equations
 *  are checked against the vertex series to the given box degree. */
Report check_vanishing_at_fixed_points(const HypertoricData& x, int degree = 6);

/** The same battery on caller-supplied frames; reports VanishingFailure(p, S)
 *  when a frame's restrictions do not kill a circuit relation. */
Report check_vanishing_on_frames(const HypertoricData& x,
                                 const std::vector<FramedData>& frames,
                                 int degree = 6);

/** Rank of the presentation over the equivariant base field: specialize a
 *  and hbar to random rationals, rewrite the circuit relations in the k
 *  framing coordinates, and count monomials in a box modulo the span of the
 *  shifted relations, by exact dense elimination.  The box grows until the
 *  count meets the rank of evaluation at the fixed points, which certifies
 *  the answer.  Equals the number of fixed points on smooth data. */
int presentation_rank(const HypertoricData& x, uint64_t seed = 1);

}  // namespace htx
