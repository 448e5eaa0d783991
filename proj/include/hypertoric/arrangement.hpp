#pragma once

#include "hypertoric/data.hpp"

namespace htx {

/** A signed minimal dependency. For circuits the vector lies in ker(beta)
 *  and is oriented by theta_lift; for cocircuits it lies in ker(iota^T) and
 *  is oriented by sigma_lift. Entries are always in {-1,0,+1} for
 *  unimodular data. */
struct Circuit {
  std::vector<int> Splus, Sminus;
  std::vector<int> support;  // sorted union
  IVec vec;                  // length n
};
using Cocircuit = Circuit;

/** Minimal-support kernel vectors of the columns of M, one per support,
 *  sign-canonicalized (first nonzero entry positive), sorted by support. */
std::vector<IVec> minimal_kernel_vectors(const IMat& M);

/** Oriented circuits; throws NonGenericLift if a pairing with the lift is 0. */
std::vector<Circuit> circuits(const HypertoricData& x);
std::vector<Cocircuit> cocircuits(const HypertoricData& x);

struct GenericReport {
  bool ok = true;
  std::vector<std::string> failures;
};
/** Non-throwing genericity scan of both lifts against all walls. */
GenericReport check_generic(const HypertoricData& x);

/** True iff q lies in the closed attracting set of p. */
bool attracting_contains(const FramedData& p, const FramedData& q);

struct InvariantCurve {
  std::vector<int> p, q;
  int i = -1, j = -1;      // p \ q = {i}, q \ p = {j}
  std::vector<int> S;      // S_pq = p united with {j}
  IVec deg;                // deg L_m over the curve, length n
  SignedMonomial tangent;  // weight of T_p C
};

/** The T-invariant curve joining two adjacent fixed points.
 *  Throws NotAdjacent when |p \ q| != 1 or another vertex separates them. */
InvariantCurve invariant_curve(const FramedData& p, const FramedData& q);

}  // namespace htx
