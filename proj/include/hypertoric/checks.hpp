#pragma once

#include "hypertoric/report.hpp"
#include "hypertoric/vertex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace htx {

/** The verification instance set: the bundled fixtures followed by count
 *  seeded random smooth data sets (n <= 6, k <= 2). */
std::vector<HypertoricData> instance_set(int count = 20,
                                         uint64_t seed = 20260819);

/** Mirror-check parameter points validated for the bundled fixtures, with a
 *  decreasing equivariant hierarchy so that both sides' Kaehler moduli stay
 *  small; falls back to default_params for other data. */
NumParams fixture_mirror_params(const HypertoricData& x);

/** Circuit difference equations against the bare vertex: every fixed point,
 *  every circuit, exact on the interior of the degree-D box. */
Report suite_circuit_qde(const HypertoricData& x, int degree = 8);

/** Cocircuit difference equations in the equivariant directions. */
Report suite_cocircuit_qde(const HypertoricData& x, int degree = 6);

/** Stable-envelope support and diagonal axioms, exact. */
Report suite_stab(const HypertoricData& x);

/** Duality interface and its corollary: exact canonical identities plus
 *  seeded numeric spot checks. */
Report suite_duality_interface(const HypertoricData& x, int spots = 5,
                               uint64_t seed = 1);

/** Combinatorial shadow of the duality, cross-checked against brute-force
 *  minimal support enumeration. */
Report suite_combinatorial_duality(const HypertoricData& x);

/** Both logarithmic prefactor identities, exact per fixed point. */
Report suite_log_identities(const HypertoricData& x);

/** q -> 0 and q -> infinity boundedness of every vertex coefficient. */
Report suite_boundedness(const HypertoricData& x, int degree = 6);

/** Ring relations: exact vanishing at the fixed points with the difference
 *  equations as quantum evidence, and optionally the rank count against the
 *  number of fixed points. */
Report suite_ring(const HypertoricData& x, int degree = 6,
                  bool with_rank = true, uint64_t seed = 1);

/** q-binomial theorem and the two bracket closed forms, exact to order N. */
Report suite_qseries(int order = 12);

/** Fully attracting limit of the vertex against its closed form along
 *  t in {1e-1, 1e-2, 1e-3}, final deviation below tol. */
Report suite_vertex_limit(const HypertoricData& x, int degree = 12,
                          double tol = 1e-6);

/** Residue relations of the vertex along every invariant curve, covers up
 *  to m_max. */
Report suite_jresidues(const HypertoricData& x, int degree = 6, int m_max = 3);

/** Numeric mirror identity at parameters np and box degree D. */
Report suite_mirror_numeric(const HypertoricData& x, const NumParams& np,
                            int D = 12);

/** Seeded corruptions every suite must reject: a circuit or cocircuit sign
 *  flip, a dropped hbar shift in the diagonal, a perturbed frame entry in
 *  the log identities and the duality interface, a corrupted restriction in
 *  the ring, and a dropped mirror scalar. */
Report suite_negative_controls(const HypertoricData& x, uint64_t seed = 1);

}  // namespace htx
