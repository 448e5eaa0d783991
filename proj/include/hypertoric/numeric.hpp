#pragma once

#include "hypertoric/vertex.hpp"

#include <cstdint>
#include <string>

namespace htx {

/** Deterministic parameter point adapted to the data: |q| = 0.3, hbar off
 *  the positive real axis, equivariant moduli graded by the sigma lift so
 *  that the Kaehler moduli of both the data and its dual stay inside the
 *  unit disc, all phases seeded.  Suitable for series evaluation and for the
 *  mirror check on the bundled fixtures. */
NumParams default_params(const HypertoricData& x, uint64_t seed = 1);

/** Parse a JSON object {"q": .., "h": .., "a": [..], "z": [..]} where every
 *  value is a real number or an [re, im] pair; entries left out keep their
 *  default_params values.  Throws DataError on malformed input. */
NumParams parse_params(const std::string& json_text, const HypertoricData& x,
                       uint64_t seed = 1);

}  // namespace htx
