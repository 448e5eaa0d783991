#pragma once

#include "hypertoric/data.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace htx {

/** Names of the bundled fixture data sets. */
std::vector<std::string> fixture_names();

/** Load a bundled fixture by name from the fixture directory. */
HypertoricData fixture(const std::string& name);

/** Seeded random smooth data set with iota entries in {-1,0,1}, produced by
 *  rejection until the sequence is exact, saturated and unimodular, both
 *  lifts are generic, every circuit has support at least 2, and at least one
 *  fixed point exists.  Deterministic in the seed. */
HypertoricData random_instance(uint64_t seed, int nmax = 6, int kmax = 2);

}  // namespace htx
