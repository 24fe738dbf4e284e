#pragma once

#include <cstddef>
#include <vector>

#include "gradedlc/lattice.hpp"

namespace oracle {

// Straightforward H^i dimensions of the degree-u slice: every subset of
// generators is a cell (inactive ones contribute zero-dimensional pieces),
// activity is decided by searching for a denominator power that clears u, and
// ranks come from plain rational Gaussian elimination.
std::vector<std::size_t> brute_dims(const gradedlc::CMonomialIdeal& ideal, const gradedlc::MultiDegree& u);

}  // namespace oracle
