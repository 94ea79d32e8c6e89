#pragma once

#include <random>

#include "moyal/convergence.hpp"

namespace moyal {

/// Suite names: reduction, darboux, moyal, matrices, k3, convergence, all.
std::vector<std::string> suite_names();

/// Runs the named verification suite. Deterministic for a fixed seed; throws
/// AlgebraError on an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

/// Random element of degree <= maxdeg in the model's coordinates; the same
/// generator the suites use, exposed for tests.
Poly random_element(std::mt19937_64& rng,
                    const std::vector<std::pair<std::string, Poly>>& coords,
                    int maxdeg, int terms);

} // namespace moyal
