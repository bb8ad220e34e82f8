#pragma once

#include <random>
#include <vector>

#include "gentle/modules.hpp"

namespace gentle {

// Random finite-dimensional gentle algebra with at most max_vertices vertices
// and max_arrows arrows (loops allowed). Connectedness is not enforced.
Algebra random_gentle_algebra(std::mt19937_64& rng, int max_vertices, int max_arrows);

// Random nonzero string (trivial strings included) by a random walk of at most
// max_length letters.
StringWord random_string(const Algebra& alg, std::mt19937_64& rng, int max_length);

// Every string of length at most max_length, canonical and without repeats.
std::vector<StringWord> all_strings(const Algebra& alg, int max_length);

// Canonical bands of length at most max_length.
std::vector<Letters> all_bands(const Algebra& alg, int max_length);

}  // namespace gentle
