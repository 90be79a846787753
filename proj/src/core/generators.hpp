/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef CLIQUEPART_CORE_GENERATORS_HPP
#define CLIQUEPART_CORE_GENERATORS_HPP

#include <cstdint>

#include "core/graph.hpp"

namespace cliquepart {

// Every pair weight drawn uniformly from the 2q+1 integers {-q, ..., q},
// pairs in ascending (i, j) order. Fully determined by (n, q, seed).
WeightedGraph gen_set1(int n, int q, uint64_t seed);

// Per-node uniform binary vectors of length p; the weight of a pair is p
// minus twice the Hamming distance of its vectors.
WeightedGraph gen_set2(int n, int p, uint64_t seed);

// A set-1 draw whose edges are then zeroed independently with probability
// zero_prob; zero_prob = 0 reproduces gen_set1 with the same seed.
WeightedGraph gen_set3(int n, int q, double zero_prob, uint64_t seed);

}  // namespace cliquepart

#endif  // CLIQUEPART_CORE_GENERATORS_HPP
