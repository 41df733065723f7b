#pragma once

#include "reconf/model.hpp"

#include <cstdint>

namespace reconf {

// Seeded instance generators. Output depends only on the arguments.
// Each throws PreconditionError when the sizes are out of range or no valid
// instance turns up within the retry budget.

/// Split graph with `clique` clique vertices among `n`, each clique /
/// independent pair adjacent with probability `density`; S and T are random
/// c-colorable sets of `tokens` vertices. Labels are shuffled.
ReconfigInstance generate_split(std::uint64_t seed, int n, int clique, int c, int tokens, double density = 0.5);

/// Random NCL machine with the given vertex type counts (stubs matched at
/// random, no self-loops) and two valid orientations. At most 20 edges.
NclInstance generate_ncl(std::uint64_t seed, int and_vertices, int or_vertices, int copy_vertices);

/// Random graph G(n, density) with dominating S and T of size `size` and
/// bound k.
DsInstance generate_ds(std::uint64_t seed, int n, int k, int size, DsRuleKind rule, double density = 0.4);

}  // namespace reconf
