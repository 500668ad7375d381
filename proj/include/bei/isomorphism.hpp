#pragma once

#include <string>

#include "bei/graph.hpp"

namespace bei {

inline constexpr int kDefaultIsomorphismBound = 12;

/// Exact isomorphism test by degree-pruned backtracking.  Meant for small
/// graphs in tests; throws bound_exceeded above `bound` vertices.
bool is_isomorphic_small(const Graph& g1, const Graph& g2,
                         int bound = kDefaultIsomorphismBound);

/// Canonical relabelling: two graphs are isomorphic iff their canonical
/// forms compare equal.  Same size bound as above.
Graph canonical_form(const Graph& g, int bound = kDefaultIsomorphismBound);

}  // namespace bei
