#pragma once

#include <vector>

#include "spancom/bigint.hpp"
#include "spancom/graph.hpp"

namespace spancom {

// Hard cap on |E| (and on complex ground sets) for exhaustive walks. The
// enumeration paths are desk-scale oracles; the closed forms carry no limit.
inline constexpr int kEnumerationGuard = 25;

struct SpanningTreeSet {
    int ground_size = 0;                  // |E| of the underlying graph
    std::vector<std::vector<int>> trees;  // sorted label sets, list in lex order

    friend bool operator==(const SpanningTreeSet&, const SpanningTreeSet&) = default;
};

// All edge subsets of size n-1 that form a spanning tree, found by a
// lexicographic combination walk with union-find cycle rejection. Requires
// connectivity and |E| <= kEnumerationGuard.
SpanningTreeSet enumerate_spanning_trees(const Graph& g);

// Spanning-tree count as the determinant of the reduced Laplacian, computed
// by fraction-free (Bareiss) elimination over exact integers. No guard.
BigInt count_spanning_trees_kirchhoff(const Graph& g);

// Closed-form spanning trees of a canonical uni-cyclic graph: the m sets
// E \ {e_i} for the cycle labels i = 1..m, returned in lex order.
SpanningTreeSet unicyclic_spanning_trees(const UnicyclicGraph& u);

} // namespace spancom
