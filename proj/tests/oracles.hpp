// Test-only brute-force oracles. These deliberately avoid the library's own
// algorithms: connectivity is plain DFS (no union-find), faces come from a
// power-set walk, Hilbert values from raw monomial enumeration.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "spancom/bigint.hpp"
#include "spancom/graph.hpp"
#include "spancom/simplicial.hpp"

namespace oracles {

using spancom::BigInt;
using spancom::Face;
using spancom::Graph;

inline bool subgraph_spans(const Graph& g, const std::vector<int>& labels) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (int label : labels) {
        const auto& e = g.edge(label);
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

// Every (n-1)-subset of edge labels that connects all vertices is a tree.
inline std::vector<std::vector<int>> brute_force_spanning_trees(const Graph& g) {
    std::vector<std::vector<int>> trees;
    const int total = g.edge_count();
    const int pick = g.vertex_count() - 1;
    if (pick == 0) {
        return {{}};
    }
    if (pick > total) {
        return {};
    }
    std::vector<int> mask(static_cast<std::size_t>(total), 0);
    std::fill(mask.begin(), mask.begin() + pick, 1);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<int> labels;
        for (int i = 0; i < total; ++i) {
            if (mask[static_cast<std::size_t>(i)] == 1) {
                labels.push_back(i + 1);
            }
        }
        if (subgraph_spans(g, labels)) {
            trees.push_back(labels);
        }
    } while (std::next_permutation(mask.begin(), mask.end()));
    std::sort(trees.begin(), trees.end());
    return trees;
}

// All subsets of the given edge set that induce a single cycle (every vertex
// of the subgraph has degree 2 and the subgraph is connected).
inline std::vector<std::vector<int>> brute_force_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    const int total = g.edge_count();
    for (unsigned mask = 1; mask < (1u << total); ++mask) {
        std::vector<int> labels;
        for (int i = 0; i < total; ++i) {
            if (mask & (1u << i)) {
                labels.push_back(i + 1);
            }
        }
        if (labels.size() < 3) {
            continue;
        }
        std::set<int> vertices;
        std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (int label : labels) {
            const auto& e = g.edge(label);
            vertices.insert(e.u);
            vertices.insert(e.v);
            ++degree[static_cast<std::size_t>(e.u)];
            ++degree[static_cast<std::size_t>(e.v)];
        }
        bool all_two = true;
        for (int v : vertices) {
            all_two = all_two && degree[static_cast<std::size_t>(v)] == 2;
        }
        if (!all_two) {
            continue;
        }
        // connectivity of the induced subgraph
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()) + 1);
        for (int label : labels) {
            const auto& e = g.edge(label);
            adj[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        std::set<int> seen;
        std::vector<int> stack{*vertices.begin()};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) {
                continue;
            }
            for (int w : adj[static_cast<std::size_t>(v)]) {
                stack.push_back(w);
            }
        }
        if (seen.size() == vertices.size()) {
            cycles.push_back(labels);
        }
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

// Power set of each facet, collected into one face family.
inline std::set<Face> brute_force_faces(const std::vector<Face>& facets) {
    std::set<Face> faces;
    for (const Face& facet : facets) {
        const int k = static_cast<int>(facet.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Face sub;
            for (int i = 0; i < k; ++i) {
                if (mask & (1u << i)) {
                    sub.push_back(facet[static_cast<std::size_t>(i)]);
                }
            }
            faces.insert(sub);
        }
    }
    return faces;
}

inline std::vector<BigInt> brute_force_f_vector(const std::vector<Face>& facets) {
    const auto faces = brute_force_faces(facets);
    std::size_t top = 0;
    for (const Face& f : faces) {
        top = std::max(top, f.size());
    }
    std::vector<BigInt> entries(top, BigInt(0));
    for (const Face& f : faces) {
        if (!f.empty()) {
            entries[f.size() - 1] += 1;
        }
    }
    return entries;
}

// Inclusion-minimal non-faces by the local criterion: S is not a face but
// every S minus one element is.
inline std::vector<Face> brute_force_minimal_nonfaces(const std::vector<Face>& facets,
                                                      int ground_size) {
    const auto faces = brute_force_faces(facets);
    std::vector<Face> out;
    for (unsigned mask = 1; mask < (1u << ground_size); ++mask) {
        Face candidate;
        for (int i = 0; i < ground_size; ++i) {
            if (mask & (1u << i)) {
                candidate.push_back(i + 1);
            }
        }
        if (faces.contains(candidate)) {
            continue;
        }
        bool boundary_faces = true;
        for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
            Face sub = candidate;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            boundary_faces = boundary_faces && faces.contains(sub);
        }
        if (boundary_faces) {
            out.push_back(candidate);
        }
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

// Number of degree-j monomials in ground_size variables whose support is a
// face: straight enumeration of multisets, no binomials anywhere.
inline BigInt brute_force_hilbert(const std::vector<Face>& facets, int ground_size,
                                  int degree) {
    if (degree == 0) {
        return 1;
    }
    const auto faces = brute_force_faces(facets);
    BigInt count = 0;
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, int from, int remaining) -> void {
        if (remaining == 0) {
            Face support = chosen;
            support.erase(std::unique(support.begin(), support.end()), support.end());
            if (faces.contains(support)) {
                count += 1;
            }
            return;
        }
        for (int v = from; v <= ground_size; ++v) {
            chosen.push_back(v);
            self(self, v, remaining - 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 1, degree);
    return count;
}

// Connected random graph on n vertices: a random spanning tree plus a few
// extra edges. Deterministic for a given seed.
inline Graph random_connected_graph(int n, int extra_edges, unsigned seed) {
    std::mt19937 gen(seed);
    std::vector<std::pair<int, int>> pairs;
    std::set<std::pair<int, int>> used;
    for (int v = 2; v <= n; ++v) {
        const int parent = 1 + static_cast<int>(gen() % static_cast<unsigned>(v - 1));
        pairs.emplace_back(parent, v);
        used.insert({parent, v});
    }
    int attempts = 0;
    while (extra_edges > 0 && attempts < 200) {
        ++attempts;
        int u = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
        int v = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
        if (u == v) {
            continue;
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (used.insert({u, v}).second) {
            pairs.emplace_back(u, v);
            --extra_edges;
        }
    }
    return spancom::build_graph(n, pairs);
}

} // namespace oracles
