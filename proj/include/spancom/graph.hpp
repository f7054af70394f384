#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spancom/errors.hpp"

namespace spancom {

// Unordered vertex pair, stored with u < v. Vertices are 1-based.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple graph with positional edge labels: the k-th edge of the list
// carries label k (1-based). Edge labels, never vertex pairs, are the ground
// set of every complex built downstream.
class Graph {
public:
    // Validates simplicity (no self-loops, no duplicate pairs, endpoints in
    // range) and normalizes each pair to u < v. Label order is list order.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int label) const; // 1-based label

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_;
    std::vector<Edge> edges_;
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& pairs);

// True iff every vertex is reachable from vertex 1 (vacuously true for n=1).
bool is_connected(const Graph& g);

// Labels of the unique cycle of a connected graph with |E| = |V|, sorted
// ascending. Uses leaf pruning: degree-1 vertices are deleted with their
// pendant edges until only the cycle remains.
std::vector<int> find_unique_cycle(const Graph& g);

struct UnicyclicGraph {
    Graph base;
    int cycle_length = 0;              // m
    std::vector<int> cycle_edge_labels; // sorted
    bool canonical = false;            // cycle labels are exactly 1..m
};

// Canonical U_{n,m}: vertices 1..m form the cycle (edge i joins i and i+1,
// edge m closes it), and for k = 1..n-m the edge m+k joins new vertex m+k to
// attachment[k-1], which must already exist (an index in 1..m+k-1).
UnicyclicGraph make_unicyclic(int n, int m, const std::vector<int>& attachment);

struct RelabelResult {
    UnicyclicGraph graph;
    // permutation[k-1] = new label of the edge that carried label k.
    std::vector<int> permutation;
};

// Permutes edge labels so the cycle occupies 1..m, walking the cycle in its
// cyclic order starting from the smallest original cycle label (oriented from
// the smaller endpoint of that edge). Non-cycle edges keep their relative
// order on labels m+1..n. Idempotent.
RelabelResult canonical_relabel(const Graph& g);

// Attachment builders for the generator shapes exposed by the CLI.
std::vector<int> attachment_chain(int n, int m);  // path hanging off vertex 1
std::vector<int> attachment_star(int n, int m);   // all pendants on vertex 1
std::vector<int> attachment_seeded(int n, int m, unsigned long seed);

// Edge-list text format: first non-comment line is n, each following
// non-comment line is "u v" (1-based); '#' starts a comment to end of line;
// edge label = order of appearance. parse -> serialize -> parse is identity.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

} // namespace spancom
