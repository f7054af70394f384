#include "spancom/spanning_trees.hpp"

#include <algorithm>
#include <numeric>

namespace spancom {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // false iff x and y were already joined
    bool unite(int x, int y) {
        const int rx = find(x);
        const int ry = find(y);
        if (rx == ry) {
            return false;
        }
        parent[static_cast<std::size_t>(rx)] = ry;
        return true;
    }
};

} // namespace

SpanningTreeSet enumerate_spanning_trees(const Graph& g) {
    if (!is_connected(g)) {
        raise(ErrorCode::disconnected, "enumerate_spanning_trees: graph is disconnected");
    }
    const int edge_total = g.edge_count();
    if (edge_total > kEnumerationGuard) {
        raise(ErrorCode::too_large,
              "enumerate_spanning_trees: |E| = " + std::to_string(edge_total) +
                  " exceeds the guard of " + std::to_string(kEnumerationGuard));
    }
    const int pick = g.vertex_count() - 1;

    SpanningTreeSet result;
    result.ground_size = edge_total;
    if (pick == 0) {
        result.trees.push_back({}); // the single-vertex graph spans itself
        return result;
    }

    // Lexicographic combination walk; a choice of n-1 acyclic edges on n
    // vertices is automatically spanning and connected.
    std::vector<int> choice(static_cast<std::size_t>(pick));
    std::iota(choice.begin(), choice.end(), 0);
    while (true) {
        UnionFind uf(g.vertex_count() + 1);
        bool acyclic = true;
        for (int index : choice) {
            const Edge& e = g.edges()[static_cast<std::size_t>(index)];
            if (!uf.unite(e.u, e.v)) {
                acyclic = false;
                break;
            }
        }
        if (acyclic) {
            std::vector<int> labels;
            labels.reserve(static_cast<std::size_t>(pick));
            for (int index : choice) {
                labels.push_back(index + 1);
            }
            result.trees.push_back(std::move(labels));
        }

        int i = pick - 1;
        while (i >= 0 &&
               choice[static_cast<std::size_t>(i)] == edge_total - pick + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++choice[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < pick; ++j) {
            choice[static_cast<std::size_t>(j)] =
                choice[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return result;
}

BigInt count_spanning_trees_kirchhoff(const Graph& g) {
    if (!is_connected(g)) {
        raise(ErrorCode::disconnected,
              "count_spanning_trees_kirchhoff: graph is disconnected");
    }
    const int r = g.vertex_count() - 1;
    if (r == 0) {
        return 1;
    }

    // Reduced Laplacian: drop the row and column of vertex 1.
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(r),
                                       std::vector<BigInt>(static_cast<std::size_t>(r)));
    for (const Edge& e : g.edges()) {
        const int i = e.u - 2; // vertex v maps to row v-2
        const int j = e.v - 2;
        if (i >= 0) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 1;
        }
        if (j >= 0) {
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] += 1;
        }
        if (i >= 0 && j >= 0) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= 1;
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= 1;
        }
    }

    // Bareiss fraction-free elimination; every division is exact.
    BigInt previous_pivot = 1;
    int sign = 1;
    for (int k = 0; k < r; ++k) {
        int pivot_row = -1;
        for (int i = k; i < r; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            return 0;
        }
        if (pivot_row != k) {
            std::swap(a[static_cast<std::size_t>(pivot_row)],
                      a[static_cast<std::size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j) {
                BigInt numerator =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                 .get_mpz_t(),
                             numerator.get_mpz_t(), previous_pivot.get_mpz_t());
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        previous_pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    BigInt det = a[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 1)];
    if (sign < 0) {
        det = -det;
    }
    return det;
}

SpanningTreeSet unicyclic_spanning_trees(const UnicyclicGraph& u) {
    if (!u.canonical) {
        raise(ErrorCode::not_canonical,
              "unicyclic_spanning_trees: relabel the graph so the cycle is 1..m");
    }
    const int n = u.base.edge_count();
    const int m = u.cycle_length;

    SpanningTreeSet result;
    result.ground_size = n;
    for (int omit = 1; omit <= m; ++omit) {
        std::vector<int> tree;
        tree.reserve(static_cast<std::size_t>(n - 1));
        for (int label = 1; label <= n; ++label) {
            if (label != omit) {
                tree.push_back(label);
            }
        }
        result.trees.push_back(std::move(tree));
    }
    std::sort(result.trees.begin(), result.trees.end());
    return result;
}

} // namespace spancom
