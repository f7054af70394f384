#include "spancom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

namespace spancom {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1) {
        raise(ErrorCode::invalid_argument,
              "graph: vertex count must be positive, got " +
                  std::to_string(vertex_count_));
    }
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        Edge& e = edges_[k];
        if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_) {
            raise(ErrorCode::vertex_out_of_range,
                  "graph: edge " + std::to_string(k + 1) + " endpoint outside 1.." +
                      std::to_string(vertex_count_));
        }
        if (e.u == e.v) {
            raise(ErrorCode::self_loop,
                  "graph: edge " + std::to_string(k + 1) + " is a self-loop at vertex " +
                      std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (!seen.insert({e.u, e.v}).second) {
            raise(ErrorCode::duplicate_edge,
                  "graph: duplicate edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "} at label " + std::to_string(k + 1));
        }
    }
}

const Edge& Graph::edge(int label) const {
    if (label < 1 || label > edge_count()) {
        raise(ErrorCode::label_out_of_range,
              "graph: no edge with label " + std::to_string(label));
    }
    return edges_[static_cast<std::size_t>(label - 1)];
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        edges.push_back({u, v});
    }
    return Graph(vertex_count, std::move(edges));
}

namespace {

// label of every edge incident to each vertex
std::vector<std::vector<int>> incidence_lists(const Graph& g) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (int label = 1; label <= g.edge_count(); ++label) {
        const Edge& e = g.edge(label);
        inc[static_cast<std::size_t>(e.u)].push_back(label);
        inc[static_cast<std::size_t>(e.v)].push_back(label);
    }
    return inc;
}

int other_endpoint(const Edge& e, int vertex) {
    return e.u == vertex ? e.v : e.u;
}

} // namespace

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    const auto inc = incidence_lists(g);
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack{1};
    visited[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int label : inc[static_cast<std::size_t>(v)]) {
            const int w = other_endpoint(g.edge(label), v);
            if (!visited[static_cast<std::size_t>(w)]) {
                visited[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<int> find_unique_cycle(const Graph& g) {
    if (g.edge_count() != g.vertex_count()) {
        raise(ErrorCode::not_unicyclic,
              "find_unique_cycle: |E| = " + std::to_string(g.edge_count()) +
                  " differs from n = " + std::to_string(g.vertex_count()));
    }
    if (!is_connected(g)) {
        raise(ErrorCode::not_unicyclic, "find_unique_cycle: graph is disconnected");
    }

    const int n = g.vertex_count();
    const auto inc = incidence_lists(g);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> edge_removed(static_cast<std::size_t>(g.edge_count()) + 1, false);
    for (int v = 1; v <= n; ++v) {
        degree[static_cast<std::size_t>(v)] =
            static_cast<int>(inc[static_cast<std::size_t>(v)].size());
    }

    std::vector<int> leaves;
    for (int v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push_back(v);
        }
    }
    while (!leaves.empty()) {
        const int v = leaves.back();
        leaves.pop_back();
        for (int label : inc[static_cast<std::size_t>(v)]) {
            if (edge_removed[static_cast<std::size_t>(label)]) {
                continue;
            }
            edge_removed[static_cast<std::size_t>(label)] = true;
            degree[static_cast<std::size_t>(v)] = 0;
            const int w = other_endpoint(g.edge(label), v);
            if (--degree[static_cast<std::size_t>(w)] == 1) {
                leaves.push_back(w);
            }
            break; // a leaf has exactly one live edge
        }
    }

    std::vector<int> cycle;
    for (int label = 1; label <= g.edge_count(); ++label) {
        if (!edge_removed[static_cast<std::size_t>(label)]) {
            cycle.push_back(label);
        }
    }
    // connected with |E| = n always leaves a single cycle of length >= 3
    if (cycle.size() < 3) {
        raise(ErrorCode::internal_error, "find_unique_cycle: pruning lost the cycle");
    }
    return cycle;
}

UnicyclicGraph make_unicyclic(int n, int m, const std::vector<int>& attachment) {
    if (m < 3 || m > n) {
        raise(ErrorCode::bad_cycle_length,
              "make_unicyclic: need 3 <= m <= n, got m = " + std::to_string(m) +
                  ", n = " + std::to_string(n));
    }
    if (static_cast<int>(attachment.size()) != n - m) {
        raise(ErrorCode::bad_attachment,
              "make_unicyclic: attachment list must have n - m = " +
                  std::to_string(n - m) + " entries, got " +
                  std::to_string(attachment.size()));
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < m; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({1, m});
    for (int k = 1; k <= n - m; ++k) {
        const int parent = attachment[static_cast<std::size_t>(k - 1)];
        if (parent < 1 || parent >= m + k) {
            raise(ErrorCode::bad_attachment,
                  "make_unicyclic: attachment[" + std::to_string(k - 1) +
                      "] = " + std::to_string(parent) + " outside 1.." +
                      std::to_string(m + k - 1));
        }
        edges.push_back({parent, m + k});
    }

    std::vector<int> cycle_labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        cycle_labels[static_cast<std::size_t>(i)] = i + 1;
    }
    return UnicyclicGraph{Graph(n, std::move(edges)), m, std::move(cycle_labels), true};
}

RelabelResult canonical_relabel(const Graph& g) {
    const std::vector<int> cycle = find_unique_cycle(g);
    const int m = static_cast<int>(cycle.size());
    const int n = g.edge_count();

    std::vector<bool> on_cycle(static_cast<std::size_t>(n) + 1, false);
    for (int label : cycle) {
        on_cycle[static_cast<std::size_t>(label)] = true;
    }
    const auto inc = incidence_lists(g);
    auto cycle_edges_at = [&](int vertex) {
        std::vector<int> out;
        for (int label : inc[static_cast<std::size_t>(vertex)]) {
            if (on_cycle[static_cast<std::size_t>(label)]) {
                out.push_back(label);
            }
        }
        return out;
    };

    // Walk the cycle from its smallest label, oriented u -> v.
    std::vector<int> ordered{cycle.front()};
    int previous = cycle.front();
    int at = g.edge(cycle.front()).v;
    while (static_cast<int>(ordered.size()) < m) {
        const auto here = cycle_edges_at(at);
        const int next = here[0] == previous ? here[1] : here[0];
        ordered.push_back(next);
        at = other_endpoint(g.edge(next), at);
        previous = next;
    }

    std::vector<int> permutation(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
        permutation[static_cast<std::size_t>(ordered[static_cast<std::size_t>(i)] - 1)] =
            i + 1;
    }
    int next_label = m + 1;
    for (int label = 1; label <= n; ++label) {
        if (!on_cycle[static_cast<std::size_t>(label)]) {
            permutation[static_cast<std::size_t>(label - 1)] = next_label++;
        }
    }

    std::vector<Edge> new_edges(static_cast<std::size_t>(n));
    for (int label = 1; label <= n; ++label) {
        new_edges[static_cast<std::size_t>(permutation[static_cast<std::size_t>(label - 1)] -
                                           1)] = g.edge(label);
    }

    std::vector<int> cycle_labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        cycle_labels[static_cast<std::size_t>(i)] = i + 1;
    }
    return RelabelResult{
        UnicyclicGraph{Graph(g.vertex_count(), std::move(new_edges)), m,
                       std::move(cycle_labels), true},
        std::move(permutation)};
}

std::vector<int> attachment_chain(int n, int m) {
    std::vector<int> out;
    for (int k = 1; k <= n - m; ++k) {
        out.push_back(k == 1 ? 1 : m + k - 1);
    }
    return out;
}

std::vector<int> attachment_star(int n, int m) {
    return std::vector<int>(static_cast<std::size_t>(std::max(0, n - m)), 1);
}

std::vector<int> attachment_seeded(int n, int m, unsigned long seed) {
    std::mt19937 gen(static_cast<std::mt19937::result_type>(seed));
    std::vector<int> out;
    for (int k = 1; k <= n - m; ++k) {
        // raw modulo keeps the sequence identical across platforms
        out.push_back(1 + static_cast<int>(gen() % static_cast<unsigned>(m + k - 1)));
    }
    return out;
}

namespace {

std::vector<std::vector<long>> tokenize_edge_list(std::string_view text) {
    std::vector<std::vector<long>> rows;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<long> numbers;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
                ++j;
            }
            long value = 0;
            const auto [ptr, ec] =
                std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc() || ptr != line.data() + j) {
                raise(ErrorCode::parse_error,
                      "edge list: line " + std::to_string(line_no) +
                          ": expected an integer, got '" +
                          std::string(line.substr(i, j - i)) + "'");
            }
            numbers.push_back(value);
            i = j;
        }
        if (!numbers.empty()) {
            rows.push_back(std::move(numbers));
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return rows;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    const auto rows = tokenize_edge_list(text);
    if (rows.empty()) {
        raise(ErrorCode::parse_error, "edge list: missing vertex-count line");
    }
    if (rows.front().size() != 1) {
        raise(ErrorCode::parse_error,
              "edge list: first line must hold exactly the vertex count");
    }
    const long n = rows.front().front();
    if (n < 1 || n > 1'000'000) {
        raise(ErrorCode::parse_error,
              "edge list: vertex count " + std::to_string(n) + " out of range");
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 2) {
            raise(ErrorCode::parse_error,
                  "edge list: edge lines must hold exactly two endpoints");
        }
        const long u = rows[r][0];
        const long v = rows[r][1];
        if (u < 1 || u > n || v < 1 || v > n) {
            raise(ErrorCode::vertex_out_of_range,
                  "edge list: endpoint outside 1.." + std::to_string(n));
        }
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), pairs);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

} // namespace spancom
