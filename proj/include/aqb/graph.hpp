#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "aqb/errors.hpp"
#include "aqb/numeric.hpp"
#include "aqb/rng.hpp"
#include "aqb/subspace.hpp"

namespace aqb::graphs {

// Simple undirected graph: symmetric boolean adjacency, zero diagonal.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1 || n > 62) throw invalid_argument("Graph: need 1 <= n <= 62");
    }

    int n() const { return n_; }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        if (i == j) return false;
        return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
    }

    void add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw invalid_argument("Graph::add_edge: self-loop rejected");
        adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
        adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
    }

    int edge_count() const {
        int c = 0;
        for (int i = 1; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (adj_[static_cast<std::size_t>(i) * n_ + j]) ++c;
        return c;
    }

    // Neighbourhood of vertex i as a bitmask.
    std::uint64_t neighbors(int i) const {
        check_vertex(i);
        std::uint64_t m = 0;
        for (int j = 0; j < n_; ++j)
            if (adj_[static_cast<std::size_t>(i) * n_ + j]) m |= std::uint64_t{1} << j;
        return m;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw invalid_argument("Graph: vertex id out of range");
    }

    int n_;
    std::vector<std::uint8_t> adj_;
};

// Erdos-Renyi G(n, p) with a fixed draw order: one uniform per pair (i, j)
// with i > j, rows in increasing i, j increasing inside a row. Same seed,
// same graph, on every platform.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_argument("random_graph: need 0 <= p <= 1");
    Graph g(n);
    UniformRng rng(seed);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (rng.next() < p) g.add_edge(i, j);
    return g;
}

// Edge-list text format:
//   # comment lines and blank lines are ignored
//   n <count>        header, must precede any edge
//   i j              one edge per line, 0-based ids, i != j
// Duplicate edges are idempotent. Errors carry 1-based line numbers.
inline Graph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank
        auto fail = [&](const std::string& what) {
            throw parse_error("edge list line " + std::to_string(line_no) + ": " + what);
        };
        if (!have_header) {
            if (first != "n") fail("expected header 'n <count>' before edges");
            long count = -1;
            if (!(ls >> count)) fail("missing vertex count in header");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            if (count < 1 || count > 62) fail("vertex count out of range [1, 62]");
            n = static_cast<int>(count);
            have_header = true;
            continue;
        }
        long i = -1, j = -1;
        std::istringstream es(line);
        if (!(es >> i >> j)) fail("expected edge 'i j'");
        std::string extra;
        if (es >> extra) fail("trailing tokens after edge");
        if (i < 0 || i >= n || j < 0 || j >= n) fail("vertex id out of range [0, n)");
        if (i == j) fail("self-loop rejected");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (!have_header) throw parse_error("edge list: missing header 'n <count>'");
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

// Inverse of load_edge_list: header plus one "i j" line per edge (i < j).
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) out << i << " " << j << "\n";
    return out.str();
}

// Number of missing edges inside the vertex set `label` (bitmask of weight k):
// sum over pairs i > j in the set of (1 - adjacency). Zero exactly when the
// set is a k-clique.
inline int missing_edge_count(const Graph& g, std::uint64_t label) {
    int cost = 0;
    for (int i = 1; i < g.n(); ++i) {
        if (!(label & (std::uint64_t{1} << i))) continue;
        for (int j = 0; j < i; ++j) {
            if (!(label & (std::uint64_t{1} << j))) continue;
            if (!g.has_edge(i, j)) ++cost;
        }
    }
    return cost;
}

// Exhaustive k-clique count over all binom(n, k) subsets. Deliberately brute
// force; instances with binom(n, k) > 1e7 are rejected.
inline std::uint64_t count_kcliques(const Graph& g, int k) {
    if (k < 2 || k > g.n()) throw invalid_argument("count_kcliques: need 2 <= k <= n");
    SubspaceIndex idx(g.n(), k);
    if (idx.dim() > 10'000'000)
        throw invalid_argument("count_kcliques: binom(n, k) exceeds 1e7 guard");
    std::uint64_t count = 0;
    for (std::uint64_t r = 0; r < idx.dim(); ++r)
        if (missing_edge_count(g, idx.unrank(r)) == 0) ++count;
    return count;
}

// Cost values over the weight-k subspace in SubspaceIndex (colex) order.
// Raw: number of missing edges. Deformed: min(raw, 1), which collapses the
// spectrum to {0, 1} and makes the values a clique indicator complement.
inline std::vector<double> cost_values(const Graph& g, int k, bool deformed) {
    if (k < 2 || k > g.n()) throw invalid_argument("cost_values: need 2 <= k <= n");
    SubspaceIndex idx(g.n(), k);
    if (idx.dim() > 10'000'000)
        throw invalid_argument("cost_values: binom(n, k) exceeds 1e7 guard");
    std::vector<double> values(idx.dim());
    for (std::uint64_t r = 0; r < idx.dim(); ++r) {
        int c = missing_edge_count(g, idx.unrank(r));
        values[r] = deformed ? std::min(c, 1) : c;
    }
    return values;
}

} // namespace aqb::graphs
