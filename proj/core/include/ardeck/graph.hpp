#ifndef ARDECK_GRAPH_HPP
#define ARDECK_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace ardeck {

// Undirected simple graph on at most 64 vertices.  Adjacency rows are single
// machine words so that vertex-set operations are plain bit operations.
// Values are immutable once built; every operation below is pure.
struct SimpleGraph {
    static constexpr int max_order = 64;

    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] = neighbor mask, bit v always 0

    SimpleGraph() = default;
    explicit SimpleGraph(int order) : n(order), adj(order, 0) {}

    int order() const { return n; }
    int edge_count() const;
    int degree(int v) const;
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    std::uint64_t vertex_mask() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    // Internal: callers must keep the symmetry/no-loop invariants.
    void add_edge_unchecked(int u, int v) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    bool operator==(const SimpleGraph&) const = default;
};

struct Edge {
    int u = 0, v = 0;  // u < v in a valid edge
    auto operator<=>(const Edge&) const = default;
};

constexpr int girth_infinite = std::numeric_limits<int>::max();

struct GraphStats {
    int max_degree = 0;
    int degeneracy = 0;
    int girth = girth_infinite;
    bool is_bipartite = true;
    int edge_count = 0;
};

// Construction.  Rejects n > 64, loops, duplicates and out-of-range endpoints.
SimpleGraph build_graph(int n, std::vector<Edge> edges);

// Generators.  All reject parameter sets that exceed 64 vertices.
SimpleGraph complete_graph(int p);
SimpleGraph complete_multipartite(const std::vector<int>& sizes);
SimpleGraph cycle_graph(int k);    // k >= 3
SimpleGraph path_graph(int k);     // k >= 1 vertices
SimpleGraph matching_graph(int t); // tK2
SimpleGraph wheel_graph(int k);    // C_k plus an apex, k >= 3
SimpleGraph book_graph(int t);     // K_2 joined with t independent vertices
SimpleGraph m_graph(int s, int t); // sK2 joined with t independent vertices
SimpleGraph join_with_independent(const SimpleGraph& h, int r);  // H + rK1
SimpleGraph turan_graph(int n, int parts);
SimpleGraph petersen_graph();

// Generator literals as accepted on the command line: K6, K2,2,2, C5, P4,
// W5, B3, M2,3, 3K2, petersen.  Throws std::invalid_argument on no match.
SimpleGraph parse_graph_literal(std::string_view text);

// Exact chromatic number: DSATUR-ordered branch and bound with a clique
// lower bound and greedy upper bound; ties break on the lowest vertex index.
int chromatic_number(const SimpleGraph& g);
bool k_colorable(const SimpleGraph& g, int k);
bool contains_clique(const SimpleGraph& g, int k);

// Backtracking isomorphism over degree-refined candidate maps; both graphs
// must have at most 16 vertices.
bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

GraphStats structural_stats(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
int degeneracy(const SimpleGraph& g);

// Edge deletion G - S; every edge of S must be present in g.
SimpleGraph delete_edges(const SimpleGraph& g, const std::vector<Edge>& s);

std::vector<Edge> edge_list(const SimpleGraph& g);  // ascending lexicographic

// Subgraph of `host`'s vertex set spanned by the given edges.
SimpleGraph spanned_subgraph(int n, const std::vector<Edge>& edges);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// The writer emits edges in ascending lexicographic order; the reader
// accepts any order and '#' comments.
void write_edge_list(std::ostream& os, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& is);

std::string girth_to_string(int girth);  // infinite girth prints as "inf"

}  // namespace ardeck

#endif
