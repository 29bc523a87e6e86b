#ifndef ARDECK_COLORING_HPP
#define ARDECK_COLORING_HPP

#include <iosfwd>
#include <vector>

#include "ardeck/graph.hpp"

namespace ardeck {

// Edge coloring of a complete host K_n.  Color ids are 0..k-1 and every id
// appears on at least one edge.  Edges are indexed in colex order so that all
// edges inside the first t vertices come first.
struct EdgeColoring {
    int n = 0;
    int k = 0;
    std::vector<int> color;  // size n(n-1)/2

    static int edge_index(int u, int v) {  // u != v
        if (u > v) std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }
    static int edge_total(int n) { return n * (n - 1) / 2; }

    int at(int u, int v) const { return color[edge_index(u, v)]; }

    // Validates that colors are exactly 0..k-1 with every id present.
    static EdgeColoring from_colors(int n, std::vector<int> colors);

    // Remaps arbitrary nonnegative ids to 0..k-1 by first appearance.
    static EdgeColoring normalized(int n, const std::vector<int>& raw);
};

// Text format: first line "n k", then n(n-1)/2 lines "u v c" covering every
// edge exactly once (any order on input; the writer goes lexicographically).
void write_coloring(std::ostream& os, const EdgeColoring& c);
EdgeColoring read_coloring(std::istream& is);

}  // namespace ardeck

#endif
