#include "ardeck/coloring.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ardeck {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

EdgeColoring EdgeColoring::from_colors(int n, std::vector<int> colors) {
    if (n < 0 || n > SimpleGraph::max_order) fail("EdgeColoring: bad host order");
    if (static_cast<int>(colors.size()) != edge_total(n))
        fail("EdgeColoring: wrong number of edge colors");
    int k = 0;
    for (int c : colors) {
        if (c < 0) fail("EdgeColoring: negative color id");
        k = std::max(k, c + 1);
    }
    std::vector<char> seen(k, 0);
    for (int c : colors) seen[c] = 1;
    for (int c = 0; c < k; ++c)
        if (!seen[c]) fail("EdgeColoring: color ids must be surjective onto 0..k-1");
    EdgeColoring out;
    out.n = n;
    out.k = k;
    out.color = std::move(colors);
    return out;
}

EdgeColoring EdgeColoring::normalized(int n, const std::vector<int>& raw) {
    if (static_cast<int>(raw.size()) != edge_total(n))
        fail("EdgeColoring: wrong number of edge colors");
    std::unordered_map<int, int> remap;
    std::vector<int> colors(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, fresh] = remap.try_emplace(raw[i], static_cast<int>(remap.size()));
        colors[i] = it->second;
    }
    EdgeColoring out;
    out.n = n;
    out.k = static_cast<int>(remap.size());
    out.color = std::move(colors);
    return out;
}

void write_coloring(std::ostream& os, const EdgeColoring& c) {
    os << c.n << ' ' << c.k << '\n';
    for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v) os << u << ' ' << v << ' ' << c.at(u, v) << '\n';
}

EdgeColoring read_coloring(std::istream& is) {
    auto next_line = [&](std::string& line) {
        while (std::getline(is, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) fail("read_coloring: missing header");
    std::istringstream head(line);
    int n, k;
    if (!(head >> n >> k)) fail("read_coloring: bad header");
    if (n < 0 || n > SimpleGraph::max_order) fail("read_coloring: bad host order");
    int total = EdgeColoring::edge_total(n);
    std::vector<int> colors(total, -1);
    for (int i = 0; i < total; ++i) {
        if (!next_line(line)) fail("read_coloring: fewer edges than the host requires");
        std::istringstream row(line);
        int u, v, c;
        if (!(row >> u >> v >> c)) fail("read_coloring: bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) fail("read_coloring: bad edge");
        int idx = EdgeColoring::edge_index(u, v);
        if (colors[idx] != -1) fail("read_coloring: duplicate edge line");
        colors[idx] = c;
    }
    auto out = EdgeColoring::from_colors(n, std::move(colors));
    if (out.k > k) fail("read_coloring: more colors used than declared");
    if (out.k != k) fail("read_coloring: declared color count not attained");
    return out;
}

}  // namespace ardeck
