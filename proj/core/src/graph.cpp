#include "ardeck/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ardeck {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int SimpleGraph::edge_count() const {
    int total = 0;
    for (auto row : adj) total += std::popcount(row);
    return total / 2;
}

int SimpleGraph::degree(int v) const { return std::popcount(adj[v]); }

SimpleGraph build_graph(int n, std::vector<Edge> edges) {
    if (n < 0 || n > SimpleGraph::max_order)
        fail("build_graph: vertex count must be in 0..64, got " + std::to_string(n));
    SimpleGraph g(n);
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) fail("build_graph: endpoint out of range");
        if (e.u == e.v) fail("build_graph: loop edge rejected");
        if (g.has_edge(e.u, e.v)) fail("build_graph: duplicate edge rejected");
        g.add_edge_unchecked(e.u, e.v);
    }
    return g;
}

namespace {

void check_order(long long n, const char* what) {
    if (n < 0 || n > SimpleGraph::max_order)
        fail(std::string(what) + ": resulting order " + std::to_string(n) + " exceeds 64");
}

}  // namespace

SimpleGraph complete_graph(int p) {
    check_order(p, "complete_graph");
    SimpleGraph g(p);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) g.add_edge_unchecked(u, v);
    return g;
}

SimpleGraph complete_multipartite(const std::vector<int>& sizes) {
    long long n = 0;
    for (int s : sizes) {
        if (s <= 0) fail("complete_multipartite: part sizes must be positive");
        n += s;
    }
    check_order(n, "complete_multipartite");
    SimpleGraph g(static_cast<int>(n));
    int base = 0;
    std::vector<int> part(n);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) part[base++] = static_cast<int>(i);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (part[u] != part[v]) g.add_edge_unchecked(u, v);
    return g;
}

SimpleGraph cycle_graph(int k) {
    if (k < 3) fail("cycle_graph: need k >= 3");
    check_order(k, "cycle_graph");
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i) g.add_edge_unchecked(i, (i + 1) % k);
    return g;
}

SimpleGraph path_graph(int k) {
    if (k < 1) fail("path_graph: need k >= 1");
    check_order(k, "path_graph");
    SimpleGraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge_unchecked(i, i + 1);
    return g;
}

SimpleGraph matching_graph(int t) {
    if (t < 0) fail("matching_graph: need t >= 0");
    check_order(2LL * t, "matching_graph");
    SimpleGraph g(2 * t);
    for (int i = 0; i < t; ++i) g.add_edge_unchecked(2 * i, 2 * i + 1);
    return g;
}

SimpleGraph wheel_graph(int k) {
    if (k < 3) fail("wheel_graph: need k >= 3");
    check_order(k + 1LL, "wheel_graph");
    SimpleGraph g = cycle_graph(k);
    g.n = k + 1;
    g.adj.push_back(0);
    for (int i = 0; i < k; ++i) g.add_edge_unchecked(i, k);
    return g;
}

SimpleGraph book_graph(int t) { return m_graph(1, t); }

SimpleGraph m_graph(int s, int t) {
    if (s < 0 || t < 0) fail("m_graph: need s, t >= 0");
    return join_with_independent(matching_graph(s), t);
}

SimpleGraph join_with_independent(const SimpleGraph& h, int r) {
    if (r < 0) fail("join_with_independent: need r >= 0");
    check_order(h.n + static_cast<long long>(r), "join_with_independent");
    SimpleGraph g(h.n + r);
    for (int v = 0; v < h.n; ++v) g.adj[v] = h.adj[v];
    for (int u = 0; u < h.n; ++u)
        for (int w = h.n; w < g.n; ++w) g.add_edge_unchecked(u, w);
    return g;
}

SimpleGraph turan_graph(int n, int parts) {
    if (parts < 1) fail("turan_graph: need at least one part");
    check_order(n, "turan_graph");
    if (n == 0) return SimpleGraph(0);
    int c = std::min(parts, n);
    std::vector<int> sizes(c, n / c);
    for (int i = 0; i < n % c; ++i) ++sizes[i];
    return complete_multipartite(sizes);
}

SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge_unchecked(i, (i + 1) % 5);          // outer cycle
        g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge_unchecked(i, 5 + i);                // spokes
    }
    return g;
}

SimpleGraph parse_graph_literal(std::string_view text) {
    std::string s(text);
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "petersen") return petersen_graph();

    auto ints_after = [&](std::size_t pos) {
        std::vector<int> out;
        std::size_t i = pos;
        while (i < s.size()) {
            int val = 0;
            auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), val);
            if (ec != std::errc{} || p == s.data() + i) fail("bad graph literal: " + s);
            out.push_back(val);
            i = static_cast<std::size_t>(p - s.data());
            if (i < s.size()) {
                if (s[i] != ',') fail("bad graph literal: " + s);
                ++i;
            }
        }
        if (out.empty()) fail("bad graph literal: " + s);
        return out;
    };

    if (s.size() >= 2 && std::isdigit(static_cast<unsigned char>(s[0]))) {
        // tK2: a matching with t edges
        std::size_t k = 0;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (s.substr(k) == "K2" || s.substr(k) == "k2")
            return matching_graph(std::stoi(s.substr(0, k)));
        fail("bad graph literal: " + s);
    }

    if (s.empty()) fail("empty graph literal");
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::vector<int> args = ints_after(1);
    switch (head) {
        case 'K':
            return args.size() == 1 ? complete_graph(args[0]) : complete_multipartite(args);
        case 'C':
            if (args.size() != 1) fail("bad graph literal: " + s);
            return cycle_graph(args[0]);
        case 'P':
            if (args.size() != 1) fail("bad graph literal: " + s);
            return path_graph(args[0]);
        case 'W':
            if (args.size() != 1) fail("bad graph literal: " + s);
            return wheel_graph(args[0]);
        case 'B':
            if (args.size() != 1) fail("bad graph literal: " + s);
            return book_graph(args[0]);
        case 'M':
            if (args.size() != 2) fail("bad graph literal: " + s);
            return m_graph(args[0], args[1]);
        default:
            fail("bad graph literal: " + s);
    }
}

// ---------------------------------------------------------------------------
// Coloring

namespace {

// Greedy DSATUR coloring; returns the number of colors used.
int dsatur_greedy(const SimpleGraph& g) {
    int n = g.n;
    std::vector<int> color(n, -1);
    std::vector<std::uint64_t> forbidden(n, 0);  // colors on neighbors, as mask
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(forbidden[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = std::countr_one(forbidden[best]);
        color[best] = c;
        used = std::max(used, c + 1);
        std::uint64_t nb = g.adj[best];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[w] < 0 && c < 64) forbidden[w] |= bit(c);
        }
    }
    return used;
}

// Greedy clique from each of a few seed vertices; size is a lower bound on chi.
int greedy_clique_bound(const SimpleGraph& g) {
    int best = g.n > 0 ? 1 : 0;
    for (int seed = 0; seed < g.n; ++seed) {
        std::uint64_t cand = g.adj[seed];
        int size = 1;
        std::uint64_t cur = bit(seed);
        while (cand) {
            // pick the candidate with most neighbors among remaining candidates
            int pick = -1, pick_deg = -1;
            std::uint64_t it = cand;
            while (it) {
                int v = std::countr_zero(it);
                it &= it - 1;
                int d = std::popcount(g.adj[v] & cand);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            cur |= bit(pick);
            ++size;
            cand &= g.adj[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

struct KColorSearch {
    const SimpleGraph& g;
    int k;
    std::vector<int> color;
    std::vector<std::uint64_t> forbidden;

    explicit KColorSearch(const SimpleGraph& graph, int colors)
        : g(graph), k(colors), color(graph.n, -1), forbidden(graph.n, 0) {}

    bool run(int placed, int max_used) {
        if (placed == g.n) return true;
        // DSATUR order: max saturation, then max degree, then lowest index
        int v = -1, v_sat = -1, v_deg = -1;
        for (int u = 0; u < g.n; ++u) {
            if (color[u] >= 0) continue;
            int sat = std::popcount(forbidden[u]);
            int deg = g.degree(u);
            if (sat > v_sat || (sat == v_sat && deg > v_deg)) {
                v = u;
                v_sat = sat;
                v_deg = deg;
            }
        }
        int limit = std::min(k - 1, max_used + 1);  // at most one fresh color
        for (int c = 0; c <= limit; ++c) {
            if (forbidden[v] & bit(c)) continue;
            color[v] = c;
            std::vector<int> touched;
            std::uint64_t nb = g.adj[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[w] < 0 && !(forbidden[w] & bit(c))) {
                    forbidden[w] |= bit(c);
                    touched.push_back(w);
                }
            }
            if (run(placed + 1, std::max(max_used, c + 1))) return true;
            for (int w : touched) forbidden[w] &= ~bit(c);
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool k_colorable(const SimpleGraph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    if (k >= g.n) return true;
    if (k >= dsatur_greedy(g)) return true;
    if (k > 63) return true;  // n <= 64 and k < n unreachable here anyway
    KColorSearch search(g, k);
    return search.run(0, -1);
}

int chromatic_number(const SimpleGraph& g) {
    if (g.n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    int ub = dsatur_greedy(g);
    int lb = greedy_clique_bound(g);
    for (int k = lb; k < ub; ++k)
        if (k_colorable(g, k)) return k;
    return ub;
}

namespace {

bool clique_search(const SimpleGraph& g, std::uint64_t cand, int need) {
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (clique_search(g, cand & g.adj[v], need - 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_clique(const SimpleGraph& g, int k) {
    if (k <= 0) return true;
    return clique_search(g, g.vertex_mask(), k);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Iterated neighborhood-label refinement (1-WL).  Returns per-vertex class
// ids; two isomorphic graphs get identical sorted class multisets.
std::vector<int> refine_labels(const SimpleGraph& g) {
    std::vector<int> label(g.n, 0);
    for (int v = 0; v < g.n; ++v) label[v] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            std::uint64_t it = g.adj[v];
            while (it) {
                int w = std::countr_zero(it);
                it &= it - 1;
                nb.push_back(label[w]);
            }
            std::sort(nb.begin(), nb.end());
            nb.push_back(label[v]);
            sig[v] = {std::move(nb), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(g.n);
        int cls = 0;
        for (int i = 0; i < g.n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++cls;
            next[sorted[i].second] = cls;
        }
        if (next == label) break;
        label = next;
    }
    return label;
}

struct IsoSearch {
    const SimpleGraph& g;
    const SimpleGraph& h;
    const std::vector<int>& gl;
    const std::vector<int>& hl;
    std::vector<int> order;    // g's vertices, most-constrained first
    std::vector<int> map;      // g vertex -> h vertex
    std::uint64_t used = 0;

    bool run(std::size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 0; w < h.n; ++w) {
            if (used & bit(w)) continue;
            if (gl[v] != hl[w]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                if (g.has_edge(v, u) != h.has_edge(w, map[u])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used |= bit(w);
            if (run(pos + 1)) return true;
            used &= ~bit(w);
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.n > 16 || h.n > 16)
        fail("is_isomorphic: graphs above 16 vertices are rejected");
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;

    auto gl = refine_labels(g), hl = refine_labels(h);
    auto gs = gl, hs = hl;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return false;

    IsoSearch s{g, h, gl, hl, {}, std::vector<int>(g.n, -1)};
    std::vector<int> freq(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) ++freq[gl[v]];
    std::vector<int> result;
    std::uint64_t chosen = 0;
    // prefer vertices adjacent to already-ordered ones to keep the partial
    // maps connected and prunable
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        long best_key = -1;
        for (int v = 0; v < g.n; ++v) {
            if (chosen & bit(v)) continue;
            long adj_placed = std::popcount(g.adj[v] & chosen);
            long key = adj_placed * 10000 + g.degree(v) * 100 + (g.n - freq[gl[v]]);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        result.push_back(best);
        chosen |= bit(best);
    }
    s.order = result;
    return s.run(0);
}

// ---------------------------------------------------------------------------
// Structural statistics

bool is_bipartite(const SimpleGraph& g) {
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            std::uint64_t it = g.adj[v];
            while (it) {
                int w = std::countr_zero(it);
                it &= it - 1;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int degeneracy(const SimpleGraph& g) {
    int best = 0;
    std::uint64_t alive = g.vertex_mask();
    while (alive) {
        int v = -1, vd = SimpleGraph::max_order + 1;
        std::uint64_t it = alive;
        while (it) {
            int u = std::countr_zero(it);
            it &= it - 1;
            int d = std::popcount(g.adj[u] & alive);
            if (d < vd) {
                vd = d;
                v = u;
            }
        }
        best = std::max(best, vd);
        alive &= ~bit(v);
    }
    return best;
}

namespace {

// Shortest cycle via BFS from every vertex; exact for the minimum over roots.
int girth(const SimpleGraph& g) {
    int best = girth_infinite;
    for (int root = 0; root < g.n; ++root) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (best != girth_infinite && 2 * dist[v] >= best) break;
            std::uint64_t it = g.adj[v];
            while (it) {
                int w = std::countr_zero(it);
                it &= it - 1;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

GraphStats structural_stats(const SimpleGraph& g) {
    GraphStats st;
    st.edge_count = g.edge_count();
    for (int v = 0; v < g.n; ++v) st.max_degree = std::max(st.max_degree, g.degree(v));
    st.degeneracy = degeneracy(g);
    st.girth = girth(g);
    st.is_bipartite = is_bipartite(g);
    return st;
}

SimpleGraph delete_edges(const SimpleGraph& g, const std::vector<Edge>& s) {
    SimpleGraph out = g;
    for (Edge e : s) {
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        if (u < 0 || v >= g.n || u == v || !out.has_edge(u, v))
            fail("delete_edges: edge not present in graph");
        out.adj[u] &= ~bit(v);
        out.adj[v] &= ~bit(u);
    }
    return out;
}

std::vector<Edge> edge_list(const SimpleGraph& g) {
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (int u = 0; u < g.n; ++u) {
        std::uint64_t it = g.adj[u] & ~((bit(u) << 1) - 1);  // v > u
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

SimpleGraph spanned_subgraph(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (Edge e : edges) g.add_edge_unchecked(e.u, e.v);
    return g;
}

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
    auto edges = edge_list(g);
    os << g.n << ' ' << edges.size() << '\n';
    for (Edge e : edges) os << e.u << ' ' << e.v << '\n';
}

SimpleGraph read_edge_list(std::istream& is) {
    auto next_token_line = [&](std::string& line) {
        while (std::getline(is, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    std::string line;
    if (!next_token_line(line)) fail("read_edge_list: missing header line");
    std::istringstream head(line);
    int n = -1;
    long long m = -1;
    if (!(head >> n >> m)) fail("read_edge_list: bad header line");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_token_line(line)) fail("read_edge_list: fewer edges than declared");
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) fail("read_edge_list: bad edge line");
        edges.push_back({u, v});
    }
    return build_graph(n, std::move(edges));
}

std::string girth_to_string(int g) {
    return g == girth_infinite ? "inf" : std::to_string(g);
}

}  // namespace ardeck
