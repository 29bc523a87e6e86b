#include "ardeck/family.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "ardeck/common.hpp"

namespace ardeck {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int require_param(int value, int min, const char* what) {
    if (value < min) fail(std::string(what) + ": parameter must be at least " + std::to_string(min));
    return value;
}

}  // namespace

FamilySpec FamilySpec::at_most_edges(int k) {
    return {FamilyKind::at_most_k_edges, require_param(k, 1, "edges<=k")};
}
FamilySpec FamilySpec::max_degree(int t) {
    return {FamilyKind::max_degree, require_param(t, 1, "maxdeg<=t")};
}
FamilySpec FamilySpec::degenerate(int d) {
    return {FamilyKind::degenerate, require_param(d, 1, "degen<=d")};
}
// k = 1 would exclude K2 and break every deck construction, so it is rejected.
FamilySpec FamilySpec::k_colorable(int k) {
    return {FamilyKind::k_colorable, require_param(k, 2, "chrom<=k")};
}

std::optional<int> FamilySpec::chromatic_cap() const {
    switch (kind) {
        case FamilyKind::single_edge:
        case FamilyKind::matchings:
        case FamilyKind::forests:
        case FamilyKind::linear_forests:
            return 2;
        case FamilyKind::outerplanar:
            return 3;
        case FamilyKind::planar:
            return 4;
        case FamilyKind::degenerate:
            return param + 1;
        case FamilyKind::max_degree:
            return param + 1;
        case FamilyKind::k_colorable:
            return param;
        case FamilyKind::at_most_k_edges: {
            // largest q with q(q-1)/2 <= k
            int q = 1;
            while (static_cast<long long>(q + 1) * q / 2 <= param) ++q;
            return q;
        }
        case FamilyKind::triangle_free:
        case FamilyKind::odd_graphs:
            return std::nullopt;
    }
    return std::nullopt;
}

std::string FamilySpec::name() const {
    switch (kind) {
        case FamilyKind::single_edge: return "edge";
        case FamilyKind::matchings: return "matchings";
        case FamilyKind::at_most_k_edges: return "edges<=" + std::to_string(param);
        case FamilyKind::max_degree: return "maxdeg<=" + std::to_string(param);
        case FamilyKind::planar: return "planar";
        case FamilyKind::outerplanar: return "outerplanar";
        case FamilyKind::forests: return "forests";
        case FamilyKind::linear_forests: return "linforests";
        case FamilyKind::degenerate: return "degen<=" + std::to_string(param);
        case FamilyKind::k_colorable: return "chrom<=" + std::to_string(param);
        case FamilyKind::triangle_free: return "trianglefree";
        case FamilyKind::odd_graphs: return "odd";
    }
    return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    auto param_of = [&](std::string_view prefix) -> std::optional<int> {
        if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        try {
            return std::stoi(s.substr(prefix.size()));
        } catch (...) {
            fail("bad family parameter in '" + s + "'");
        }
    };
    if (s == "edge") return single_edge();
    if (s == "matchings") return matchings();
    if (s == "planar") return planar();
    if (s == "outerplanar") return outerplanar();
    if (s == "forests") return forests();
    if (s == "linforests") return linear_forests();
    if (s == "trianglefree") return triangle_free();
    if (s == "odd") return odd_graphs();
    if (auto k = param_of("edges<=")) return at_most_edges(*k);
    if (auto t = param_of("maxdeg<=")) return max_degree(*t);
    if (auto d = param_of("degen<=")) return degenerate(*d);
    if (auto k = param_of("chrom<=")) return k_colorable(*k);
    fail("unknown family spec '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Planarity on small graphs

namespace {

// Biconnected components (as vertex sets) via Tarjan lowlink on the edge
// stack.  Bridges come out as 2-vertex blocks.
struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::uint64_t> blocks;
    int counter = 0;

    explicit BlockFinder(const SimpleGraph& graph)
        : g(graph), num(graph.n, -1), low(graph.n, 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        std::uint64_t it = g.adj[v];
        while (it) {
            int w = std::countr_zero(it);
            it &= it - 1;
            if (w == parent) {
                parent = -1;  // consume one parent edge (no multi-edges here)
                continue;
            }
            if (num[w] < 0) {
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::uint64_t blk = 0;
                    while (true) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        blk |= bit(a) | bit(b);
                        if (a == v && b == w) break;
                    }
                    blocks.push_back(blk);
                }
            } else if (num[w] < num[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<std::uint64_t> run() {
        for (int v = 0; v < g.n; ++v)
            if (num[v] < 0) dfs(v, -1);
        return blocks;
    }
};

// Internally-disjoint path system search: map each required branch pair to a
// path whose internal vertices avoid all branch vertices and earlier paths.
struct PathSystem {
    const SimpleGraph& g;
    std::uint64_t branch;  // branch vertices
    const std::vector<std::pair<int, int>>& pairs;

    bool paths_from(std::size_t t, std::uint64_t used) {
        if (t == pairs.size()) return true;
        auto [a, b] = pairs[t];
        return extend(t, a, b, used, used | branch);
    }

    // Grow a simple path from `cur` to `target`; `blocked` holds vertices the
    // path may not enter (used internals plus branch vertices).
    bool extend(std::size_t t, int cur, int target, std::uint64_t used,
                std::uint64_t blocked) {
        if (g.has_edge(cur, target) && paths_from(t + 1, used)) return true;
        std::uint64_t cand = g.adj[cur] & ~blocked & ~bit(target);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (extend(t, w, target, used | bit(w), blocked | bit(w))) return true;
        }
        return false;
    }
};

bool has_subdivision_in_block(const SimpleGraph& g, std::uint64_t block, bool k33) {
    int need_deg = k33 ? 3 : 2 + 2;  // K33 branch degree 3, K5 degree 4
    std::vector<int> cands;
    std::uint64_t it = block;
    while (it) {
        int v = std::countr_zero(it);
        it &= it - 1;
        if (std::popcount(g.adj[v] & block) >= need_deg) cands.push_back(v);
    }
    int need = k33 ? 6 : 5;
    if (static_cast<int>(cands.size()) < need) return false;

    std::vector<int> pick(need);
    std::vector<std::pair<int, int>> pairs;
    auto try_pick = [&](auto&& self, int idx, int from) -> bool {
        if (idx == need) {
            std::uint64_t branch = 0;
            for (int v : pick) branch |= bit(v);
            if (!k33) {
                pairs.clear();
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j) pairs.push_back({pick[i], pick[j]});
                PathSystem ps{g, branch, pairs};
                return ps.paths_from(0, 0);
            }
            // split the 6 chosen into two triples; fix pick[0] on the left side
            for (int m1 = 1; m1 < 5; ++m1)
                for (int m2 = m1 + 1; m2 < 6; ++m2) {
                    pairs.clear();
                    std::vector<int> left = {pick[0]}, right;
                    for (int i = 1; i < 6; ++i)
                        if (i == m1 || i == m2)
                            left.push_back(pick[i]);
                        else
                            right.push_back(pick[i]);
                    for (int a : left)
                        for (int b : right) pairs.push_back({a, b});
                    PathSystem ps{g, branch, pairs};
                    if (ps.paths_from(0, 0)) return true;
                }
            return false;
        }
        for (std::size_t i = from; i < cands.size(); ++i) {
            pick[idx] = cands[i];
            if (self(self, idx + 1, static_cast<int>(i) + 1)) return true;
        }
        return false;
    };
    return try_pick(try_pick, 0, 0);
}

}  // namespace

bool is_planar(const SimpleGraph& g) {
    if (g.n > 20) fail("is_planar: graphs above 20 vertices are rejected");
    if (g.n <= 4) return true;
    int m = g.edge_count();
    if (m <= 8) return true;  // any Kuratowski subdivision needs 9+ edges
    if (g.n >= 3 && m > 3 * g.n - 6) return false;
    for (std::uint64_t block : BlockFinder(g).run()) {
        if (std::popcount(block) < 5) continue;
        if (has_subdivision_in_block(g, block, false)) return false;
        if (std::popcount(block) >= 6 && has_subdivision_in_block(g, block, true))
            return false;
    }
    return true;
}

bool is_outerplanar(const SimpleGraph& g) {
    if (g.n > 16) fail("is_outerplanar: graphs above 16 vertices are rejected");
    if (g.n <= 3) return true;
    if (g.edge_count() > 2 * g.n - 3) return false;
    return is_planar(join_with_independent(g, 1));
}

// ---------------------------------------------------------------------------
// Membership

bool family_contains(const FamilySpec& f, const SimpleGraph& h) {
    switch (f.kind) {
        case FamilyKind::single_edge:
            return h.edge_count() <= 1;
        case FamilyKind::matchings: {
            for (int v = 0; v < h.n; ++v)
                if (h.degree(v) > 1) return false;
            return true;
        }
        case FamilyKind::at_most_k_edges:
            return h.edge_count() <= f.param;
        case FamilyKind::max_degree: {
            for (int v = 0; v < h.n; ++v)
                if (h.degree(v) > f.param) return false;
            return true;
        }
        case FamilyKind::planar:
            if (h.n > 16) fail("family_contains: planar membership capped at 16 vertices");
            return is_planar(h);
        case FamilyKind::outerplanar:
            return is_outerplanar(h);
        case FamilyKind::forests:
            return structural_stats(h).girth == girth_infinite;
        case FamilyKind::linear_forests: {
            for (int v = 0; v < h.n; ++v)
                if (h.degree(v) > 2) return false;
            return structural_stats(h).girth == girth_infinite;
        }
        case FamilyKind::degenerate:
            return degeneracy(h) <= f.param;
        case FamilyKind::k_colorable:
            return k_colorable(h, f.param);
        case FamilyKind::triangle_free: {
            for (int u = 0; u < h.n; ++u) {
                std::uint64_t it = h.adj[u];
                while (it) {
                    int v = std::countr_zero(it);
                    it &= it - 1;
                    if (v > u && (h.adj[u] & h.adj[v])) return false;
                }
            }
            return true;
        }
        case FamilyKind::odd_graphs: {
            for (int v = 0; v < h.n; ++v) {
                int d = h.degree(v);
                if (d > 0 && d % 2 == 0) return false;
            }
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Member enumeration

namespace {

struct MemberEnum {
    const SimpleGraph& host;
    const FamilySpec& family;
    std::vector<Edge> all;
    std::uint64_t budget;
    std::uint64_t tests = 0;
    std::uint64_t emitted = 0;
    bool stopped = false;

    MemberEnum(const SimpleGraph& h, const FamilySpec& f, std::uint64_t b)
        : host(h), family(f), all(edge_list(h)), budget(b) {}

    bool member(const std::vector<int>& idx) {
        if (++tests > budget)
            throw BudgetExceeded("family enumeration exceeded its test budget", emitted);
        std::vector<Edge> es;
        es.reserve(idx.size());
        for (int i : idx) es.push_back(all[i]);
        return family_contains(family, spanned_subgraph(host.n, es));
    }

    bool member_plus(const std::vector<int>& idx, int extra) {
        if (++tests > budget)
            throw BudgetExceeded("family enumeration exceeded its test budget", emitted);
        std::vector<Edge> es;
        es.reserve(idx.size() + 1);
        for (int i : idx) es.push_back(all[i]);
        es.push_back(all[extra]);
        return family_contains(family, spanned_subgraph(host.n, es));
    }
};

// Bron-Kerbosch-style maximal-set enumeration for a hereditary edge property.
// `cand` are edges still allowed to enter; `excl` are edges covered by an
// earlier branch that could still extend the current set.  Leaves with
// nonempty excl are not maximal and die silently.
struct MaximalEnum : MemberEnum {
    const std::function<bool(const MaximalMember&)>& visit;

    MaximalEnum(const SimpleGraph& h, const FamilySpec& f, std::uint64_t b,
                const std::function<bool(const MaximalMember&)>& cb)
        : MemberEnum(h, f, b), visit(cb) {}

    void rec(std::vector<int>& chosen, const std::vector<int>& cand,
             const std::vector<int>& excl) {
        if (stopped) return;
        if (cand.empty()) {
            if (excl.empty()) {
                MaximalMember m;
                m.edges.reserve(chosen.size());
                for (int i : chosen) m.edges.push_back(all[i]);
                ++emitted;
                if (!visit(m)) stopped = true;
            }
            return;
        }
        int e = cand.front();
        // branch 1: take e
        chosen.push_back(e);
        std::vector<int> cand2, excl2;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (member_plus(chosen, cand[i])) cand2.push_back(cand[i]);
        for (int x : excl)
            if (member_plus(chosen, x)) excl2.push_back(x);
        rec(chosen, cand2, excl2);
        chosen.pop_back();
        if (stopped) return;
        // branch 2: forbid e
        std::vector<int> cand3(cand.begin() + 1, cand.end());
        std::vector<int> excl3 = excl;
        excl3.push_back(e);
        rec(chosen, cand3, excl3);
    }
};

}  // namespace

void for_each_maximal_member(const SimpleGraph& host, const FamilySpec& f,
                             const std::function<bool(const MaximalMember&)>& visit,
                             std::uint64_t budget) {
    if (!f.hereditary())
        fail("for_each_maximal_member: requires a hereditary family, got " + f.name());
    MaximalEnum e(host, f, budget, visit);
    std::vector<int> chosen;
    std::vector<int> cand, excl;
    for (int i = 0; i < static_cast<int>(e.all.size()); ++i) {
        chosen.push_back(i);
        bool ok = e.member(chosen);
        chosen.pop_back();
        if (ok) cand.push_back(i);
    }
    e.rec(chosen, cand, excl);
}

std::vector<MaximalMember> enumerate_maximal_members(const SimpleGraph& host,
                                                     const FamilySpec& f,
                                                     std::uint64_t budget) {
    std::vector<MaximalMember> out;
    for_each_maximal_member(
        host, f,
        [&](const MaximalMember& m) {
            out.push_back(m);
            return true;
        },
        budget);
    return out;
}

void for_each_member(const SimpleGraph& host, const FamilySpec& f,
                     const std::function<bool(const std::vector<Edge>&)>& visit,
                     std::uint64_t budget) {
    if (!f.hereditary())
        fail("for_each_member: requires a hereditary family, got " + f.name());
    MemberEnum e(host, f, budget);
    std::vector<int> chosen;
    std::vector<Edge> chosen_edges;
    int m = static_cast<int>(e.all.size());
    auto rec = [&](auto&& self, int from) -> bool {
        for (int i = from; i < m; ++i) {
            chosen.push_back(i);
            if (e.member(chosen)) {
                chosen_edges.push_back(e.all[i]);
                ++e.emitted;
                if (!visit(chosen_edges)) return false;
                if (!self(self, i + 1)) return false;
                chosen_edges.pop_back();
            }
            chosen.pop_back();
        }
        return true;
    };
    rec(rec, 0);
}

}  // namespace ardeck
