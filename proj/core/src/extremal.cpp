#include "ardeck/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "ardeck/common.hpp"

namespace ardeck {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Pattern compiled for backtracking embeddings: non-isolated vertices in a
// connectivity-aware order, each with its list of earlier neighbors.
struct CompiledPattern {
    std::vector<int> verts;                  // order -> original pattern vertex
    std::vector<std::vector<int>> earlier;   // order position -> earlier positions adjacent
    std::vector<int> min_degree;             // degree requirement per position

    static CompiledPattern compile(const SimpleGraph& p, int anchor_a = -1, int anchor_b = -1) {
        CompiledPattern c;
        std::vector<char> used(p.n, 0);
        auto push = [&](int v) {
            c.verts.push_back(v);
            used[v] = 1;
        };
        if (anchor_a >= 0) {
            push(anchor_a);
            push(anchor_b);
        }
        while (true) {
            int best = -1;
            long best_key = -1;
            for (int v = 0; v < p.n; ++v) {
                if (used[v] || p.degree(v) == 0) continue;
                long placed_adj = 0;
                for (int u : c.verts)
                    if (p.has_edge(u, v)) ++placed_adj;
                long key = placed_adj * 1000 + p.degree(v);
                if (key > best_key) {
                    best_key = key;
                    best = v;
                }
            }
            if (best < 0) break;
            push(best);
        }
        c.earlier.resize(c.verts.size());
        c.min_degree.resize(c.verts.size());
        for (std::size_t i = 0; i < c.verts.size(); ++i) {
            c.min_degree[i] = p.degree(c.verts[i]);
            for (std::size_t j = 0; j < i; ++j)
                if (p.has_edge(c.verts[i], c.verts[j])) c.earlier[i].push_back(static_cast<int>(j));
        }
        return c;
    }
};

bool embed(const SimpleGraph& host, const CompiledPattern& p, std::size_t pos,
           std::vector<int>& map, std::uint64_t& used) {
    if (pos == p.verts.size()) return true;
    for (int h = 0; h < host.n; ++h) {
        if (used & bit(h)) continue;
        if (host.degree(h) < p.min_degree[pos]) continue;
        bool ok = true;
        for (int ep : p.earlier[pos])
            if (!host.has_edge(map[ep], h)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[pos] = h;
        used |= bit(h);
        if (embed(host, p, pos + 1, map, used)) return true;
        used &= ~bit(h);
    }
    return false;
}

}  // namespace

bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    int active = 0;
    for (int v = 0; v < pattern.n; ++v)
        if (pattern.degree(v) > 0) ++active;
    if (active == 0) return true;  // isolated vertices are ignored
    if (active > host.n || pattern.edge_count() > host.edge_count()) return false;
    CompiledPattern c = CompiledPattern::compile(pattern);
    std::vector<int> map(c.verts.size(), -1);
    std::uint64_t used = 0;
    return embed(host, c, 0, map, used);
}

// ---------------------------------------------------------------------------
// Turan machinery

TuranResult turan_number(int n, int r) {
    if (r < 2) fail("turan_number: need r >= 2");
    if (n < 1) fail("turan_number: need n >= 1");
    TuranResult t;
    t.n = n;
    t.extremal_graph = turan_graph(n, r - 1);
    t.value = t.extremal_graph.edge_count();
    t.exact = true;
    t.method = TuranResult::Method::formula;
    return t;
}

double kst_bound(int n, int a, int b) {
    if (a < 2 || b < a) fail("kst_bound: need 2 <= a <= b");
    if (n < 0) fail("kst_bound: need n >= 0");
    double nn = n;
    return 0.5 * (std::pow(b - 1.0, 1.0 / a) * (nn - a + 1) * std::pow(nn, 1.0 - 1.0 / a) +
                  (a - 1.0) * nn);
}

namespace {

// Does adding `e` to the host complete a copy of the pattern through `e`?
struct AnchoredPattern {
    std::vector<CompiledPattern> variants;  // one per pattern edge orientation
    int pattern_edges = 0;

    static AnchoredPattern compile(const SimpleGraph& p) {
        AnchoredPattern a;
        a.pattern_edges = p.edge_count();
        for (Edge e : edge_list(p)) {
            a.variants.push_back(CompiledPattern::compile(p, e.u, e.v));
            a.variants.push_back(CompiledPattern::compile(p, e.v, e.u));
        }
        return a;
    }

    bool completes(const SimpleGraph& host, Edge e) const {
        for (const auto& v : variants) {
            std::vector<int> map(v.verts.size(), -1);
            map[0] = e.u;
            map[1] = e.v;
            if (host.degree(e.u) < v.min_degree[0] || host.degree(e.v) < v.min_degree[1])
                continue;
            // the anchor pair must respect earlier-neighbor constraints itself
            bool anchored_ok = true;
            for (int ep : v.earlier[1])
                if (ep == 0 && !host.has_edge(e.u, e.v)) anchored_ok = false;
            if (!anchored_ok) continue;
            std::uint64_t used = bit(e.u) | bit(e.v);
            if (embed(host, v, 2, map, used)) return true;
        }
        return false;
    }
};

struct ExSearch {
    std::vector<Edge> all;
    std::vector<AnchoredPattern> forbidden;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best = -1;
    SimpleGraph best_graph;
    SimpleGraph cur;
    bool aborted = false;

    bool blocked(Edge e) const {
        for (const auto& p : forbidden)
            if (p.completes(cur, e)) return true;
        return false;
    }

    void dfs(std::size_t i, int have) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        int remaining = static_cast<int>(all.size() - i);
        if (have + remaining <= best) return;
        if (i == all.size()) {
            best = have;
            best_graph = cur;
            return;
        }
        Edge e = all[i];
        cur.add_edge_unchecked(e.u, e.v);
        bool ok = !blocked(e);
        if (!ok) {
            cur.adj[e.u] &= ~bit(e.v);
            cur.adj[e.v] &= ~bit(e.u);
        }
        if (ok) {
            dfs(i + 1, have + 1);
            cur.adj[e.u] &= ~bit(e.v);
            cur.adj[e.v] &= ~bit(e.u);
        }
        dfs(i + 1, have);
    }
};

SimpleGraph strip_isolated(const SimpleGraph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    SimpleGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                out.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace

TuranResult ex_exact_small(int n, std::vector<SimpleGraph> forbidden,
                           std::uint64_t node_budget, int max_n) {
    if (n < 1 || n > max_n)
        fail("ex_exact_small: n must be in 1.." + std::to_string(max_n));
    if (forbidden.empty()) fail("ex_exact_small: forbidden list must be nonempty");
    for (auto& h : forbidden) {
        h = strip_isolated(h);
        if (h.edge_count() == 0)
            fail("ex_exact_small: an edgeless forbidden graph makes every graph forbidden");
    }
    // keep only subgraph-minimal forbidden graphs
    std::vector<SimpleGraph> minimal;
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < forbidden.size() && keep; ++j) {
            if (i == j) continue;
            if (contains_subgraph(forbidden[i], forbidden[j]) &&
                !(contains_subgraph(forbidden[j], forbidden[i]) && j > i))
                keep = false;  // some other member embeds strictly (or ties, first wins)
        }
        if (keep) minimal.push_back(forbidden[i]);
    }

    ExSearch search;
    search.cur = SimpleGraph(n);
    search.best_graph = SimpleGraph(n);
    search.budget = node_budget;
    {
        SimpleGraph k = complete_graph(n);
        search.all = edge_list(k);
    }
    for (const auto& h : minimal) search.forbidden.push_back(AnchoredPattern::compile(h));

    // seed the bound with randomized greedy maximal graphs
    search.best = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        auto order = search.all;
        std::shuffle(order.begin(), order.end(), rng);
        SimpleGraph g(n);
        search.cur = g;
        int have = 0;
        for (Edge e : order) {
            search.cur.add_edge_unchecked(e.u, e.v);
            if (search.blocked(e)) {
                search.cur.adj[e.u] &= ~bit(e.v);
                search.cur.adj[e.v] &= ~bit(e.u);
            } else {
                ++have;
            }
        }
        if (have > search.best) {
            search.best = have;
            search.best_graph = search.cur;
        }
    }

    search.cur = SimpleGraph(n);
    search.dfs(0, 0);

    TuranResult t;
    t.n = n;
    t.value = search.best;
    t.extremal_graph = search.best_graph;
    t.exact = !search.aborted;
    t.method = search.aborted ? TuranResult::Method::bound : TuranResult::Method::search;
    if (t.exact)
        for (const auto& h : minimal)
            if (contains_subgraph(t.extremal_graph, h))
                throw std::logic_error("ex_exact_small: extremal graph re-check failed");
    return t;
}

// ---------------------------------------------------------------------------
// Family-colored copies

namespace {

// Backtracking over injections of g into the colored complete host.  For
// hereditary families every partial color class must already be a member;
// non-hereditary families are checked only on full embeddings.
struct CopyChecker {
    SimpleGraph g;
    FamilySpec f;
    int host_n;
    bool prune;
    CompiledPattern order;  // over all vertices of g, isolated included

    std::vector<std::vector<Edge>> cls;  // color -> g-edges, scratch
    std::vector<int> map;
    std::vector<char> used;
    const int* colors = nullptr;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;

    CopyChecker(const SimpleGraph& graph, const FamilySpec& family, int n)
        : g(graph), f(family), host_n(n), prune(family.hereditary()) {
        // embedding order over every vertex; reuse the pattern compiler and
        // append the isolated vertices at the end
        order = CompiledPattern::compile(g);
        std::vector<char> seen(g.n, 0);
        for (int v : order.verts) seen[v] = 1;
        for (int v = 0; v < g.n; ++v)
            if (!seen[v]) {
                order.verts.push_back(v);
                order.earlier.push_back({});
                order.min_degree.push_back(0);
            }
        map.assign(order.verts.size(), -1);
        used.assign(host_n, 0);
    }

    bool admits(const std::vector<int>& edge_colors, int k,
                EmbeddingCertificate* cert) {
        colors = edge_colors.data();
        if (static_cast<int>(cls.size()) < k) cls.resize(k);
        for (int c = 0; c < k; ++c) cls[c].clear();
        std::fill(map.begin(), map.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        return place(0, cert);
    }

    bool class_ok(int c) const {
        return family_contains(f, spanned_subgraph(g.n, cls[c]));
    }

    bool place(std::size_t pos, EmbeddingCertificate* cert) {
        if (pos == order.verts.size()) {
            if (!prune) {
                for (std::size_t c = 0; c < cls.size(); ++c)
                    if (!cls[c].empty() && !class_ok(static_cast<int>(c))) return false;
            }
            if (cert) {
                cert->map.assign(g.n, -1);
                for (std::size_t i = 0; i < order.verts.size(); ++i)
                    cert->map[order.verts[i]] = map[i];
                cert->classes.clear();
                for (std::size_t c = 0; c < cls.size(); ++c)
                    if (!cls[c].empty())
                        cert->classes.push_back({static_cast<int>(c), cls[c]});
            }
            return true;
        }
        int gv = order.verts[pos];
        for (int h = 0; h < host_n; ++h) {
            if (used[h]) continue;
            if (budget && ++nodes > budget)
                throw BudgetExceeded("find_family_colored_copy: node budget exceeded", nodes);
            std::vector<std::pair<int, std::size_t>> touched;  // color, old size
            bool ok = true;
            for (int ep : order.earlier[pos]) {
                int gu = order.verts[ep];
                int c = colors[EdgeColoring::edge_index(map[ep], h)];
                Edge ge{std::min(gu, gv), std::max(gu, gv)};
                touched.push_back({c, cls[c].size()});
                cls[c].push_back(ge);
            }
            if (prune) {
                // test each touched color once, after all additions
                for (std::size_t t = 0; t < touched.size() && ok; ++t) {
                    int c = touched[t].first;
                    bool last = true;
                    for (std::size_t t2 = t + 1; t2 < touched.size(); ++t2)
                        if (touched[t2].first == c) last = false;
                    if (last && !class_ok(c)) ok = false;
                }
            }
            if (ok) {
                map[pos] = h;
                used[h] = 1;
                if (place(pos + 1, cert)) return true;
                used[h] = 0;
                map[pos] = -1;
            }
            for (auto it = touched.rbegin(); it != touched.rend(); ++it)
                cls[it->first].resize(it->second);
        }
        return false;
    }
};

}  // namespace

std::optional<EmbeddingCertificate> find_family_colored_copy(const EdgeColoring& psi,
                                                             const SimpleGraph& g,
                                                             const FamilySpec& f,
                                                             std::uint64_t node_budget) {
    if (g.n > psi.n) fail("find_family_colored_copy: pattern larger than host");
    CopyChecker checker(g, f, psi.n);
    checker.budget = node_budget;
    EmbeddingCertificate cert;
    if (!checker.admits(psi.color, psi.k, &cert)) return std::nullopt;
    if (!verify_embedding_certificate(psi, g, f, cert))
        throw std::logic_error("find_family_colored_copy: certificate re-check failed");
    return cert;
}

bool verify_embedding_certificate(const EdgeColoring& psi, const SimpleGraph& g,
                                  const FamilySpec& f, const EmbeddingCertificate& cert) {
    if (static_cast<int>(cert.map.size()) != g.n) return false;
    std::vector<char> used(psi.n, 0);
    for (int h : cert.map) {
        if (h < 0 || h >= psi.n || used[h]) return false;
        used[h] = 1;
    }
    // classes must partition E(g) and match the host colors
    std::set<Edge> seen;
    for (const auto& [c, edges] : cert.classes) {
        if (edges.empty()) return false;
        for (Edge e : edges) {
            if (!g.has_edge(e.u, e.v)) return false;
            if (!seen.insert(e).second) return false;
            if (psi.at(cert.map[e.u], cert.map[e.v]) != c) return false;
        }
        if (!family_contains(f, spanned_subgraph(g.n, edges))) return false;
    }
    return static_cast<int>(seen.size()) == g.edge_count();
}

// ---------------------------------------------------------------------------
// Lower-bound coloring

LowerBoundColoring lb_coloring(int n, const SimpleGraph& g, const FamilySpec& f,
                               std::uint64_t budget) {
    if (family_contains(f, g))
        fail("lb_coloring: G belongs to the family, the lower bound is meaningless");
    if (n < g.n) fail("lb_coloring: host order below |G|");

    Deck dk = deck(g, f, /*dedupe=*/g.n <= 16, budget);
    LowerBoundColoring out;
    for (const auto& member : dk.members) out.reduced_deck.push_back(strip_isolated(member));
    out.deck_extremal = ex_exact_small(n, out.reduced_deck);

    const SimpleGraph& r = out.deck_extremal.extremal_graph;
    int rainbow = 0;
    std::vector<int> colors(EdgeColoring::edge_total(n), -1);
    for (Edge e : edge_list(r)) colors[EdgeColoring::edge_index(e.u, e.v)] = rainbow++;
    for (int& c : colors)
        if (c < 0) c = rainbow;  // one shared color on everything outside R
    out.coloring = EdgeColoring::from_colors(n, std::move(colors));
    out.colors = out.coloring.k;
    if (out.colors != out.deck_extremal.value + 1)
        throw std::logic_error("lb_coloring: color count mismatch");

    if (find_family_colored_copy(out.coloring, g, f))
        throw std::logic_error("lb_coloring: certificate failed, coloring admits a copy");
    return out;
}

// ---------------------------------------------------------------------------
// Exact forcing numbers at tiny n

namespace {

// Edge positions are colex, so the edges inside the first five vertices of
// K_6 occupy positions 0..9; the canonical-prefix reduction acts there.
struct PartitionScan {
    int edges;
    CopyChecker* checker;
    int best = 0;
    std::vector<int> best_rgs;
    std::size_t best_prefix = 0;   // global prefix index where best was attained
    std::size_t current_prefix = 0;
    std::vector<char> achievable;  // block counts with a known avoider
    bool check_all;                // full mode: check every leaf
    std::uint64_t leaves = 0;

    explicit PartitionScan(int m, CopyChecker* c, bool all)
        : edges(m), checker(c), achievable(m + 1, 0), check_all(all) {}

    void leaf(std::vector<int>& rgs, int blocks) {
        ++leaves;
        if (!check_all && blocks <= best) return;
        if (checker->admits(rgs, blocks, nullptr)) return;  // copy found, not an avoider
        achievable[blocks] = 1;
        if (blocks > best) {
            best = blocks;
            best_rgs = rgs;
            best_prefix = current_prefix;
        }
    }

    void walk(std::vector<int>& rgs, int pos, int maxb) {
        if (pos == edges) {
            leaf(rgs, maxb + 1);
            return;
        }
        for (int v = 0; v <= maxb + 1; ++v) {
            rgs[pos] = v;
            walk(rgs, pos + 1, std::max(maxb, v));
        }
    }

    // keeps the attainer with the smallest global prefix index, which makes
    // the reported avoider independent of the shard count
    void merge_from(const PartitionScan& o) {
        for (std::size_t b = 0; b < achievable.size(); ++b)
            achievable[b] = achievable[b] || o.achievable[b];
        leaves += o.leaves;
        if (o.best > best || (o.best == best && o.best > 0 && o.best_prefix < best_prefix)) {
            best = o.best;
            best_rgs = o.best_rgs;
            best_prefix = o.best_prefix;
        }
    }
};

// All 120 permutations of the first five vertices, as maps on the first ten
// colex edge positions.
std::vector<std::array<int, 10>> k5_edge_perms() {
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::vector<std::array<int, 10>> out;
    do {
        std::array<int, 10> edge_map{};
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                edge_map[EdgeColoring::edge_index(u, v)] =
                    EdgeColoring::edge_index(perm[u], perm[v]);
        out.push_back(edge_map);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Rename blocks of a sequence to restricted-growth form.
std::vector<int> rgs_normalize(const std::vector<int>& seq) {
    std::vector<int> remap(seq.size(), -1);
    std::vector<int> out(seq.size());
    int next = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (remap[seq[i]] < 0) remap[seq[i]] = next++;
        out[i] = remap[seq[i]];
    }
    return out;
}

bool is_canonical_prefix(const std::vector<int>& rgs,
                         const std::vector<std::array<int, 10>>& perms) {
    std::vector<int> permuted(10);
    for (const auto& pm : perms) {
        for (int i = 0; i < 10; ++i) permuted[pm[i]] = rgs[i];
        if (rgs_normalize(permuted) < rgs) return false;
    }
    return true;
}

}  // namespace

ForcingResult f_exact_tiny(int n, const SimpleGraph& g, const FamilySpec& f, int jobs) {
    if (n < 1 || n > 6)
        fail("f_exact_tiny: n must be at most 6 (5 for the fully exhaustive mode)");
    if (g.n > n) fail("f_exact_tiny: |G| exceeds n");
    if (!f.hereditary())
        fail("f_exact_tiny: non-hereditary families are rejected (merge monotonicity fails)");
    if (jobs < 1) jobs = 1;

    ForcingResult result;
    result.n = n;
    result.attestation = n <= 5 ? "exhaustive" : "symmetry-pruned";
    if (family_contains(f, g)) {
        result.value = 1;  // every coloring works, any copy decomposes inside F
        return result;
    }

    int m = EdgeColoring::edge_total(n);
    CopyChecker checker(g, f, n);
    bool full = n <= 5;

    // prefix layer for sharding (and, at n = 6, canonical reduction)
    int prefix_len = full ? std::min(m, 6) : 10;
    std::vector<std::pair<std::vector<int>, int>> prefixes;  // rgs prefix, max block id
    {
        std::vector<int> rgs(prefix_len, 0);
        auto gen = [&](auto&& self, int pos, int maxb) -> void {
            if (pos == prefix_len) {
                prefixes.push_back({rgs, maxb});
                return;
            }
            for (int v = 0; v <= maxb + 1; ++v) {
                rgs[pos] = v;
                self(self, pos + 1, std::max(maxb, v));
            }
        };
        gen(gen, 0, -1);
    }
    if (!full) {
        auto perms = k5_edge_perms();
        std::erase_if(prefixes, [&](const auto& pr) {
            return !is_canonical_prefix(pr.first, perms);
        });
    }

    auto run_shard = [&](int shard, PartitionScan& scan, CopyChecker& chk) {
        scan.checker = &chk;
        std::vector<int> rgs(m, 0);
        for (std::size_t i = shard; i < prefixes.size(); i += static_cast<std::size_t>(jobs)) {
            scan.current_prefix = i;
            std::copy(prefixes[i].first.begin(), prefixes[i].first.end(), rgs.begin());
            scan.walk(rgs, prefix_len, prefixes[i].second);
        }
    };

    PartitionScan total(m, &checker, full);
    if (jobs == 1) {
        run_shard(0, total, checker);
    } else {
        std::vector<PartitionScan> scans;
        std::vector<CopyChecker> checkers;
        scans.reserve(jobs);
        checkers.reserve(jobs);
        for (int j = 0; j < jobs; ++j) {
            scans.emplace_back(m, nullptr, full);
            checkers.emplace_back(g, f, n);
        }
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] { run_shard(j, scans[j], checkers[j]); });
        for (auto& th : pool) th.join();
        for (auto& s : scans) total.merge_from(s);
    }

    if (total.best == 0 || total.best_rgs.empty())
        throw std::logic_error("f_exact_tiny: no avoider found, even monochromatic");

    if (full) {
        // merge monotonicity: achievable avoider block counts are downward closed
        for (int b = 1; b <= total.best; ++b)
            if (!total.achievable[b])
                throw std::logic_error("f_exact_tiny: avoider block counts not downward closed");
    } else {
        // constructive closure check: merging the two last blocks of the best
        // avoider must stay avoiding all the way down to one block
        std::vector<int> rgs = total.best_rgs;
        for (int b = total.best; b >= 1; --b) {
            std::vector<int> capped(rgs.size());
            for (std::size_t i = 0; i < rgs.size(); ++i) capped[i] = std::min(rgs[i], b - 1);
            if (checker.admits(rgs_normalize(capped), b, nullptr))
                throw std::logic_error("f_exact_tiny: merged avoider admits a copy");
        }
    }

    result.value = total.best + 1;
    result.extremal_avoider = EdgeColoring::from_colors(n, total.best_rgs);
    return result;
}

std::string forcing_to_json(const ForcingResult& r, const std::string& avoider_file) {
    nlohmann::json j;
    j["n"] = r.n;
    j["f"] = r.value;
    if (r.extremal_avoider)
        j["avoider_colors"] = r.extremal_avoider->k;
    else
        j["avoider_colors"] = nullptr;
    if (avoider_file.empty())
        j["avoider_file"] = nullptr;
    else
        j["avoider_file"] = avoider_file;
    j["attestation"] = r.attestation;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Classification

Classification classify(const SimpleGraph& g, const FamilySpec& f, ChiMode mode,
                        std::optional<int> concrete_n) {
    Classification c;
    c.chi = chromatic_number(g);
    c.chi_f = reduced_chromatic(g, f, mode);

    int lo = c.chi_f.lo, hi = c.chi_f.hi;
    if (lo >= 3) {
        c.case_id = 1;
    } else if (hi <= 2 && lo == 2) {
        c.case_id = 2;
    } else if (hi <= 1) {
        c.case_id = 3;
    } else {
        c.case_id = 0;  // bounds straddle the case boundary
    }

    if (c.chi_f.exact)
        c.stable = (*c.chi_f.value == c.chi);
    else if (lo == c.chi)
        c.stable = true;
    else if (hi < c.chi)
        c.stable = false;

    switch (c.case_id) {
        case 1:
            if (c.chi_f.exact) {
                int mval = *c.chi_f.value;
                c.turan_coefficient =
                    static_cast<double>(mval - 2) / (2.0 * mval - 2.0);
                c.leading_term = "(1+o(1)) * ex(n, K_" + std::to_string(mval) + ") = (" +
                                 std::to_string(mval - 2) + "/" + std::to_string(2 * mval - 2) +
                                 " + o(1)) * n^2";
            } else {
                c.leading_term = "(1+o(1)) * ex(n, K_m) with m in [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "]";
            }
            break;
        case 2:
            c.leading_term = "o(n^2)";
            break;
        case 3:
            c.leading_term = "f(n, G | F) = 1";
            break;
        default:
            c.leading_term = "undetermined: chi_F bounds [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] straddle 2";
    }

    if (concrete_n && c.case_id != 3 && !family_contains(f, g))
        c.concrete = lb_coloring(*concrete_n, g, f);
    return c;
}

std::string classification_to_json(const Classification& c) {
    nlohmann::json j;
    j["chi"] = c.chi;
    j["chi_f"] = nlohmann::json::parse(reduced_chromatic_to_json(c.chi_f));
    j["case"] = c.case_id;
    if (c.stable)
        j["stable"] = *c.stable;
    else
        j["stable"] = nullptr;
    j["leading_term"] = c.leading_term;
    if (c.turan_coefficient)
        j["turan_coefficient"] = *c.turan_coefficient;
    else
        j["turan_coefficient"] = nullptr;
    if (c.concrete) {
        j["concrete_lower_bound"] = {
            {"n", c.concrete->coloring.n},
            {"colors", c.concrete->colors},
            {"deck_extremal_edges", c.concrete->deck_extremal.value},
            {"certified_f_at_least", c.concrete->colors + 1},
        };
    }
    return j.dump();
}

}  // namespace ardeck
