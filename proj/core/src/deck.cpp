#include "ardeck/deck.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ardeck/common.hpp"

namespace ardeck {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Cheap isomorphism invariant used to bucket deck members before running the
// backtracking test.
std::vector<int> iso_key(const SimpleGraph& g) {
    std::vector<int> key;
    key.push_back(g.n);
    key.push_back(g.edge_count());
    std::vector<int> degs(g.n);
    for (int v = 0; v < g.n; ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    key.insert(key.end(), degs.begin(), degs.end());
    // triangle count as a second-order invariant (common neighbors above v)
    int tri = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            std::uint64_t above = v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
            tri += std::popcount(g.adj[u] & g.adj[v] & above);
        }
    key.push_back(tri);
    return key;
}

}  // namespace

Deck deck(const SimpleGraph& g, const FamilySpec& f, bool dedupe, std::uint64_t budget) {
    if (dedupe && g.n > 16) fail("deck: dedupe needs a host with at most 16 vertices");
    Deck d{g, f, {}, dedupe};

    if (g.edge_count() == 0) {
        // the empty deletion is the only one; it is a member exactly when the
        // edgeless host itself belongs to the family
        if (family_contains(f, g)) d.members.push_back(g);
        return d;
    }

    std::map<std::vector<int>, std::vector<std::size_t>> buckets;  // key -> member indices
    for_each_member(g, f, [&](const std::vector<Edge>& del) {
        SimpleGraph h = delete_edges(g, del);
        if (!dedupe) {
            d.members.push_back(std::move(h));
            return true;
        }
        auto key = iso_key(h);
        auto& reps = buckets[key];
        for (std::size_t idx : reps)
            if (is_isomorphic(d.members[idx], h)) return true;
        reps.push_back(d.members.size());
        d.members.push_back(std::move(h));
        return true;
    }, budget);
    return d;
}

ReducedChromaticResult reduced_chromatic(const SimpleGraph& g, const FamilySpec& f,
                                         ChiMode mode, std::uint64_t budget) {
    ReducedChromaticResult r;

    if (family_contains(f, g)) {
        // chi_F(G) = 1 iff G is itself a member; witness deletes everything
        r.value = g.n > 0 ? 1 : 0;
        r.lo = r.hi = *r.value;
        r.exact = true;
        r.witness.edges = edge_list(g);
        return r;
    }

    int chi = chromatic_number(g);
    auto cap = f.chromatic_cap();
    int lo = 2;  // G is not a member, so every deck graph keeps an edge
    if (cap) lo = std::max(lo, (chi + *cap - 1) / *cap);

    if (mode == ChiMode::exact) {
        if (!f.hereditary())
            fail("reduced_chromatic: exact mode requires a hereditary family");
        int best = chi;  // deleting any member never raises chi above chi(G)
        MaximalMember best_witness;
        std::map<std::vector<std::uint64_t>, int> memo;  // adjacency -> chi
        bool found = false;
        for_each_maximal_member(g, f, [&](const MaximalMember& m) {
            SimpleGraph h = delete_edges(g, m.edges);
            auto [it, fresh] = memo.try_emplace(h.adj, 0);
            if (fresh) it->second = chromatic_number(h);
            if (!found || it->second < best) {
                best = it->second;
                best_witness = m;
                found = true;
            }
            return best > lo;  // stop once the lower bound is attained
        }, budget);
        r.value = best;
        r.lo = r.hi = best;
        r.exact = true;
        r.witness = best_witness;
        return r;
    }

    // bounded mode: greedy maximal member plus clique-partition patterns
    if (!cap) fail("reduced_chromatic: bounded mode unsupported without a chromatic cap");
    std::vector<std::vector<Edge>> candidates;
    {
        std::vector<Edge> greedy;
        for (Edge e : edge_list(g)) {
            greedy.push_back(e);
            if (!family_contains(f, spanned_subgraph(g.n, greedy))) greedy.pop_back();
        }
        candidates.push_back(std::move(greedy));
    }
    int clique_size = 0;
    switch (f.kind) {
        case FamilyKind::planar: clique_size = 4; break;
        case FamilyKind::outerplanar: clique_size = 3; break;
        case FamilyKind::degenerate: clique_size = f.param + 1; break;
        case FamilyKind::k_colorable: clique_size = f.param; break;
        case FamilyKind::max_degree: clique_size = f.param + 1; break;
        default: break;
    }
    if (clique_size >= 2) {
        // delete the edges inside consecutive vertex groups of that size
        std::vector<Edge> pattern;
        for (int base = 0; base < g.n; base += clique_size) {
            int top = std::min(g.n, base + clique_size);
            for (int u = base; u < top; ++u)
                for (int v = u + 1; v < top; ++v)
                    if (g.has_edge(u, v)) pattern.push_back({u, v});
        }
        if (family_contains(f, spanned_subgraph(g.n, pattern)))
            candidates.push_back(std::move(pattern));
    }
    int hi = chi;
    std::vector<Edge> hi_witness;
    for (auto& del : candidates) {
        int val = chromatic_number(delete_edges(g, del));
        if (val < hi || hi_witness.empty()) {
            hi = val;
            hi_witness = del;
        }
    }
    r.lo = std::min(lo, hi);
    r.hi = hi;
    r.exact = (r.lo == hi);
    if (r.exact) r.value = hi;
    r.witness.edges = std::move(hi_witness);
    return r;
}

std::string reduced_chromatic_to_json(const ReducedChromaticResult& r) {
    nlohmann::json j;
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["exact"] = r.exact;
    auto arr = nlohmann::json::array();
    for (Edge e : r.witness.edges) arr.push_back({e.u, e.v});
    j["witness_edges"] = arr;
    return j.dump();
}

StabilityReport is_stable(const SimpleGraph& g, const FamilySpec& f, std::uint64_t budget) {
    StabilityReport rep;
    rep.chi = chromatic_number(g);
    auto r = reduced_chromatic(g, f, ChiMode::exact, budget);
    rep.chi_f = *r.value;
    rep.stable = (rep.chi_f == rep.chi);
    if (!rep.stable) rep.critical_witness = r.witness;
    return rep;
}

namespace {

// Chromatic index as the chromatic number of the line graph.
int chromatic_index(const SimpleGraph& g) {
    auto edges = edge_list(g);
    if (edges.size() > SimpleGraph::max_order)
        fail("min_decomposition_size: matchings kind supports at most 64 edges");
    SimpleGraph line(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                line.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
        }
    return chromatic_number(line);
}

// Nash-Williams: arboricity = max over vertex sets W (|W| >= 2) of
// ceil(e(W) / (|W| - 1)); induced subgraphs attain the maximum.
int arboricity(const SimpleGraph& g) {
    if (g.n > 20) fail("min_decomposition_size: forests kind supports at most 20 vertices");
    if (g.edge_count() == 0) return 0;
    int best = 1;
    std::uint64_t full = g.vertex_mask();
    for (std::uint64_t w = 1; w <= full; ++w) {
        int size = std::popcount(w);
        if (size < 2) continue;
        int edges = 0;
        std::uint64_t it = w;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            edges += std::popcount(g.adj[v] & w);
        }
        edges /= 2;
        best = std::max(best, (edges + size - 2) / (size - 1));
    }
    return best;
}

}  // namespace

int min_decomposition_size(const SimpleGraph& g, const FamilySpec& f) {
    int m = g.edge_count();
    switch (f.kind) {
        case FamilyKind::single_edge:
            return m;
        case FamilyKind::at_most_k_edges:
            return static_cast<int>((m + f.param - 1) / f.param);
        case FamilyKind::matchings:
            return chromatic_index(g);
        case FamilyKind::forests:
            return arboricity(g);
        case FamilyKind::planar:
            fail("min_decomposition_size: thickness (planar kind) is not supported");
        default:
            fail("min_decomposition_size: unsupported family " + f.name());
    }
}

}  // namespace ardeck
