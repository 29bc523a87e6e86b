#include "ardeck/transversal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace ardeck {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::vector<std::pair<int, int>> PartedDigraph::arcs() const {
    std::vector<std::pair<int, int>> out_arcs;
    for (int u = 0; u < order(); ++u)
        for (int v = out[u].next(0); v >= 0; v = out[u].next(v + 1))
            out_arcs.push_back({u, v});
    return out_arcs;
}

PartedDigraph PartedDigraph::build(int m, int s, const std::vector<std::pair<int, int>>& arcs,
                                   int* dropped_intra_part) {
    if (m < 1 || s < 1) fail("PartedDigraph: need m >= 1 and s >= 1");
    PartedDigraph d;
    d.m = m;
    d.s = s;
    int n = m * s;
    d.out.assign(n, Bits(n));
    d.in.assign(n, Bits(n));
    int dropped = 0;
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            fail("PartedDigraph: arc endpoint out of range");
        if (u / s == v / s) {
            ++dropped;  // intra-part arcs never affect a transversal
            continue;
        }
        d.out[u].set(v);
        d.in[v].set(u);
    }
    if (dropped_intra_part) *dropped_intra_part = dropped;
    for (int v = 0; v < n; ++v)
        d.max_out_degree = std::max(d.max_out_degree, d.out[v].count());
    return d;
}

bool independent(const PartedDigraph& d, const Transversal& t) {
    if (static_cast<int>(t.chosen.size()) != d.m) return false;
    std::vector<int> all;
    for (int i = 0; i < d.m; ++i) {
        if (static_cast<int>(t.chosen[i].size()) != t.fold) return false;
        for (int v : t.chosen[i]) {
            if (v < 0 || v >= d.order() || d.part_of(v) != i) return false;
            all.push_back(v);
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (i != j && d.has_arc(all[i], all[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact search

namespace {

struct ExactSearch {
    const PartedDigraph& d;
    int fold;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<std::vector<int>> chosen;

    bool dfs(int part, const Bits& forbidden) {
        if (part == d.m) return true;
        std::vector<int> avail;
        for (int v = part * d.s; v < (part + 1) * d.s; ++v)
            if (!forbidden.test(v)) avail.push_back(v);
        if (static_cast<int>(avail.size()) < fold) return false;
        std::vector<int> pick(fold);
        return combos(part, forbidden, avail, 0, 0, pick);
    }

    bool combos(int part, const Bits& forbidden, const std::vector<int>& avail,
                int from, int depth, std::vector<int>& pick) {
        if (depth == fold) {
            if (++nodes > budget)
                throw BudgetExceeded("find_transversal_exact: node budget exceeded", nodes);
            Bits next = forbidden;
            for (int v : pick) {
                next |= d.out[v];
                next |= d.in[v];
            }
            chosen[part] = pick;
            return dfs(part + 1, next);
        }
        for (int i = from; i <= static_cast<int>(avail.size()) - (fold - depth); ++i) {
            pick[depth] = avail[i];
            if (combos(part, forbidden, avail, i + 1, depth + 1, pick)) return true;
        }
        return false;
    }
};

double log2_choose(int n, int k) {
    double r = 0;
    for (int i = 0; i < k; ++i) r += std::log2(static_cast<double>(n - i) / (i + 1));
    return r;
}

}  // namespace

std::optional<Transversal> find_transversal_exact(const PartedDigraph& d, int fold,
                                                  std::uint64_t node_budget) {
    if (fold < 1 || fold > d.s) fail("find_transversal_exact: fold out of range");
    if (d.m * log2_choose(d.s, fold) > 48.0)
        fail("find_transversal_exact: search space infeasible for exact scan");
    ExactSearch search{d, fold, node_budget, 0,
                       std::vector<std::vector<int>>(d.m)};
    if (!search.dfs(0, Bits(d.order()))) return std::nullopt;
    Transversal t{fold, std::move(search.chosen)};
    assert(independent(d, t));
    return t;
}

// ---------------------------------------------------------------------------
// Independent Transversal Lemma, derandomized

namespace {

// Core derandomizer over an active vertex subset whose parts all have the
// same size.  Scaled accounting: an alive arc with f free endpoints weighs
// s_eff^(2-f); the sum staying below s_eff^2 certifies surviving completions.
Transversal itl_core(const PartedDigraph& d, const Bits& active, int s_eff,
                     ItlStats* stats) {
    int dplus = 0;
    for (int v = active.next(0); v >= 0; v = active.next(v + 1)) {
        int out_deg = 0;
        for (int w = d.out[v].next(0); w >= 0; w = d.out[v].next(w + 1))
            if (active.test(w)) ++out_deg;
        dplus = std::max(dplus, out_deg);
    }
    if (s_eff <= d.m * dplus)
        fail("itl_transversal: needs s > m * max_out_degree (s=" + std::to_string(s_eff) +
             ", m=" + std::to_string(d.m) + ", out-degree=" + std::to_string(dplus) + ")");

    // arcs alive within the active set
    std::vector<std::pair<int, int>> arcs;
    for (int u = active.next(0); u >= 0; u = active.next(u + 1))
        for (int v = d.out[u].next(0); v >= 0; v = d.out[u].next(v + 1))
            if (active.test(v)) arcs.push_back({u, v});

    unsigned long long s = static_cast<unsigned long long>(s_eff);
    unsigned long long threshold = s * s;
    std::vector<int> chosen(d.m, -1);
    if (stats) {
        stats->destroyed.clear();
        stats->threshold = threshold;
    }

    auto destroyed_mass = [&](int candidate_part, int candidate) -> unsigned long long {
        unsigned long long total = 0;
        for (auto [u, v] : arcs) {
            int free_endpoints = 0;
            bool dead = false;
            for (int w : {u, v}) {
                int p = d.part_of(w);
                int cw = p == candidate_part ? candidate : chosen[p];
                if (cw < 0)
                    ++free_endpoints;
                else if (cw != w)
                    dead = true;
            }
            if (dead) continue;
            unsigned long long weight = 1;
            for (int i = free_endpoints; i < 2; ++i) weight *= s;
            total += weight;
            if (total >= 2 * threshold) return total;  // already hopeless
        }
        return total;
    };

    for (int part = 0; part < d.m; ++part) {
        int best = -1;
        unsigned long long best_mass = 0;
        for (int v = part * d.s; v < (part + 1) * d.s; ++v) {
            if (!active.test(v)) continue;
            unsigned long long mass = destroyed_mass(part, v);
            if (best < 0 || mass < best_mass) {
                best = v;
                best_mass = mass;
            }
        }
        if (best < 0 || best_mass >= threshold)
            throw std::logic_error("itl_transversal: counting invariant violated");
        chosen[part] = best;
        if (stats) stats->destroyed.push_back(best_mass);
    }

    Transversal t;
    t.fold = 1;
    t.chosen.resize(d.m);
    for (int i = 0; i < d.m; ++i) t.chosen[i] = {chosen[i]};
    if (!independent(d, t))
        throw std::logic_error("itl_transversal: produced a dependent transversal");
    return t;
}

Bits full_active(const PartedDigraph& d) {
    Bits b(d.order());
    for (int v = 0; v < d.order(); ++v) b.set(v);
    return b;
}

}  // namespace

Transversal itl_transversal(const PartedDigraph& d, ItlStats* stats) {
    return itl_core(d, full_active(d), d.s, stats);
}

Transversal itl_multifold(const PartedDigraph& d, int r) {
    if (r < 1) fail("itl_multifold: fold must be positive");
    int dplus = d.max_out_degree;
    if (d.s < (2 * r + d.m) * dplus + r)
        fail("itl_multifold: needs s >= (2r+m)*out-degree + r (s=" + std::to_string(d.s) +
             ", m=" + std::to_string(d.m) + ", out-degree=" + std::to_string(dplus) +
             ", r=" + std::to_string(r) + ")");

    // extract k = s - m*D disjoint transversals from the shrinking residual
    int k = d.s - d.m * dplus;
    Bits active = full_active(d);
    std::vector<std::vector<int>> trans;  // flattened transversals
    for (int j = 0; j < k; ++j) {
        Transversal t = itl_core(d, active, d.s - j, nullptr);
        std::vector<int> flat;
        for (auto& part : t.chosen) {
            flat.push_back(part[0]);
            active.reset(part[0]);
        }
        trans.push_back(std::move(flat));
    }

    // conflict graph: transversals joined by any arc between them
    std::vector<Bits> masks(k, Bits(d.order()));
    for (int j = 0; j < k; ++j)
        for (int v : trans[j]) masks[j].set(v);
    std::vector<std::vector<char>> conflict(k, std::vector<char>(k, 0));
    for (int j1 = 0; j1 < k; ++j1)
        for (int j2 = j1 + 1; j2 < k; ++j2) {
            bool arc = false;
            for (int v : trans[j1])
                if (d.out[v].intersects(masks[j2]) || d.in[v].intersects(masks[j2])) {
                    arc = true;
                    break;
                }
            if (arc) conflict[j1][j2] = conflict[j2][j1] = 1;
        }

    // greedy min-degree independent set; theory grants size >= k/(2D+1)
    std::vector<char> alive(k, 1);
    std::vector<int> picked;
    while (true) {
        int best = -1, best_deg = k + 1;
        for (int j = 0; j < k; ++j) {
            if (!alive[j]) continue;
            int deg = 0;
            for (int l = 0; l < k; ++l)
                if (alive[l] && conflict[j][l]) ++deg;
            if (deg < best_deg) {
                best_deg = deg;
                best = j;
            }
        }
        if (best < 0) break;
        picked.push_back(best);
        alive[best] = 0;
        for (int l = 0; l < k; ++l)
            if (conflict[best][l]) alive[l] = 0;
    }
    if (static_cast<int>(picked.size()) < r)
        throw std::runtime_error("itl_multifold: greedy independent set fell short of r");
    picked.resize(r);
    std::sort(picked.begin(), picked.end());

    Transversal t;
    t.fold = r;
    t.chosen.assign(d.m, {});
    for (int j : picked)
        for (int v : trans[j]) t.chosen[d.part_of(v)].push_back(v);
    for (auto& part : t.chosen) std::sort(part.begin(), part.end());
    if (!independent(d, t))
        throw std::logic_error("itl_multifold: produced a dependent transversal");
    return t;
}

// ---------------------------------------------------------------------------
// Rainbow Cut Lemma

RainbowCutResult rainbow_cut(const EdgeColoring& psi,
                             const std::vector<std::vector<int>>& classes, int p) {
    int m = static_cast<int>(classes.size());
    if (m < 1) fail("rainbow_cut: need at least one class");
    if (p < 1) fail("rainbow_cut: need p >= 1");
    int q = static_cast<int>(classes[0].size());
    std::vector<int> class_of(psi.n, -1);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(classes[i].size()) != q)
            fail("rainbow_cut: classes must have equal size");
        for (int v : classes[i]) {
            if (v < 0 || v >= psi.n || class_of[v] != -1)
                fail("rainbow_cut: classes must be disjoint and in range");
            class_of[v] = i;
        }
    }
    if (q * m != psi.n) fail("rainbow_cut: classes must cover the host K_n");
    if (q % p != 0) fail("rainbow_cut: class size must be a multiple of p");
    int s = q / p;
    int dbound = 2 * m * (p * (p - 1) / 2);
    if (s <= dbound)
        fail("rainbow_cut: need q = s*p with s > 2m*C(p,2); q = m*p^3 always works");

    // the spanned multipartite graph K must be rainbow
    std::vector<std::pair<int, int>> kedge(psi.k, {-1, -1});  // color -> its K-edge
    for (int u = 0; u < psi.n; ++u)
        for (int v = u + 1; v < psi.n; ++v) {
            if (class_of[u] == class_of[v]) continue;
            int c = psi.at(u, v);
            if (kedge[c].first != -1)
                fail("rainbow_cut: spanned multipartite graph is not rainbow, color " +
                     std::to_string(c) + " repeats");
            kedge[c] = {u, v};
        }

    auto block_of = [&](int i, int pos) { return i * s + pos / p; };
    std::vector<std::pair<int, int>> block_of_vertex(psi.n);  // host vertex -> (class, block)
    for (int i = 0; i < m; ++i)
        for (int pos = 0; pos < q; ++pos)
            block_of_vertex[classes[i][pos]] = {i, block_of(i, pos)};

    // arc from a block to both blocks met by any K-edge reusing one of its
    // interior colors
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < s; ++j) {
            int src = i * s + j;
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b) {
                    int u = classes[i][j * p + a], v = classes[i][j * p + b];
                    int c = psi.at(u, v);
                    if (kedge[c].first < 0) continue;
                    for (int endpoint : {kedge[c].first, kedge[c].second}) {
                        auto [ci, bi] = block_of_vertex[endpoint];
                        if (ci != i) arcs.push_back({src, bi});
                    }
                }
        }

    PartedDigraph blockgraph = PartedDigraph::build(m, s, arcs);
    if (blockgraph.max_out_degree > dbound / m)
        throw std::logic_error("rainbow_cut: block digraph out-degree exceeds 2*C(p,2)");

    Transversal t = itl_transversal(blockgraph);
    RainbowCutResult result;
    result.p = p;
    result.classes.resize(m);
    for (int i = 0; i < m; ++i) {
        int j = t.chosen[i][0] - i * s;
        for (int a = 0; a < p; ++a) result.classes[i].push_back(classes[i][j * p + a]);
    }

    // re-verify the advertised postcondition before returning
    std::set<int> interior;
    for (auto& x : result.classes)
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = a + 1; b < x.size(); ++b)
                interior.insert(psi.at(x[a], x[b]));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int u : result.classes[i])
                for (int v : result.classes[j])
                    if (interior.count(psi.at(u, v)))
                        throw std::logic_error("rainbow_cut: postcondition re-check failed");
    return result;
}

// ---------------------------------------------------------------------------
// s(m,d) constructions

SmdVariant parse_smd_variant(const std::string& text) {
    if (text == "basic") return SmdVariant::basic;
    if (text == "small_m" || text == "small-m") return SmdVariant::small_m;
    if (text == "divisible") return SmdVariant::divisible;
    fail("unknown smd variant '" + text + "'");
}

std::string smd_variant_name(SmdVariant v) {
    switch (v) {
        case SmdVariant::basic: return "basic";
        case SmdVariant::small_m: return "small_m";
        case SmdVariant::divisible: return "divisible";
    }
    return "?";
}

SmdRecord smd_construct(int m, int d, SmdVariant variant, std::uint64_t verify_budget) {
    SmdRecord rec;
    rec.m = m;
    rec.d = d;
    rec.variant = variant;
    std::vector<std::pair<int, int>> arcs;
    int s = 0;

    switch (variant) {
        case SmdVariant::basic: {
            if (m < 3 || d < 1) fail("smd basic: needs m >= 3 and d >= 1");
            s = (m - 1) * d;
            // every vertex of class i < m-1 dominates block i of the last class
            int last = (m - 1) * s;
            for (int i = 0; i + 1 < m; ++i)
                for (int v = i * s; v < (i + 1) * s; ++v)
                    for (int j = 0; j < d; ++j) arcs.push_back({v, last + i * d + j});
            break;
        }
        case SmdVariant::small_m: {
            if (m < 3 || m > d) fail("smd small_m: needs 3 <= m <= d");
            s = (m - 1) * (d + 1);
            int last = (m - 1) * s;
            // last class: m-1 blocks of size d+1; class i: d+1 blocks of size m-1
            for (int i = 0; i + 1 < m; ++i)
                for (int j = 0; j <= d; ++j) {
                    int hub = last + i * (d + 1) + j;  // vertex v_{m,i,j}
                    for (int l = 0; l < m - 1; ++l) {
                        int w = i * s + j * (m - 1) + l;
                        arcs.push_back({hub, w});  // hub -> all of A_{i,j}
                        for (int jj = 0; jj <= d; ++jj)
                            if (jj != j) arcs.push_back({w, last + i * (d + 1) + jj});
                    }
                }
            break;
        }
        case SmdVariant::divisible: {
            if (m < 2 || d < 1 || d % (m - 1) != 0)
                fail("smd divisible: needs m >= 2 and (m-1) | d");
            int k = d / (m - 1);
            s = m * d;
            int last = (m - 1) * s;
            // class i < m-1 splits into m blocks V_{i,l} of size d; the last
            // class splits into m-1 blocks of size mk, refined into V_{m,j,l}
            // of size k
            for (int j = 0; j + 1 < m; ++j)
                for (int l = 0; l < m; ++l) {
                    for (int t = 0; t < k; ++t) {
                        int v = last + j * (m * k) + l * k + t;  // in V_{m,j,l}
                        for (int w = 0; w < d; ++w) arcs.push_back({v, j * s + l * d + w});
                    }
                    for (int w = 0; w < d; ++w) {
                        int src = j * s + l * d + w;
                        for (int ll = 0; ll < m; ++ll)
                            if (ll != l)
                                for (int t = 0; t < k; ++t)
                                    arcs.push_back({src, last + j * (m * k) + ll * k + t});
                    }
                }
            break;
        }
    }

    rec.claimed_s = s;
    rec.digraph = PartedDigraph::build(m, s, arcs);
    if (rec.digraph.max_out_degree > d)
        throw std::logic_error("smd_construct: out-degree exceeds d");
    try {
        auto t = find_transversal_exact(rec.digraph, 1, verify_budget);
        if (t) throw std::logic_error("smd_construct: construction admits a transversal");
        rec.verified_no_transversal = true;
    } catch (const BudgetExceeded&) {
        rec.verification_skipped = true;
    } catch (const std::invalid_argument&) {
        rec.verification_skipped = true;  // search space over the feasibility guard
    }
    return rec;
}

ForbiddenSubstructureReport scan_forbidden_substructures(const PartedDigraph& d) {
    ForbiddenSubstructureReport rep;
    auto arcs = d.arcs();
    for (auto [u, v] : arcs)
        if (d.has_arc(v, u)) rep.has_c2 = true;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [x, y] = arcs[j];
            std::set<int> verts{a, b, x, y};
            std::set<int> parts{d.part_of(a), d.part_of(b), d.part_of(x), d.part_of(y)};
            if (verts.size() == 4 && parts.size() == 4) rep.has_cross4_2k2 = true;
            if (verts.size() == 3 && parts.size() == 3) rep.has_cross3_p3 = true;
            if (rep.has_cross4_2k2 && rep.has_cross3_p3) return rep;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive scan at d = 1, m = 3, s = 3

namespace {

// Option codes: vertex v picks one of its 6 cross-part targets or none (6).
// A part assignment packs its three vertices' options into 0..342.
constexpr int options = 7;
constexpr int codes = options * options * options;

int target_of(int v, int option) {
    if (option == 6) return -1;
    int skip_base = (v / 3) * 3;
    int t = option;
    int w = t < skip_base ? t : t + 3;
    return w;
}

// 9-bit conflict masks between the choices of two parts under given codes.
std::vector<std::uint16_t> conflict_table(int part_a, int part_b) {
    std::vector<std::uint16_t> table(codes * codes);
    for (int ca = 0; ca < codes; ++ca) {
        std::array<int, 3> ta{};
        int rest = ca;
        for (int i = 0; i < 3; ++i) {
            ta[i] = target_of(part_a * 3 + i, rest % options);
            rest /= options;
        }
        for (int cb = 0; cb < codes; ++cb) {
            std::array<int, 3> tb{};
            int r2 = cb;
            for (int i = 0; i < 3; ++i) {
                tb[i] = target_of(part_b * 3 + i, r2 % options);
                r2 /= options;
            }
            std::uint16_t mask = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    int va = part_a * 3 + a, vb = part_b * 3 + b;
                    if (ta[a] == vb || tb[b] == va) mask |= std::uint16_t(1) << (a * 3 + b);
                }
            table[ca * codes + cb] = mask;
        }
    }
    return table;
}

}  // namespace

namespace {

// The scan's answers are all "yes" when the tables are right, so a vacuous
// pass would be invisible.  Guard against that: on random instances the
// table-based conflict bits must equal the digraph-based ones, pair by pair.
void d1_tables_selftest(const std::vector<std::uint16_t>& t01,
                        const std::vector<std::uint16_t>& t02,
                        const std::vector<std::uint16_t>& t12) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        std::array<int, 3> code{};
        std::vector<std::pair<int, int>> arcs;
        for (int part = 0; part < 3; ++part) {
            int c = static_cast<int>(rng() % codes);
            code[part] = c;
            for (int i = 0; i < 3; ++i) {
                int t = target_of(part * 3 + i, c % options);
                c /= options;
                if (t >= 0) arcs.push_back({part * 3 + i, t});
            }
        }
        auto d = PartedDigraph::build(3, 3, arcs);
        auto pair_bits = [&](const std::vector<std::uint16_t>& tab, int pa, int pb, int ca,
                             int cb) {
            std::uint16_t expect = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    int va = pa * 3 + a, vb = pb * 3 + b;
                    if (d.has_arc(va, vb) || d.has_arc(vb, va))
                        expect |= std::uint16_t(1) << (a * 3 + b);
                }
            if (tab[static_cast<std::size_t>(ca) * codes + cb] != expect)
                throw std::logic_error("scan_d1_m3: conflict table self-test failed");
        };
        pair_bits(t01, 0, 1, code[0], code[1]);
        pair_bits(t02, 0, 2, code[0], code[2]);
        pair_bits(t12, 1, 2, code[1], code[2]);
    }
}

}  // namespace

D1ScanResult scan_d1_m3_exhaustive(int jobs) {
    if (jobs < 1) jobs = 1;
    auto t01 = conflict_table(0, 1);
    auto t02 = conflict_table(0, 2);
    auto t12 = conflict_table(1, 2);
    d1_tables_selftest(t01, t02, t12);

    // Part symmetry: permuting parts 1 and 2 and relabeling inside them maps
    // any instance to one where vertex 0 points at vertex 3 or nowhere, so
    // only part-0 codes with option(v0) in {0, 6} need scanning.
    std::vector<int> part0_codes;
    for (int c = 0; c < codes; ++c)
        if (c % options == 0 || c % options == 6) part0_codes.push_back(c);

    std::atomic<bool> all_ok{true};
    std::atomic<std::uint64_t> instances{0};

    auto worker = [&](int worker_id) {
        std::uint64_t local = 0;
        bool ok = true;
        for (std::size_t idx = worker_id; idx < part0_codes.size() && ok;
             idx += static_cast<std::size_t>(jobs)) {
            int c0 = part0_codes[idx];
            const std::uint16_t* row01 = &t01[static_cast<std::size_t>(c0) * codes];
            const std::uint16_t* row02 = &t02[static_cast<std::size_t>(c0) * codes];
            for (int c1 = 0; c1 < codes && ok; ++c1) {
                std::uint16_t free01 = static_cast<std::uint16_t>(~row01[c1]);
                const std::uint16_t* row12 = &t12[static_cast<std::size_t>(c1) * codes];
                for (int c2 = 0; c2 < codes; ++c2) {
                    ++local;
                    std::uint16_t free02 = static_cast<std::uint16_t>(~row02[c2]);
                    std::uint16_t free12 = static_cast<std::uint16_t>(~row12[c2]);
                    bool found = false;
                    for (int a = 0; a < 3 && !found; ++a) {
                        int rb = (free01 >> (3 * a)) & 7;
                        int rc = (free02 >> (3 * a)) & 7;
                        while (rb && !found) {
                            int b = std::countr_zero(static_cast<unsigned>(rb));
                            rb &= rb - 1;
                            if (((free12 >> (3 * b)) & 7) & rc) found = true;
                        }
                    }
                    if (!found) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        instances += local;
        if (!ok) all_ok = false;
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& th : pool) th.join();
    }

    return {all_ok.load(), instances.load()};
}

// ---------------------------------------------------------------------------
// Random instances, I/O

PartedDigraph random_parted_digraph(int m, int s, int dplus, std::uint64_t seed) {
    if (m < 1 || s < 1 || dplus < 0) fail("random_parted_digraph: bad parameters");
    if (dplus > (m - 1) * s) fail("random_parted_digraph: out-degree exceeds cross-part pool");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    int n = m * s;
    for (int v = 0; v < n; ++v) {
        std::vector<int> pool;
        for (int w = 0; w < n; ++w)
            if (w / s != v / s) pool.push_back(w);
        for (int i = 0; i < dplus; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
            std::swap(pool[i], pool[pick(rng)]);
            arcs.push_back({v, pool[i]});
        }
    }
    return PartedDigraph::build(m, s, arcs);
}

void write_digraph(std::ostream& os, const PartedDigraph& d) {
    auto arcs = d.arcs();
    os << d.m << ' ' << d.s << ' ' << arcs.size() << '\n';
    for (auto [u, v] : arcs) os << u << ' ' << v << '\n';
}

PartedDigraph read_digraph(std::istream& is) {
    auto next_line = [&](std::string& line) {
        while (std::getline(is, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) fail("read_digraph: missing header");
    std::istringstream head(line);
    int m, s;
    long long a;
    if (!(head >> m >> s >> a)) fail("read_digraph: bad header");
    std::vector<std::pair<int, int>> arcs;
    for (long long i = 0; i < a; ++i) {
        if (!next_line(line)) fail("read_digraph: fewer arcs than declared");
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) fail("read_digraph: bad arc line");
        arcs.push_back({u, v});
    }
    return PartedDigraph::build(m, s, arcs);
}

std::string transversal_to_json(const Transversal& t) {
    nlohmann::json j;
    j["fold"] = t.fold;
    j["chosen"] = t.chosen;
    return j.dump();
}

}  // namespace ardeck
