#ifndef ARDECK_FAMILY_HPP
#define ARDECK_FAMILY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ardeck/graph.hpp"

namespace ardeck {

// Hereditary (or, for OddGraphs, non-hereditary) graph families with exact
// membership predicates.  The parameter field holds k / t / d where the kind
// needs one.
enum class FamilyKind {
    single_edge,     // at most one edge
    matchings,       // max degree <= 1
    at_most_k_edges, // |E| <= k
    max_degree,      // max degree <= t
    planar,
    outerplanar,
    forests,         // acyclic
    linear_forests,  // acyclic and max degree <= 2
    degenerate,      // degeneracy <= d
    k_colorable,     // chromatic number <= k, k >= 2
    triangle_free,
    odd_graphs,      // every non-isolated vertex has odd degree
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::single_edge;
    int param = 0;

    bool hereditary() const { return kind != FamilyKind::odd_graphs; }

    // Maximum chromatic number over members, when bounded.
    std::optional<int> chromatic_cap() const;

    std::string name() const;

    // Grammar: matchings | edge | edges<=K | maxdeg<=T | planar | outerplanar
    //          | forests | linforests | degen<=D | chrom<=K | trianglefree
    //          | odd  (case-insensitive)
    static FamilySpec parse(std::string_view text);

    static FamilySpec single_edge() { return {FamilyKind::single_edge, 0}; }
    static FamilySpec matchings() { return {FamilyKind::matchings, 0}; }
    static FamilySpec at_most_edges(int k);
    static FamilySpec max_degree(int t);
    static FamilySpec planar() { return {FamilyKind::planar, 0}; }
    static FamilySpec outerplanar() { return {FamilyKind::outerplanar, 0}; }
    static FamilySpec forests() { return {FamilyKind::forests, 0}; }
    static FamilySpec linear_forests() { return {FamilyKind::linear_forests, 0}; }
    static FamilySpec degenerate(int d);
    static FamilySpec k_colorable(int k);
    static FamilySpec triangle_free() { return {FamilyKind::triangle_free, 0}; }
    static FamilySpec odd_graphs() { return {FamilyKind::odd_graphs, 0}; }

    bool operator==(const FamilySpec&) const = default;
};

// Exact membership test.  Planar/outerplanar kinds reject hosts above 16
// vertices.
bool family_contains(const FamilySpec& f, const SimpleGraph& h);

// Kuratowski-style planarity for small graphs: Euler-bound rejection, then
// exhaustive K5/K33-subdivision search per biconnected block.
bool is_planar(const SimpleGraph& g);
bool is_outerplanar(const SimpleGraph& g);  // planar with a universal apex

// An inclusion-maximal edge subset of a host whose spanned subgraph lies in
// the family.
struct MaximalMember {
    std::vector<Edge> edges;
};

inline constexpr std::uint64_t default_enumeration_budget = 200'000'000;

// Visits every inclusion-maximal member exactly once, deterministically.
// The visitor returns false to stop early.  Requires a hereditary family.
// The budget counts membership tests; exceeding it throws BudgetExceeded
// whose `progress` field is the number of members already visited.
void for_each_maximal_member(const SimpleGraph& host, const FamilySpec& f,
                             const std::function<bool(const MaximalMember&)>& visit,
                             std::uint64_t budget = default_enumeration_budget);

std::vector<MaximalMember> enumerate_maximal_members(
    const SimpleGraph& host, const FamilySpec& f,
    std::uint64_t budget = default_enumeration_budget);

// Visits every nonempty member (not only maximal ones), each exactly once.
// Requires a hereditary family.
void for_each_member(const SimpleGraph& host, const FamilySpec& f,
                     const std::function<bool(const std::vector<Edge>&)>& visit,
                     std::uint64_t budget = default_enumeration_budget);

}  // namespace ardeck

#endif
