#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ardeck/common.hpp"
#include "ardeck/family.hpp"
#include "oracles.hpp"

using namespace ardeck;

namespace {

std::set<std::vector<Edge>> as_set(const std::vector<MaximalMember>& ms) {
    std::set<std::vector<Edge>> out;
    for (const auto& m : ms) {
        auto e = m.edges;
        std::sort(e.begin(), e.end());
        out.insert(e);
    }
    return out;
}

std::set<std::vector<Edge>> as_set(const std::vector<std::vector<Edge>>& ms) {
    std::set<std::vector<Edge>> out;
    for (auto e : ms) {
        std::sort(e.begin(), e.end());
        out.insert(e);
    }
    return out;
}

}  // namespace

TEST_CASE("family parsing and names") {
    CHECK(FamilySpec::parse("matchings").kind == FamilyKind::matchings);
    CHECK(FamilySpec::parse("EDGE").kind == FamilyKind::single_edge);
    CHECK(FamilySpec::parse("edges<=3").param == 3);
    CHECK(FamilySpec::parse("maxdeg<=2").param == 2);
    CHECK(FamilySpec::parse("Planar").kind == FamilyKind::planar);
    CHECK(FamilySpec::parse("outerplanar").kind == FamilyKind::outerplanar);
    CHECK(FamilySpec::parse("forests").kind == FamilyKind::forests);
    CHECK(FamilySpec::parse("linforests").kind == FamilyKind::linear_forests);
    CHECK(FamilySpec::parse("degen<=2").param == 2);
    CHECK(FamilySpec::parse("chrom<=3").param == 3);
    CHECK(FamilySpec::parse("trianglefree").kind == FamilyKind::triangle_free);
    CHECK(FamilySpec::parse("odd").kind == FamilyKind::odd_graphs);
    CHECK_THROWS_AS(FamilySpec::parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("chrom<=1"), std::invalid_argument);
    for (auto name : {"matchings", "edge", "edges<=3", "maxdeg<=2", "planar", "outerplanar",
                      "forests", "linforests", "degen<=2", "chrom<=3", "trianglefree", "odd"})
        CHECK(FamilySpec::parse(FamilySpec::parse(name).name()) == FamilySpec::parse(name));
}

TEST_CASE("membership predicates") {
    CHECK(family_contains(FamilySpec::matchings(), matching_graph(2)));
    CHECK_FALSE(family_contains(FamilySpec::matchings(), path_graph(3)));
    CHECK(family_contains(FamilySpec::single_edge(), matching_graph(1)));
    CHECK_FALSE(family_contains(FamilySpec::single_edge(), matching_graph(2)));
    CHECK(family_contains(FamilySpec::at_most_edges(3), complete_graph(3)));
    CHECK_FALSE(family_contains(FamilySpec::at_most_edges(2), complete_graph(3)));
    CHECK(family_contains(FamilySpec::max_degree(2), cycle_graph(5)));
    CHECK_FALSE(family_contains(FamilySpec::max_degree(2), complete_graph(4)));
    CHECK(family_contains(FamilySpec::forests(), path_graph(5)));
    CHECK_FALSE(family_contains(FamilySpec::forests(), cycle_graph(4)));
    CHECK(family_contains(FamilySpec::linear_forests(), path_graph(5)));
    CHECK_FALSE(family_contains(FamilySpec::linear_forests(),
                                build_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(family_contains(FamilySpec::degenerate(3), wheel_graph(5)));
    CHECK(family_contains(FamilySpec::degenerate(2), join_with_independent(path_graph(4), 1)));
    CHECK_FALSE(family_contains(FamilySpec::degenerate(2), complete_graph(4)));
    CHECK(family_contains(FamilySpec::k_colorable(3), cycle_graph(5)));
    CHECK_FALSE(family_contains(FamilySpec::k_colorable(2), cycle_graph(5)));
    CHECK(family_contains(FamilySpec::triangle_free(), petersen_graph()));
    CHECK_FALSE(family_contains(FamilySpec::triangle_free(), wheel_graph(4)));
    // odd graphs: all non-isolated degrees odd
    CHECK(family_contains(FamilySpec::odd_graphs(), complete_graph(4)));
    CHECK(family_contains(FamilySpec::odd_graphs(), matching_graph(3)));
    CHECK_FALSE(family_contains(FamilySpec::odd_graphs(), path_graph(3)));
    CHECK(family_contains(FamilySpec::odd_graphs(), SimpleGraph(3)));
}

TEST_CASE("planarity") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_multipartite({3, 3})));
    CHECK(is_planar(complete_multipartite({2, 3})));
    CHECK_FALSE(is_planar(petersen_graph()));
    CHECK(is_planar(wheel_graph(8)));
    // K5 subdivision: one edge of K5 replaced by a 2-edge path through 4
    auto sub = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {0, 5}, {1, 5}, {2, 5}, {3, 4}, {4, 5}});
    CHECK_FALSE(is_planar(sub));
    // disjoint planar pieces stay planar
    auto two_k4 = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                  {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    CHECK(is_planar(two_k4));
    CHECK(family_contains(FamilySpec::planar(), two_k4));
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(cycle_graph(6)));
    CHECK(is_outerplanar(complete_graph(3)));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_multipartite({2, 3})));  // forbidden minor K_{2,3}
    CHECK(is_outerplanar(path_graph(7)));
    // fan = path + apex is outerplanar, wheel is not
    auto fan = join_with_independent(path_graph(5), 1);
    CHECK(is_outerplanar(fan));
    CHECK_FALSE(is_outerplanar(wheel_graph(5)));
}

TEST_CASE("chromatic caps") {
    CHECK(FamilySpec::planar().chromatic_cap() == 4);
    CHECK(FamilySpec::degenerate(2).chromatic_cap() == 3);
    CHECK(FamilySpec::outerplanar().chromatic_cap() == 3);
    CHECK(FamilySpec::matchings().chromatic_cap() == 2);
    CHECK(FamilySpec::single_edge().chromatic_cap() == 2);
    CHECK(FamilySpec::forests().chromatic_cap() == 2);
    CHECK(FamilySpec::max_degree(3).chromatic_cap() == 4);
    CHECK(FamilySpec::k_colorable(3).chromatic_cap() == 3);
    CHECK(FamilySpec::at_most_edges(1).chromatic_cap() == 2);
    CHECK(FamilySpec::at_most_edges(2).chromatic_cap() == 2);
    CHECK(FamilySpec::at_most_edges(3).chromatic_cap() == 3);
    CHECK_FALSE(FamilySpec::triangle_free().chromatic_cap());
    CHECK_FALSE(FamilySpec::odd_graphs().chromatic_cap());
}

TEST_CASE("maximal member examples") {
    auto pm_k4 = enumerate_maximal_members(complete_graph(4), FamilySpec::matchings());
    CHECK(pm_k4.size() == 3);  // the three perfect matchings
    for (const auto& m : pm_k4) CHECK(m.edges.size() == 2);

    auto m_k3 = enumerate_maximal_members(complete_graph(3), FamilySpec::matchings());
    CHECK(m_k3.size() == 3);
    for (const auto& m : m_k3) CHECK(m.edges.size() == 1);

    auto f_k4 = enumerate_maximal_members(complete_graph(4), FamilySpec::forests());
    CHECK(f_k4.size() == 16);  // Cayley: 4^2 spanning trees
    for (const auto& m : f_k4) CHECK(m.edges.size() == 3);

    CHECK_THROWS_AS(enumerate_maximal_members(complete_graph(3), FamilySpec::odd_graphs()),
                    std::invalid_argument);
}

TEST_CASE("maximal members match the subset-scan oracle") {
    std::vector<FamilySpec> families = {
        FamilySpec::single_edge(),    FamilySpec::matchings(),
        FamilySpec::at_most_edges(3), FamilySpec::max_degree(2),
        FamilySpec::forests(),        FamilySpec::linear_forests(),
        FamilySpec::degenerate(1),    FamilySpec::k_colorable(2),
        FamilySpec::triangle_free(),  FamilySpec::outerplanar(),
    };
    std::vector<SimpleGraph> hosts = {
        complete_graph(4), cycle_graph(5), wheel_graph(4), book_graph(3),
        oracle::random_graph(5, 0.6, 11), oracle::random_graph(6, 0.4, 12),
    };
    for (const auto& f : families)
        for (const auto& host : hosts) {
            if (host.edge_count() > 12) continue;
            CHECK(as_set(enumerate_maximal_members(host, f)) ==
                  as_set(oracle::maximal_members_bruteforce(host, f)));
        }
}

TEST_CASE("hereditary closure and maximality of enumerated members") {
    auto host = wheel_graph(5);
    for (auto f : {FamilySpec::matchings(), FamilySpec::forests(), FamilySpec::degenerate(1)}) {
        auto members = enumerate_maximal_members(host, f);
        std::mt19937_64 rng(5);
        for (const auto& m : members) {
            // random subsets stay inside the family
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Edge> sub;
                for (Edge e : m.edges)
                    if (rng() & 1) sub.push_back(e);
                CHECK(family_contains(f, spanned_subgraph(host.n, sub)));
            }
            // no host edge extends the member
            std::set<Edge> in(m.edges.begin(), m.edges.end());
            for (Edge e : edge_list(host)) {
                if (in.count(e)) continue;
                auto ext = m.edges;
                ext.push_back(e);
                CHECK_FALSE(family_contains(f, spanned_subgraph(host.n, ext)));
            }
            // cap soundness
            if (auto cap = f.chromatic_cap())
                CHECK(chromatic_number(spanned_subgraph(host.n, m.edges)) <= *cap);
        }
    }
}

TEST_CASE("all-member enumeration matches the subset scan") {
    auto host = book_graph(3);
    for (auto f : {FamilySpec::matchings(), FamilySpec::single_edge(), FamilySpec::forests()}) {
        std::vector<std::vector<Edge>> got;
        for_each_member(host, f, [&](const std::vector<Edge>& s) {
            got.push_back(s);
            return true;
        });
        CHECK(as_set(got) == as_set(oracle::members_bruteforce(host, f)));
    }
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_maximal_members(complete_graph(8), FamilySpec::forests(), 500),
                    BudgetExceeded);
}
