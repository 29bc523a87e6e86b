#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ardeck/deck.hpp"
#include "oracles.hpp"

using namespace ardeck;

namespace {

// Deck classes straight from the 2^m subset scan, deduplicated by isomorphism.
std::vector<SimpleGraph> deck_classes_bruteforce(const SimpleGraph& g, const FamilySpec& f) {
    std::vector<SimpleGraph> classes;
    for (const auto& del : oracle::members_bruteforce(g, f)) {
        SimpleGraph h = delete_edges(g, del);
        bool fresh = true;
        for (const auto& c : classes)
            if (is_isomorphic(c, h)) fresh = false;
        if (fresh) classes.push_back(h);
    }
    return classes;
}

}  // namespace

TEST_CASE("deck of K4 under matchings") {
    auto d = deck(complete_graph(4), FamilySpec::matchings(), true);
    CHECK(d.members.size() == 2);
    bool saw_c4 = false, saw_k4e = false;
    for (const auto& h : d.members) {
        if (is_isomorphic(h, cycle_graph(4))) saw_c4 = true;
        if (h.edge_count() == 5) saw_k4e = true;
    }
    CHECK(saw_c4);
    CHECK(saw_k4e);
    // against the full subset-scan oracle
    CHECK(deck_classes_bruteforce(complete_graph(4), FamilySpec::matchings()).size() == 2);
}

TEST_CASE("deck of books under matchings has three classes") {
    for (int t = 3; t <= 5; ++t) {
        auto d = deck(book_graph(t), FamilySpec::matchings(), true);
        CHECK(d.members.size() == 3);
        int k2t_hits = 0;
        for (const auto& h : d.members)
            if (is_isomorphic(h, complete_multipartite({2, t}))) ++k2t_hits;
        CHECK(k2t_hits == 1);
    }
}

TEST_CASE("deck contains the edgeless graph when the host is a member") {
    auto g = matching_graph(2);  // 2K2 is a matching
    auto d = deck(g, FamilySpec::matchings(), true);
    bool has_edgeless = false;
    for (const auto& h : d.members)
        if (h.edge_count() == 0 && h.n == g.n) has_edgeless = true;
    CHECK(has_edgeless);

    // edgeless host: the deck is the host itself
    auto e = deck(SimpleGraph(3), FamilySpec::forests(), true);
    REQUIRE(e.members.size() == 1);
    CHECK(e.members[0].edge_count() == 0);
}

TEST_CASE("deck classes match the subset scan on small hosts") {
    std::vector<SimpleGraph> hosts = {wheel_graph(4), book_graph(3),
                                      oracle::random_graph(5, 0.5, 3)};
    for (const auto& host : hosts)
        for (auto f : {FamilySpec::matchings(), FamilySpec::single_edge(), FamilySpec::forests()}) {
            auto d = deck(host, f, true);
            CHECK(d.members.size() == deck_classes_bruteforce(host, f).size());
        }
}

TEST_CASE("reduced chromatic examples from complete graphs and wheels") {
    auto r = reduced_chromatic(complete_graph(6), FamilySpec::matchings(), ChiMode::exact);
    CHECK(r.value == 3);
    CHECK(r.exact);
    CHECK(r.witness.edges.size() == 3);  // a perfect matching
    CHECK(chromatic_number(delete_edges(complete_graph(6), r.witness.edges)) == 3);

    CHECK(reduced_chromatic(complete_graph(4), FamilySpec::matchings(), ChiMode::exact).value == 2);
    CHECK(reduced_chromatic(wheel_graph(5), FamilySpec::matchings(), ChiMode::exact).value == 3);
}

TEST_CASE("reduced chromatic bounded mode on K8 planar") {
    auto r = reduced_chromatic(complete_graph(8), FamilySpec::planar(), ChiMode::bounded);
    CHECK(r.lo == 2);
    CHECK(r.hi == 2);
    CHECK(r.exact);
    CHECK(r.value == 2);
    // witness is the two-disjoint-K4 deletion; re-check it
    CHECK(chromatic_number(delete_edges(complete_graph(8), r.witness.edges)) == 2);
    CHECK(family_contains(FamilySpec::planar(),
                          spanned_subgraph(8, r.witness.edges)));
}

TEST_CASE("bounded mode needs a cap") {
    CHECK_THROWS_AS(
        reduced_chromatic(complete_graph(5), FamilySpec::triangle_free(), ChiMode::bounded),
        std::invalid_argument);
}

TEST_CASE("chi_F = 1 exactly when the host belongs to the family") {
    std::vector<SimpleGraph> hosts = {matching_graph(2), path_graph(4), cycle_graph(5),
                                      complete_graph(4), oracle::random_graph(5, 0.4, 17)};
    for (auto f : {FamilySpec::matchings(), FamilySpec::forests(), FamilySpec::k_colorable(2)})
        for (const auto& g : hosts) {
            auto r = reduced_chromatic(g, f, ChiMode::exact);
            CHECK((*r.value == 1) == family_contains(f, g));
        }
}

TEST_CASE("chi_F is monotone along nested families") {
    // SingleEdge within Matchings within LinearForests within Forests
    std::vector<FamilySpec> chain = {FamilySpec::single_edge(), FamilySpec::matchings(),
                                     FamilySpec::linear_forests(), FamilySpec::forests()};
    std::vector<SimpleGraph> hosts = {complete_graph(5), wheel_graph(4),
                                      oracle::random_graph(6, 0.6, 23)};
    for (const auto& g : hosts) {
        int prev = 1 << 20;
        for (const auto& f : chain) {
            int v = *reduced_chromatic(g, f, ChiMode::exact).value;
            CHECK(v <= prev);
            prev = v;
        }
    }
}

TEST_CASE("submultiplicative lower bound holds for exact values") {
    std::vector<FamilySpec> families = {FamilySpec::matchings(), FamilySpec::forests(),
                                        FamilySpec::k_colorable(2), FamilySpec::max_degree(1)};
    std::vector<SimpleGraph> hosts = {complete_graph(6), wheel_graph(5),
                                      oracle::random_graph(6, 0.7, 29)};
    for (const auto& f : families)
        for (const auto& g : hosts) {
            auto r = reduced_chromatic(g, f, ChiMode::exact);
            int cap = *f.chromatic_cap();
            int chi = chromatic_number(g);
            CHECK(*r.value >= (chi + cap - 1) / cap);
        }
}

TEST_CASE("max-degree reduced chromatic equals the defective chromatic number") {
    for (int t : {1, 2})
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto g = oracle::random_graph(6, 0.55, 100 + seed);
            auto r = reduced_chromatic(g, FamilySpec::max_degree(t), ChiMode::exact);
            CHECK(*r.value == oracle::defective_chromatic_bruteforce(g, t));
        }
    CHECK(*reduced_chromatic(complete_graph(7), FamilySpec::max_degree(1), ChiMode::exact).value ==
          oracle::defective_chromatic_bruteforce(complete_graph(7), 1));
}

TEST_CASE("k-colorable reduced chromatic of complete graphs") {
    for (int k : {2, 3})
        for (int p = 2; p <= 8; ++p) {
            auto r = reduced_chromatic(complete_graph(p), FamilySpec::k_colorable(k),
                                       ChiMode::exact);
            CHECK(*r.value == (p + k - 1) / k);
        }
}

TEST_CASE("stability reports") {
    // Petersen is NOT stable under matchings: five maximal 3-edge matchings
    // bipartize it (e.g. {01, 79, 38}), dropping chi from 3 to 2.  Checked
    // against the full 2^15 subset scan in the companion test below.
    auto pet = is_stable(petersen_graph(), FamilySpec::matchings());
    CHECK_FALSE(pet.stable);
    CHECK(pet.chi == 3);
    CHECK(pet.chi_f == 2);
    REQUIRE(pet.critical_witness);
    CHECK(chromatic_number(delete_edges(petersen_graph(), pet.critical_witness->edges)) == 2);

    auto k4e = is_stable(complete_graph(4), FamilySpec::single_edge());
    CHECK_FALSE(k4e.stable);
    CHECK(k4e.chi == 4);
    CHECK(k4e.chi_f == 3);
    REQUIRE(k4e.critical_witness);
    CHECK(chromatic_number(delete_edges(complete_graph(4), k4e.critical_witness->edges)) < 4);

    auto c5 = is_stable(cycle_graph(5), FamilySpec::single_edge());
    CHECK_FALSE(c5.stable);
    CHECK(c5.chi == 3);
    CHECK(c5.chi_f == 2);

    auto k4m = is_stable(complete_graph(4), FamilySpec::matchings());
    CHECK_FALSE(k4m.stable);
    CHECK(k4m.chi_f == 2);
}

TEST_CASE("exactly five maximal matchings of Petersen bipartize it") {
    auto pet = petersen_graph();
    auto members = enumerate_maximal_members(pet, FamilySpec::matchings());
    CHECK(members.size() > 6);
    int bipartizing = 0;
    for (const auto& m : members)
        if (is_bipartite(delete_edges(pet, m.edges))) ++bipartizing;
    CHECK(bipartizing == 5);
    // every PERFECT matching still leaves two 5-cycles
    for (const auto& m : members)
        if (m.edges.size() == 5) CHECK_FALSE(is_bipartite(delete_edges(pet, m.edges)));
    // independent confirmation over every matching, maximal or not
    int scan_hits = 0;
    for (const auto& s : oracle::members_bruteforce(pet, FamilySpec::matchings()))
        if (is_bipartite(delete_edges(pet, s))) ++scan_hits;
    CHECK(scan_hits == 5);
}

TEST_CASE("minimum decomposition sizes") {
    CHECK(min_decomposition_size(complete_graph(4), FamilySpec::matchings()) == 3);
    CHECK(min_decomposition_size(complete_graph(4), FamilySpec::forests()) == 2);
    CHECK(min_decomposition_size(complete_graph(5), FamilySpec::matchings()) == 5);
    CHECK(min_decomposition_size(complete_graph(6), FamilySpec::matchings()) == 5);
    CHECK(min_decomposition_size(petersen_graph(), FamilySpec::forests()) == 2);

    auto g7 = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(g7.edge_count() == 7);
    CHECK(min_decomposition_size(g7, FamilySpec::at_most_edges(2)) == 4);
    CHECK(min_decomposition_size(g7, FamilySpec::single_edge()) == 7);

    CHECK_THROWS_AS(min_decomposition_size(complete_graph(4), FamilySpec::planar()),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_decomposition_size(complete_graph(4), FamilySpec::degenerate(1)),
                    std::invalid_argument);
}

TEST_CASE("reduced chromatic JSON schema") {
    auto r = reduced_chromatic(complete_graph(4), FamilySpec::matchings(), ChiMode::exact);
    auto j = reduced_chromatic_to_json(r);
    CHECK(j.find("\"value\":2") != std::string::npos);
    CHECK(j.find("\"exact\":true") != std::string::npos);
    CHECK(j.find("\"witness_edges\"") != std::string::npos);
}
