#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ardeck/extremal.hpp"
#include "oracles.hpp"

using namespace ardeck;

TEST_CASE("subgraph containment") {
    CHECK(contains_subgraph(complete_graph(5), cycle_graph(5)));
    CHECK(contains_subgraph(petersen_graph(), cycle_graph(5)));
    CHECK_FALSE(contains_subgraph(petersen_graph(), complete_graph(3)));
    CHECK(contains_subgraph(wheel_graph(5), complete_graph(3)));
    CHECK_FALSE(contains_subgraph(cycle_graph(6), cycle_graph(5)));
    CHECK(contains_subgraph(complete_multipartite({2, 2}), cycle_graph(4)));
    // isolated pattern vertices are ignored
    SimpleGraph e_plus_isolated(5);
    e_plus_isolated.add_edge_unchecked(0, 1);
    CHECK(contains_subgraph(complete_graph(2), e_plus_isolated));
    // disconnected pattern
    CHECK(contains_subgraph(matching_graph(3), matching_graph(2)));
    CHECK_FALSE(contains_subgraph(matching_graph(2), matching_graph(3)));
}

TEST_CASE("turan numbers by formula") {
    auto t = turan_number(10, 3);
    CHECK(t.value == 25);
    CHECK(is_isomorphic(t.extremal_graph, complete_multipartite({5, 5})));
    CHECK(turan_number(7, 2).value == 0);
    CHECK(turan_number(7, 4).value == 16);
    CHECK_FALSE(contains_clique(turan_number(7, 4).extremal_graph, 4));
}

TEST_CASE("kst bound") {
    CHECK(kst_bound(100, 2, 2) == doctest::Approx(545.0));
    // monotone in n and b
    for (int n = 10; n < 40; n += 5) CHECK(kst_bound(n, 2, 2) <= kst_bound(n + 1, 2, 2));
    for (int b = 2; b < 6; ++b) CHECK(kst_bound(30, 2, b) <= kst_bound(30, 2, b + 1));
    CHECK_THROWS_AS(kst_bound(10, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(kst_bound(10, 3, 2), std::invalid_argument);
}

TEST_CASE("exact extremal search at small n") {
    CHECK(ex_exact_small(4, {cycle_graph(4)}).value == 4);
    CHECK(ex_exact_small(6, {cycle_graph(4)}).value == 7);
    CHECK(ex_exact_small(5, {matching_graph(1)}).value == 0);
    CHECK(ex_exact_small(5, {path_graph(3)}).value == 2);  // matchings only

    for (int n = 2; n <= 6; ++n)
        for (int r : {3, 4}) {
            auto s = ex_exact_small(n, {complete_graph(r)});
            CHECK(s.exact);
            CHECK(s.value == turan_number(n, r).value);
        }

    // the forbidden list is reduced to minimal elements: K4-e contains C4
    auto both = ex_exact_small(6, {book_graph(2), cycle_graph(4)});
    CHECK(both.value == ex_exact_small(6, {cycle_graph(4)}).value);

    CHECK_THROWS_AS(ex_exact_small(6, {}), std::invalid_argument);
    CHECK_THROWS_AS(ex_exact_small(6, {SimpleGraph(3)}), std::invalid_argument);
    CHECK_THROWS_AS(ex_exact_small(12, {cycle_graph(4)}), std::invalid_argument);
}

TEST_CASE("extremal search budget returns a bound") {
    auto t = ex_exact_small(8, {cycle_graph(4)}, /*node_budget=*/50);
    CHECK_FALSE(t.exact);
    CHECK(t.method == TuranResult::Method::bound);
    CHECK(t.value >= 1);  // greedy seeding already found something
}

TEST_CASE("family-colored copy search, small examples") {
    // monochromatic K5 never contains a matching-colored triangle
    EdgeColoring mono = EdgeColoring::from_colors(5, std::vector<int>(10, 0));
    CHECK_FALSE(find_family_colored_copy(mono, complete_graph(3), FamilySpec::matchings()));
    // the one class is the whole triangle: cyclic, but 2-degenerate
    CHECK_FALSE(find_family_colored_copy(mono, complete_graph(3), FamilySpec::forests()));
    CHECK(find_family_colored_copy(mono, complete_graph(3), FamilySpec::degenerate(2)));

    // rainbow K5 contains a rainbow triangle
    std::vector<int> rb(10);
    for (int i = 0; i < 10; ++i) rb[i] = i;
    EdgeColoring rainbow = EdgeColoring::from_colors(5, rb);
    auto cert = find_family_colored_copy(rainbow, complete_graph(3), FamilySpec::single_edge());
    REQUIRE(cert);
    CHECK(verify_embedding_certificate(rainbow, complete_graph(3), FamilySpec::single_edge(),
                                       *cert));

    // properly 3-edge-colored K4: classes are perfect matchings
    std::vector<int> proper(6);
    auto set = [&](int u, int v, int c) { proper[EdgeColoring::edge_index(u, v)] = c; };
    set(0, 1, 0); set(2, 3, 0);
    set(0, 2, 1); set(1, 3, 1);
    set(0, 3, 2); set(1, 2, 2);
    EdgeColoring k4proper = EdgeColoring::from_colors(4, proper);
    auto cert2 = find_family_colored_copy(k4proper, complete_graph(4), FamilySpec::matchings());
    REQUIRE(cert2);
    CHECK(cert2->classes.size() == 3);
    for (const auto& [c, edges] : cert2->classes) CHECK(edges.size() == 2);
    CHECK(verify_embedding_certificate(k4proper, complete_graph(4), FamilySpec::matchings(),
                                       *cert2));

    // tampered certificates fail verification
    auto bad = *cert2;
    bad.map[0] = bad.map[1];
    CHECK_FALSE(verify_embedding_certificate(k4proper, complete_graph(4),
                                             FamilySpec::matchings(), bad));
    auto bad2 = *cert2;
    bad2.classes.pop_back();
    CHECK_FALSE(verify_embedding_certificate(k4proper, complete_graph(4),
                                             FamilySpec::matchings(), bad2));
}

TEST_CASE("odd-graphs copies run in final-check mode") {
    // K4 colored with a perfect matching + the rest: classes must be odd graphs
    std::vector<int> colors(6, 0);
    colors[EdgeColoring::edge_index(0, 1)] = 1;
    colors[EdgeColoring::edge_index(2, 3)] = 1;
    EdgeColoring psi = EdgeColoring::from_colors(4, colors);
    // class 1 is a 2K2 (odd), class 0 is C4 (all degrees 2, not odd)
    CHECK_FALSE(find_family_colored_copy(psi, complete_graph(4), FamilySpec::odd_graphs()));
    // the triangle gets classes P3 (degrees 1,1,2) or K2 depending on placement;
    // a placement with classes {2 spokes of one color...}: check it agrees with
    // a direct scan over all injections
    bool found = find_family_colored_copy(psi, complete_graph(3), FamilySpec::odd_graphs())
                     .has_value();
    CHECK_FALSE(found);  // any triangle in K4 meets colors {0,0,1}: P3 class is even
}

TEST_CASE("lower-bound colorings") {
    auto lb = lb_coloring(5, complete_graph(3), FamilySpec::single_edge());
    CHECK(lb.deck_extremal.value == 2);
    CHECK(lb.colors == 3);
    CHECK_FALSE(find_family_colored_copy(lb.coloring, complete_graph(3),
                                         FamilySpec::single_edge()));

    // deck of K4 under matchings reduces to {C4}; ex(6,{C4}) = 7
    auto lb2 = lb_coloring(6, complete_graph(4), FamilySpec::matchings());
    CHECK(lb2.deck_extremal.value == 7);
    CHECK(lb2.colors == 8);

    // at n = 8 the same deck gives ex(8,{C4}) = 11, so 12 colors avoid
    auto lb3 = lb_coloring(8, complete_graph(4), FamilySpec::matchings());
    CHECK(lb3.colors == 12);
    CHECK(lb3.reduced_deck.size() == 2);  // C4 and K4-e, minimal element C4

    CHECK_THROWS_AS(lb_coloring(6, matching_graph(2), FamilySpec::matchings()),
                    std::invalid_argument);
    CHECK_THROWS_AS(lb_coloring(2, complete_graph(3), FamilySpec::matchings()),
                    std::invalid_argument);
}

TEST_CASE("forcing numbers at tiny n against the brute-force oracle") {
    struct Case {
        int n;
        SimpleGraph g;
        FamilySpec f;
    };
    std::vector<Case> cases = {
        {3, complete_graph(3), FamilySpec::single_edge()},
        {4, complete_graph(3), FamilySpec::single_edge()},
        {4, complete_graph(3), FamilySpec::matchings()},
        {4, complete_graph(4), FamilySpec::matchings()},
        {4, path_graph(3), FamilySpec::single_edge()},
        {4, cycle_graph(4), FamilySpec::matchings()},
        {4, book_graph(2), FamilySpec::matchings()},
    };
    for (auto& c : cases) {
        auto r = f_exact_tiny(c.n, c.g, c.f);
        CHECK(r.value == oracle::f_exact_bruteforce(c.n, c.g, c.f));
        CHECK(r.attestation == "exhaustive");
        if (r.value > 1) {
            REQUIRE(r.extremal_avoider);
            CHECK(r.extremal_avoider->k == r.value - 1);
            CHECK_FALSE(find_family_colored_copy(*r.extremal_avoider, c.g, c.f));
        }
    }
}

TEST_CASE("forcing number is 1 exactly on family members") {
    auto r = f_exact_tiny(4, matching_graph(2), FamilySpec::matchings());
    CHECK(r.value == 1);
    CHECK_FALSE(r.extremal_avoider);
    CHECK(f_exact_tiny(5, path_graph(4), FamilySpec::forests()).value == 1);
}

TEST_CASE("forcing number preconditions") {
    CHECK_THROWS_AS(f_exact_tiny(7, complete_graph(3), FamilySpec::matchings()),
                    std::invalid_argument);
    CHECK_THROWS_AS(f_exact_tiny(3, complete_graph(4), FamilySpec::matchings()),
                    std::invalid_argument);
    CHECK_THROWS_AS(f_exact_tiny(4, complete_graph(3), FamilySpec::odd_graphs()),
                    std::invalid_argument);
}

TEST_CASE("forcing monotone in the family") {
    // every single-edge class is a matching, so forcing can only get easier
    for (int n = 3; n <= 4; ++n) {
        int fe = f_exact_tiny(n, complete_graph(3), FamilySpec::single_edge()).value;
        int fm = f_exact_tiny(n, complete_graph(3), FamilySpec::matchings()).value;
        CHECK(fm <= fe);
        int ff = f_exact_tiny(n, complete_graph(3), FamilySpec::forests()).value;
        CHECK(ff <= fm);
    }
}

TEST_CASE("forcing beats the deck lower bound") {
    // f(n, G | F) >= ex(n, deck) + 2 on every tractable case
    struct Case {
        int n;
        SimpleGraph g;
        FamilySpec f;
    };
    std::vector<Case> cases = {
        {4, complete_graph(3), FamilySpec::matchings()},
        {4, complete_graph(4), FamilySpec::matchings()},
        {4, complete_graph(3), FamilySpec::single_edge()},
        {5, complete_graph(4), FamilySpec::single_edge()},
    };
    for (auto& c : cases) {
        auto lb = lb_coloring(c.n, c.g, c.f);
        auto fr = f_exact_tiny(c.n, c.g, c.f);
        CHECK(fr.value >= lb.colors + 1);
    }
}

TEST_CASE("paper-anchored forcing values at n = 5") {
    auto k3 = f_exact_tiny(5, complete_graph(3), FamilySpec::matchings());
    CHECK(k3.value == 5);
    auto k4e = f_exact_tiny(5, book_graph(2), FamilySpec::matchings());
    CHECK(k4e.value == 7);
}

TEST_CASE("forcing at n = 6 in symmetry-pruned mode") {
    auto r = f_exact_tiny(6, complete_graph(3), FamilySpec::matchings(), 2);
    CHECK(r.value == 6);  // extends the n = 5 anchor: one color per host order
    CHECK(r.attestation == "symmetry-pruned");
    REQUIRE(r.extremal_avoider);
    CHECK(r.extremal_avoider->k == 5);
    CHECK_FALSE(find_family_colored_copy(*r.extremal_avoider, complete_graph(3),
                                         FamilySpec::matchings()));
}

TEST_CASE("forcing solver is deterministic across jobs") {
    auto a = f_exact_tiny(5, complete_graph(3), FamilySpec::matchings(), 1);
    auto b = f_exact_tiny(5, complete_graph(3), FamilySpec::matchings(), 3);
    CHECK(a.value == b.value);
    REQUIRE(a.extremal_avoider);
    REQUIRE(b.extremal_avoider);
    CHECK(a.extremal_avoider->color == b.extremal_avoider->color);
}

TEST_CASE("forcing JSON") {
    auto r = f_exact_tiny(4, complete_graph(3), FamilySpec::matchings());
    auto j = forcing_to_json(r, "avoider.txt");
    CHECK(j.find("\"n\":4") != std::string::npos);
    CHECK(j.find("\"attestation\":\"exhaustive\"") != std::string::npos);
    CHECK(j.find("\"avoider_file\":\"avoider.txt\"") != std::string::npos);
}

TEST_CASE("classification") {
    auto c6 = classify(complete_graph(6), FamilySpec::matchings());
    CHECK(c6.case_id == 1);
    CHECK(c6.chi_f.value == 3);
    CHECK(c6.turan_coefficient == doctest::Approx(0.25));
    CHECK(c6.stable.has_value());
    CHECK_FALSE(*c6.stable);

    auto c4 = classify(complete_graph(4), FamilySpec::matchings());
    CHECK(c4.case_id == 2);
    CHECK(c4.leading_term == "o(n^2)");

    auto m3 = classify(matching_graph(3), FamilySpec::matchings());
    CHECK(m3.case_id == 3);

    // concrete pipeline at a chosen host order
    auto with_n = classify(complete_graph(3), FamilySpec::single_edge(), ChiMode::exact, 5);
    REQUIRE(with_n.concrete);
    CHECK(with_n.concrete->colors == 3);

    auto json = classification_to_json(c6);
    CHECK(json.find("\"case\":1") != std::string::npos);
}

TEST_CASE("coloring round trip and validation") {
    auto lb = lb_coloring(5, complete_graph(3), FamilySpec::matchings());
    std::ostringstream os;
    write_coloring(os, lb.coloring);
    std::istringstream is(os.str());
    auto back = read_coloring(is);
    CHECK(back.n == lb.coloring.n);
    CHECK(back.k == lb.coloring.k);
    CHECK(back.color == lb.coloring.color);

    CHECK_THROWS_AS(EdgeColoring::from_colors(3, {0, 2, 2}), std::invalid_argument);
    CHECK(EdgeColoring::normalized(3, {5, 9, 5}).k == 2);
}
