#ifndef ARDECK_EXTREMAL_HPP
#define ARDECK_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ardeck/coloring.hpp"
#include "ardeck/deck.hpp"
#include "ardeck/family.hpp"
#include "ardeck/graph.hpp"

namespace ardeck {

// Subgraph containment (not induced); isolated vertices of the pattern are
// ignored.
bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);

struct TuranResult {
    enum class Method { formula, search, bound };
    int n = 0;
    int value = 0;
    SimpleGraph extremal_graph;
    bool exact = false;
    Method method = Method::formula;
};

// ex(n, K_r) via the balanced complete (r-1)-partite construction.
TuranResult turan_number(int n, int r);

// Finite Kovari-Sos-Turan bound on ex(n, K_{a,b}) for 2 <= a <= b:
//   (1/2) * ((b-1)^(1/a) * (n-a+1) * n^(1-1/a) + (a-1) * n)
double kst_bound(int n, int a, int b);

// Maximum edges of an n-vertex graph containing none of the forbidden graphs
// as a subgraph, by edge-by-edge search with monotone pruning.  The forbidden
// list is pre-reduced to its subgraph-minimal elements.  On budget exhaustion
// the best graph found so far comes back with exact=false, method=bound.
TuranResult ex_exact_small(int n, std::vector<SimpleGraph> forbidden,
                           std::uint64_t node_budget = 4'000'000'000ULL,
                           int max_n = 10);

// Witness that a copy of g sits in the colored host with every color class
// inside the copy inducing a family member.
struct EmbeddingCertificate {
    std::vector<int> map;  // g vertex -> host vertex, injective
    std::vector<std::pair<int, std::vector<Edge>>> classes;  // color -> g-edges
};

// Complete search over injections of g into the colored complete host; for
// hereditary families partial color classes prune the search.  Budget
// exhaustion throws (distinct from a verified "none").
std::optional<EmbeddingCertificate> find_family_colored_copy(
    const EdgeColoring& psi, const SimpleGraph& g, const FamilySpec& f,
    std::uint64_t node_budget = 2'000'000'000ULL);

// Re-checks a certificate independently of any search state.
bool verify_embedding_certificate(const EdgeColoring& psi, const SimpleGraph& g,
                                  const FamilySpec& f, const EmbeddingCertificate& cert);

// Deck-extremal lower-bound coloring: a deck-extremal graph colored rainbow
// plus one fresh color on the remaining edges of K_n.  The result is
// certified avoiding before being returned, which witnesses
// f(n, G | F) >= ex(n, deck) + 2.
struct LowerBoundColoring {
    EdgeColoring coloring;
    int colors = 0;                       // = deck_extremal.value + 1
    TuranResult deck_extremal;
    std::vector<SimpleGraph> reduced_deck;  // subgraph-minimal deck members
};

LowerBoundColoring lb_coloring(int n, const SimpleGraph& g, const FamilySpec& f,
                               std::uint64_t budget = default_enumeration_budget);

// Exact forcing number at tiny n: the least k such that every edge coloring
// of K_n with at least k colors yields a family-colored copy of g.  Colors
// are unlabeled, so the solver enumerates set partitions of E(K_n).
// n <= 5 scans every partition; n = 6 dedupes by canonical representatives
// under the symmetry of the first five vertices.
struct ForcingResult {
    int n = 0;
    int value = 0;
    std::optional<EdgeColoring> extremal_avoider;  // value-1 colors, no copy
    std::string attestation;  // "exhaustive" | "symmetry-pruned"
};

ForcingResult f_exact_tiny(int n, const SimpleGraph& g, const FamilySpec& f, int jobs = 1);

// {"n":..,"f":..,"avoider_colors":..,"avoider_file":...,"attestation":...}
std::string forcing_to_json(const ForcingResult& r, const std::string& avoider_file);

// Asymptotic classification by the reduced chromatic number:
//   case 1: chi_F >= 3, leading term ex(n, K_{chi_F}) with Turan coefficient
//   case 2: chi_F == 2, o(n^2)
//   case 3: chi_F == 1 (g in the family), forcing number 1
struct Classification {
    ReducedChromaticResult chi_f;
    int chi = 0;
    int case_id = 0;  // 0 when the bounded mode cannot separate the cases
    std::optional<bool> stable;  // unset when the bounds leave it open
    std::string leading_term;
    std::optional<double> turan_coefficient;  // (m-2)/(2m-2) in case 1
    std::optional<LowerBoundColoring> concrete;  // when a host order is given
};

Classification classify(const SimpleGraph& g, const FamilySpec& f,
                        ChiMode mode = ChiMode::exact,
                        std::optional<int> concrete_n = std::nullopt);

std::string classification_to_json(const Classification& c);

}  // namespace ardeck

#endif
