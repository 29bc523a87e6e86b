#ifndef ARDECK_DECK_HPP
#define ARDECK_DECK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ardeck/family.hpp"
#include "ardeck/graph.hpp"

namespace ardeck {

// The family deck of a host graph: every G - D where D ranges over the
// nonempty members of the family inside G.  Members keep the host's vertex
// set, so isolated vertices survive deletion.
struct Deck {
    SimpleGraph host;
    FamilySpec family;
    std::vector<SimpleGraph> members;
    bool deduped = false;
};

Deck deck(const SimpleGraph& g, const FamilySpec& f, bool dedupe,
          std::uint64_t budget = default_enumeration_budget);

enum class ChiMode { exact, bounded };

// Minimum chromatic number over the deck.  Exact mode minimizes over the
// maximal members only (valid: deleting more edges never raises chi) and
// carries an achieving witness.  Bounded mode sandwiches the value between
// the submultiplicative lower bound and the best candidate deletion found.
struct ReducedChromaticResult {
    std::optional<int> value;
    int lo = 0;
    int hi = 0;
    bool exact = false;
    MaximalMember witness;  // deletion achieving hi (or value)
};

ReducedChromaticResult reduced_chromatic(const SimpleGraph& g, const FamilySpec& f,
                                         ChiMode mode,
                                         std::uint64_t budget = default_enumeration_budget);

// JSON schema:
// {"value":int|null,"lo":int,"hi":int,"exact":bool,"witness_edges":[[u,v],...]}
std::string reduced_chromatic_to_json(const ReducedChromaticResult& r);

struct StabilityReport {
    bool stable = false;
    int chi = 0;
    int chi_f = 0;
    std::optional<MaximalMember> critical_witness;  // chi(G - D) < chi(G)
};

StabilityReport is_stable(const SimpleGraph& g, const FamilySpec& f,
                          std::uint64_t budget = default_enumeration_budget);

// Minimum number of family members in an edge decomposition of g.
// Supported kinds: single edge (|E|), at-most-k-edges (ceil(|E|/k)),
// matchings (chromatic index), forests (Nash-Williams arboricity).
int min_decomposition_size(const SimpleGraph& g, const FamilySpec& f);

}  // namespace ardeck

#endif
