#ifndef ARDECK_TRANSVERSAL_HPP
#define ARDECK_TRANSVERSAL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ardeck/coloring.hpp"
#include "ardeck/common.hpp"

namespace ardeck {

// Balanced multipartite digraph: m parts of s vertices each, vertex x lives
// in part x / s.  Arcs join distinct parts only; the builder drops intra-part
// arcs and reports how many it dropped.
struct PartedDigraph {
    int m = 0;
    int s = 0;
    std::vector<Bits> out;
    std::vector<Bits> in;
    int max_out_degree = 0;

    int order() const { return m * s; }
    int part_of(int v) const { return v / s; }
    bool has_arc(int u, int v) const { return out[u].test(v); }
    std::vector<std::pair<int, int>> arcs() const;

    static PartedDigraph build(int m, int s, const std::vector<std::pair<int, int>>& arcs,
                               int* dropped_intra_part = nullptr);
};

// One chosen vertex per part (or `fold` of them); no arc joins two chosen
// vertices in either direction.
struct Transversal {
    int fold = 1;
    std::vector<std::vector<int>> chosen;  // chosen[i] sorted, size == fold
};

bool independent(const PartedDigraph& d, const Transversal& t);

// Complete backtracking search with pruning; a chosen vertex eliminates its
// in/out neighbors from later parts.  Throws BudgetExceeded past the node
// budget; rejects instances where the s^m space is hopeless.
std::optional<Transversal> find_transversal_exact(const PartedDigraph& d, int fold = 1,
                                                  std::uint64_t node_budget = 200'000'000);

// Per-step accounting of the derandomized counting argument.  `destroyed[t]`
// is the scaled mass of completions destroyed after choosing part t; staying
// below `threshold` (= s^2 in scaled units) certifies that completions
// survive.
struct ItlStats {
    std::vector<unsigned long long> destroyed;
    unsigned long long threshold = 0;
};

// Independent transversal by conditional-expectation derandomization.
// Requires s > m * max_out_degree.
Transversal itl_transversal(const PartedDigraph& d, ItlStats* stats = nullptr);

// Fold-r independent transversal: extract s - m*D disjoint transversals,
// build the conflict graph between them, take a greedy low-degree
// independent set, and union r of its transversals.
// Requires s >= (2r + m) * max_out_degree + r.
Transversal itl_multifold(const PartedDigraph& d, int r);

// Blocks X_1..X_m (one p-subset per input class) whose interior colors do not
// appear on any edge of the multipartite graph spanned by the output.
struct RainbowCutResult {
    std::vector<std::vector<int>> classes;
    int p = 0;
};

// classes: m disjoint equal-size vertex classes covering the host; their
// spanned multipartite graph must be rainbow under psi.  Each class size q
// must factor as q = s*p with s > 2m*C(p,2); q = m*p^3 is the guaranteed
// choice.  The result invariant is re-verified before returning.
RainbowCutResult rainbow_cut(const EdgeColoring& psi,
                             const std::vector<std::vector<int>>& classes, int p);

enum class SmdVariant { basic, small_m, divisible };

SmdVariant parse_smd_variant(const std::string& text);
std::string smd_variant_name(SmdVariant v);

// A digraph with out-degree <= d and part size claimed_s admitting no
// independent transversal, witnessing s(m,d) > claimed_s.
struct SmdRecord {
    int m = 0;
    int d = 0;
    SmdVariant variant = SmdVariant::basic;
    PartedDigraph digraph;
    int claimed_s = 0;
    bool verified_no_transversal = false;
    bool verification_skipped = false;  // search budget ran out
};

// basic:     m >= 3, d >= 1, s = (m-1)d
// small_m:   3 <= m <= d,    s = (m-1)(d+1)
// divisible: m >= 2, (m-1) | d, s = md
SmdRecord smd_construct(int m, int d, SmdVariant variant,
                        std::uint64_t verify_budget = 200'000'000);

struct ForbiddenSubstructureReport {
    bool has_c2 = false;          // oppositely oriented arc pair
    bool has_cross4_2k2 = false;  // two disjoint arcs meeting 4 parts
    bool has_cross3_p3 = false;   // two adjacent arcs meeting 3 parts
};

ForbiddenSubstructureReport scan_forbidden_substructures(const PartedDigraph& d);

// Exhaustive certificate that every 3-part digraph with part size 3 and
// out-degree <= 1 has an independent transversal (part-symmetry reduced).
struct D1ScanResult {
    bool all_have_transversal = false;
    std::uint64_t instances = 0;
};

D1ScanResult scan_d1_m3_exhaustive(int jobs = 1);

// Each vertex draws exactly `dplus` out-neighbors uniformly from the other
// parts, without replacement; reproducible from the seed.
PartedDigraph random_parted_digraph(int m, int s, int dplus, std::uint64_t seed);

// Text format: first line "m s a", then a lines "u v" (global indices).
void write_digraph(std::ostream& os, const PartedDigraph& d);
PartedDigraph read_digraph(std::istream& is);

// {"fold":r,"chosen":[[...part 0...],...]}
std::string transversal_to_json(const Transversal& t);

}  // namespace ardeck

#endif
