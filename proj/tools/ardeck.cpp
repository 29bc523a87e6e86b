// Command-line front end: every solver in the library behind one binary with
// file-based I/O and optional JSON output.
//
// Exit codes: 0 computed, 1 usage/input error, 2 verified absence
// ("none" / "no transversal"), 3 work budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ardeck/common.hpp"
#include "ardeck/deck.hpp"
#include "ardeck/extremal.hpp"
#include "ardeck/family.hpp"
#include "ardeck/graph.hpp"
#include "ardeck/transversal.hpp"

using namespace ardeck;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_absent = 2;
constexpr int exit_budget = 3;

bool g_json = false;

int fail_usage(const std::string& msg) {
    if (g_json)
        std::cerr << json{{"error", msg}}.dump() << '\n';
    else
        std::cerr << "error: " << msg << '\n';
    return exit_usage;
}

// Generator literal first, file path second.
SimpleGraph resolve_graph(const std::string& arg) {
    try {
        return parse_graph_literal(arg);
    } catch (const std::invalid_argument&) {
    }
    if (!std::filesystem::exists(arg))
        throw std::invalid_argument("graph argument '" + arg +
                                    "' is neither a generator literal nor an existing file");
    std::ifstream in(arg);
    return read_edge_list(in);
}

json graph_json(const SimpleGraph& g) {
    json edges = json::array();
    for (Edge e : edge_list(g)) edges.push_back({e.u, e.v});
    return json{{"n", g.n}, {"edges", edges}};
}

void emit(const json& j, const std::string& human) {
    if (g_json)
        std::cout << j.dump() << '\n';
    else
        std::cout << human;
}

struct TableRow {
    std::string family;
    std::string graph;
    int lo, hi;
    int expected;
    bool verified;  // exact value or matching bounds
};

std::vector<TableRow> build_tables() {
    std::vector<TableRow> rows;
    auto exact_row = [&](const FamilySpec& f, const std::string& gname, const SimpleGraph& g,
                         int expected) {
        auto r = reduced_chromatic(g, f, ChiMode::exact);
        rows.push_back({f.name(), gname, r.lo, r.hi, expected, r.exact});
    };
    auto bounded_row = [&](const FamilySpec& f, const std::string& gname, const SimpleGraph& g,
                           int expected) {
        auto r = reduced_chromatic(g, f, ChiMode::bounded);
        rows.push_back({f.name(), gname, r.lo, r.hi, expected, r.exact});
    };
    for (int p = 4; p <= 10; ++p)
        exact_row(FamilySpec::matchings(), "K" + std::to_string(p), complete_graph(p),
                  (p + 1) / 2);
    for (int k = 4; k <= 8; ++k)
        exact_row(FamilySpec::matchings(), "W" + std::to_string(k), wheel_graph(k), 3);
    for (int t = 3; t <= 5; ++t)
        exact_row(FamilySpec::matchings(), "B" + std::to_string(t), book_graph(t), 2);
    for (int p = 5; p <= 7; ++p)
        exact_row(FamilySpec::forests(), "K" + std::to_string(p), complete_graph(p),
                  (p + 1) / 2);
    for (int k : {2, 3})
        for (int p = 4; p <= 8; ++p)
            exact_row(FamilySpec::k_colorable(k), "K" + std::to_string(p), complete_graph(p),
                      (p + k - 1) / k);
    for (int p = 5; p <= 8; ++p)
        bounded_row(FamilySpec::degenerate(2), "K" + std::to_string(p), complete_graph(p),
                    (p + 2) / 3);
    for (int p = 8; p <= 12; ++p)
        bounded_row(FamilySpec::planar(), "K" + std::to_string(p), complete_graph(p),
                    (p + 3) / 4);
    for (int p = 6; p <= 9; ++p)
        bounded_row(FamilySpec::outerplanar(), "K" + std::to_string(p), complete_graph(p),
                    (p + 2) / 3);
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey decomposition toolkit"};
    app.require_subcommand(1);

    std::string graph_arg, family_arg, coloring_path, digraph_path, out_path, mode_arg,
        variant_arg;
    std::vector<std::string> forbid_args;
    int n = 0, p = 0, m = 0, dd = 0, r = 1, trials = 0, jobs = 1, turan_r = 3;
    std::uint64_t budget = default_enumeration_budget;
    std::optional<std::uint64_t> seed;
    bool no_dedupe = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", g_json, "emit JSON"); };

    auto* chi_f = app.add_subcommand("chi-f", "reduced chromatic number with witness");
    chi_f->add_option("--graph", graph_arg)->required();
    chi_f->add_option("--family", family_arg)->required();
    chi_f->add_option("--mode", mode_arg)->default_val("exact");
    chi_f->add_option("--budget", budget);
    add_json(chi_f);

    auto* deck_cmd = app.add_subcommand("deck", "family deck, optionally deduplicated");
    deck_cmd->add_option("--graph", graph_arg)->required();
    deck_cmd->add_option("--family", family_arg)->required();
    deck_cmd->add_flag("--no-dedupe", no_dedupe);
    deck_cmd->add_option("--budget", budget);
    add_json(deck_cmd);

    auto* stable_cmd = app.add_subcommand("stable", "stability and critical witnesses");
    stable_cmd->add_option("--graph", graph_arg)->required();
    stable_cmd->add_option("--family", family_arg)->required();
    add_json(stable_cmd);

    auto* decomp = app.add_subcommand("decomp-size", "minimum family decomposition size");
    decomp->add_option("--graph", graph_arg)->required();
    decomp->add_option("--family", family_arg)->required();
    add_json(decomp);

    auto* lb = app.add_subcommand("lb-coloring", "deck-extremal lower-bound coloring");
    lb->add_option("--n", n)->required();
    lb->add_option("--graph", graph_arg)->required();
    lb->add_option("--family", family_arg)->required();
    lb->add_option("--out", out_path)->required();
    add_json(lb);

    auto* check = app.add_subcommand("check-copy", "find a family-colored copy in a coloring");
    check->add_option("--coloring", coloring_path)->required()->check(CLI::ExistingFile);
    check->add_option("--graph", graph_arg)->required();
    check->add_option("--family", family_arg)->required();
    add_json(check);

    auto* fx = app.add_subcommand("f-exact", "exact forcing number at tiny n");
    fx->add_option("--n", n)->required();
    fx->add_option("--graph", graph_arg)->required();
    fx->add_option("--family", family_arg)->required();
    fx->add_option("--jobs", jobs);
    fx->add_option("--out", out_path, "write the extremal avoider coloring here");
    add_json(fx);

    auto* tv = app.add_subcommand("transversal", "independent transversals in parted digraphs");
    tv->add_option("--digraph", digraph_path)->check(CLI::ExistingFile);
    tv->add_option("--mode", mode_arg)->default_val("exact");
    tv->add_option("--r", r, "fold for multifold mode");
    tv->add_option("--m", m);
    tv->add_option("--s", n);
    tv->add_option("--d", dd);
    tv->add_option("--trials", trials, "random property trials (needs --seed)");
    tv->add_option("--seed", seed);
    tv->add_option("--budget", budget);
    add_json(tv);

    auto* rc = app.add_subcommand("rainbow-cut", "rainbow cut on a colored complete host");
    rc->add_option("--coloring", coloring_path)->check(CLI::ExistingFile);
    rc->add_option("--m", m)->required();
    rc->add_option("--p", p)->required();
    rc->add_option("--trials", trials, "adversarial property trials (needs --seed)");
    rc->add_option("--seed", seed);
    add_json(rc);

    auto* smd = app.add_subcommand("smd", "no-transversal constructions for s(m,d)");
    smd->add_option("--m", m)->required();
    smd->add_option("--d", dd)->required();
    smd->add_option("--variant", variant_arg)->required();
    smd->add_option("--out", out_path, "write the digraph here");
    smd->add_option("--budget", budget);
    add_json(smd);

    auto* tn = app.add_subcommand("turan", "Turan number by formula");
    tn->add_option("--n", n)->required();
    tn->add_option("--r", turan_r)->required();
    tn->add_option("--out", out_path, "write the extremal graph here");
    add_json(tn);

    auto* ex = app.add_subcommand("ex-small", "exact extremal numbers by search");
    ex->add_option("--n", n)->required();
    ex->add_option("--forbid", forbid_args, "forbidden graphs (literals or files)")->required();
    ex->add_option("--budget", budget);
    add_json(ex);

    auto* cl = app.add_subcommand("classify", "asymptotic classification of f(n, G | F)");
    cl->add_option("--graph", graph_arg)->required();
    cl->add_option("--family", family_arg)->required();
    cl->add_option("--mode", mode_arg)->default_val("exact");
    cl->add_option("--n", n, "also run the concrete lower-bound pipeline at this order");
    add_json(cl);

    auto* tb = app.add_subcommand("tables", "reduced chromatic number verification table");
    add_json(tb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;  // --help stays 0
    }

    try {
        if (*chi_f) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            ChiMode mode = mode_arg == "bounded" ? ChiMode::bounded : ChiMode::exact;
            auto res = reduced_chromatic(g, f, mode, budget);
            std::string human = res.exact
                ? "chi_F = " + std::to_string(*res.value) + "\n"
                : "chi_F in [" + std::to_string(res.lo) + ", " + std::to_string(res.hi) + "]\n";
            emit(json::parse(reduced_chromatic_to_json(res)), human);
            return exit_ok;
        }

        if (*deck_cmd) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            auto d = deck(g, f, !no_dedupe, budget);
            json members = json::array();
            std::string human = "deck members: " + std::to_string(d.members.size()) + "\n";
            for (const auto& h : d.members) {
                members.push_back(graph_json(h));
                human += "  " + std::to_string(h.edge_count()) + " edges\n";
            }
            emit(json{{"count", d.members.size()}, {"deduped", d.deduped}, {"members", members}},
                 human);
            return exit_ok;
        }

        if (*stable_cmd) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            auto rep = is_stable(g, f);
            json j{{"stable", rep.stable}, {"chi", rep.chi}, {"chi_f", rep.chi_f}};
            std::string human = std::string(rep.stable ? "stable" : "unstable") +
                                " (chi = " + std::to_string(rep.chi) +
                                ", chi_F = " + std::to_string(rep.chi_f) + ")\n";
            if (rep.critical_witness) {
                json w = json::array();
                for (Edge e : rep.critical_witness->edges) w.push_back({e.u, e.v});
                j["critical_witness"] = w;
            } else {
                j["critical_witness"] = nullptr;
            }
            emit(j, human);
            return exit_ok;
        }

        if (*decomp) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            int v = min_decomposition_size(g, f);
            emit(json{{"value", v}}, "F(G) = " + std::to_string(v) + "\n");
            return exit_ok;
        }

        if (*lb) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            auto res = lb_coloring(n, g, f, budget);
            std::ofstream out(out_path);
            write_coloring(out, res.coloring);
            json j{{"n", n},
                   {"colors", res.colors},
                   {"deck_extremal_edges", res.deck_extremal.value},
                   {"certified_f_at_least", res.colors + 1},
                   {"checker", "none-found"},
                   {"containment", "subgraph-ignoring-isolated-vertices"},
                   {"coloring_file", out_path}};
            emit(j, "colors = " + std::to_string(res.colors) + ", certifies f >= " +
                        std::to_string(res.colors + 1) + "; coloring written to " + out_path +
                        "\n");
            return exit_ok;
        }

        if (*check) {
            std::ifstream in(coloring_path);
            auto psi = read_coloring(in);
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            auto cert = find_family_colored_copy(psi, g, f);
            if (!cert) {
                emit(json{{"found", false}}, "none\n");
                return exit_absent;
            }
            json classes = json::array();
            for (const auto& [c, edges] : cert->classes) {
                json ce = json::array();
                for (Edge e : edges) ce.push_back({e.u, e.v});
                classes.push_back({{"color", c}, {"edges", ce}});
            }
            emit(json{{"found", true}, {"map", cert->map}, {"classes", classes}},
                 "copy found\n");
            return exit_ok;
        }

        if (*fx) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            auto res = f_exact_tiny(n, g, f, jobs);
            if (!out_path.empty() && res.extremal_avoider) {
                std::ofstream out(out_path);
                write_coloring(out, *res.extremal_avoider);
            }
            emit(json::parse(forcing_to_json(res, res.extremal_avoider ? out_path : "")),
                 "f = " + std::to_string(res.value) + " (" + res.attestation + ")\n");
            return exit_ok;
        }

        if (*tv) {
            if (trials > 0) {
                if (!seed) return fail_usage("--trials requires an explicit --seed");
                if (m <= 0 || n <= 0 || dd < 0)
                    return fail_usage("--trials needs --m, --s and --d");
                int ok = 0;
                for (int t = 0; t < trials; ++t) {
                    auto d = random_parted_digraph(m, n, dd, *seed + t);
                    ItlStats stats;
                    auto tr = itl_transversal(d, &stats);
                    bool good = independent(d, tr);
                    for (auto mass : stats.destroyed)
                        if (mass >= stats.threshold) good = false;
                    if (good) ++ok;
                }
                emit(json{{"trials", trials}, {"ok", ok}},
                     std::to_string(ok) + "/" + std::to_string(trials) + " trials ok\n");
                return ok == trials ? exit_ok : exit_usage;
            }
            if (digraph_path.empty()) return fail_usage("transversal needs --digraph or --trials");
            std::ifstream in(digraph_path);
            auto d = read_digraph(in);
            if (mode_arg == "exact") {
                auto t = find_transversal_exact(d, r, budget);
                if (!t) {
                    emit(json{{"found", false}}, "no transversal\n");
                    return exit_absent;
                }
                emit(json::parse(transversal_to_json(*t)), "transversal found\n");
                return exit_ok;
            }
            Transversal t = mode_arg == "multifold" ? itl_multifold(d, r) : itl_transversal(d);
            emit(json::parse(transversal_to_json(t)), "transversal found\n");
            return exit_ok;
        }

        if (*rc) {
            if (trials > 0) {
                if (!seed) return fail_usage("--trials requires an explicit --seed");
                int q = m * p * p * p;
                int host = q * m;
                if (host > SimpleGraph::max_order)
                    return fail_usage("adversarial trials need q*m <= 64");
                std::mt19937_64 rng(*seed);
                int ok = 0;
                for (int t = 0; t < trials; ++t) {
                    std::vector<int> raw(EdgeColoring::edge_total(host), -1);
                    std::vector<std::vector<int>> classes(m);
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < q; ++j) classes[i].push_back(i * q + j);
                    int next = 0;
                    for (int u = 0; u < host; ++u)
                        for (int v = u + 1; v < host; ++v)
                            if (u / q != v / q) raw[EdgeColoring::edge_index(u, v)] = next++;
                    int kcolors = next;
                    for (int u = 0; u < host; ++u)
                        for (int v = u + 1; v < host; ++v)
                            if (u / q == v / q) {
                                int c = rng() % 10 < 7
                                            ? static_cast<int>(rng() % kcolors)
                                            : kcolors + static_cast<int>(rng() % 50);
                                raw[EdgeColoring::edge_index(u, v)] = c;
                            }
                    auto psi = EdgeColoring::normalized(host, raw);
                    auto cut = rainbow_cut(psi, classes, p);
                    std::set<int> interior;
                    for (const auto& x : cut.classes)
                        for (std::size_t a = 0; a < x.size(); ++a)
                            for (std::size_t b = a + 1; b < x.size(); ++b)
                                interior.insert(psi.at(x[a], x[b]));
                    bool good = true;
                    for (int i = 0; i < m && good; ++i)
                        for (int j = i + 1; j < m && good; ++j)
                            for (int u : cut.classes[i])
                                for (int v : cut.classes[j])
                                    if (interior.count(psi.at(u, v))) good = false;
                    if (good) ++ok;
                }
                emit(json{{"trials", trials}, {"ok", ok}},
                     std::to_string(ok) + "/" + std::to_string(trials) + " trials ok\n");
                return ok == trials ? exit_ok : exit_usage;
            }
            if (coloring_path.empty()) return fail_usage("rainbow-cut needs --coloring or --trials");
            std::ifstream in(coloring_path);
            auto psi = read_coloring(in);
            if (psi.n % m != 0) return fail_usage("host order not divisible by m");
            int q = psi.n / m;
            std::vector<std::vector<int>> classes(m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < q; ++j) classes[i].push_back(i * q + j);
            auto cut = rainbow_cut(psi, classes, p);
            emit(json{{"p", cut.p}, {"classes", cut.classes}}, "cut found\n");
            return exit_ok;
        }

        if (*smd) {
            auto rec = smd_construct(m, dd, parse_smd_variant(variant_arg), budget);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                write_digraph(out, rec.digraph);
            }
            json j{{"m", rec.m},
                   {"d", rec.d},
                   {"variant", smd_variant_name(rec.variant)},
                   {"s", rec.claimed_s},
                   {"verified_no_transversal", rec.verified_no_transversal},
                   {"verification_skipped", rec.verification_skipped}};
            if (!out_path.empty()) j["digraph_file"] = out_path;
            std::string human = "s = " + std::to_string(rec.claimed_s) +
                                (rec.verified_no_transversal ? ", no transversal (verified)\n"
                                 : rec.verification_skipped  ? ", verification skipped (budget)\n"
                                                             : "\n");
            emit(j, human);
            return rec.verification_skipped ? exit_budget : exit_ok;
        }

        if (*tn) {
            auto res = turan_number(n, turan_r);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                write_edge_list(out, res.extremal_graph);
            }
            emit(json{{"n", res.n}, {"r", turan_r}, {"value", res.value}},
                 "ex(" + std::to_string(n) + ", K_" + std::to_string(turan_r) +
                     ") = " + std::to_string(res.value) + "\n");
            return exit_ok;
        }

        if (*ex) {
            std::vector<SimpleGraph> forbidden;
            for (const auto& a : forbid_args) forbidden.push_back(resolve_graph(a));
            auto res = ex_exact_small(n, forbidden, budget);
            json j{{"n", res.n},
                   {"value", res.value},
                   {"exact", res.exact},
                   {"containment", "subgraph-ignoring-isolated-vertices"},
                   {"extremal_graph", graph_json(res.extremal_graph)}};
            emit(j, "ex = " + std::to_string(res.value) + (res.exact ? "" : " (lower bound)") +
                        "\n");
            return res.exact ? exit_ok : exit_budget;
        }

        if (*cl) {
            auto g = resolve_graph(graph_arg);
            auto f = FamilySpec::parse(family_arg);
            ChiMode mode = mode_arg == "bounded" ? ChiMode::bounded : ChiMode::exact;
            auto res = classify(g, f, mode, n > 0 ? std::optional<int>(n) : std::nullopt);
            std::string human = "case " + std::to_string(res.case_id) + ": " + res.leading_term +
                                "\n";
            emit(json::parse(classification_to_json(res)), human);
            return exit_ok;
        }

        if (*tb) {
            auto rows = build_tables();
            json arr = json::array();
            std::string human;
            bool all_match = true;
            for (const auto& row : rows) {
                bool match = row.lo == row.expected && row.hi == row.expected;
                all_match = all_match && match;
                arr.push_back({{"family", row.family},
                               {"graph", row.graph},
                               {"lo", row.lo},
                               {"hi", row.hi},
                               {"expected", row.expected},
                               {"tag", row.verified ? "verified" : "bounded"},
                               {"match", match}});
                human += row.family + "\t" + row.graph + "\tchi_F=" +
                         (row.lo == row.hi ? std::to_string(row.lo)
                                           : "[" + std::to_string(row.lo) + "," +
                                                 std::to_string(row.hi) + "]") +
                         "\texpected=" + std::to_string(row.expected) + "\t" +
                         (row.verified ? "verified" : "bounded") + "\t" +
                         (match ? "ok" : "MISMATCH") + "\n";
            }
            emit(arr, human);
            return all_match ? exit_ok : exit_usage;
        }
    } catch (const BudgetExceeded& e) {
        if (g_json)
            std::cerr << json{{"error", e.what()}, {"progress", e.progress}}.dump() << '\n';
        else
            std::cerr << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
    return fail_usage("no subcommand dispatched");
}
