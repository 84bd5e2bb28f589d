#include "chromkh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "chromkh/chromatic.hpp"
#include "chromkh/corpus.hpp"
#include "chromkh/correspondence.hpp"
#include "chromkh/delta.hpp"
#include "chromkh/error.hpp"
#include "chromkh/invariants.hpp"
#include "chromkh/khovanov.hpp"
#include "chromkh/survey.hpp"

namespace chromkh {

namespace {

std::string deg_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string torsion_list(const BigradedGroups& h) {
    std::string s;
    for (const auto& [deg, g] : h) {
        if (g.is_free()) continue;
        if (!s.empty()) s += ", ";
        s += deg_str(deg.first, deg.second) + " " + g.torsion_part().str();
    }
    return s.empty() ? "none" : s;
}

// Caps the failure list so a systematic error does not flood the report.
void fail(SuiteReport& r, std::string what) {
    r.passed = false;
    if (r.failures.size() < 200) r.failures.push_back(std::move(what));
}

void expect(SuiteReport& r, bool ok, const std::function<std::string()>& what) {
    ++r.checked;
    if (!ok) fail(r, what());
}

ChromaticOptions chrom_window(const VerifyOptions& opt, int i_max, int j_lo, int j_hi) {
    ChromaticOptions o;
    o.i_max = i_max;
    o.j_min = j_lo;
    o.j_max = j_hi;
    o.threads = opt.threads;
    o.budget = opt.budget;
    return o;
}

KhovanovOptions kh_options(const VerifyOptions& opt) {
    KhovanovOptions o;
    o.threads = opt.threads;
    o.budget = opt.budget;
    return o;
}

LinkDiagram closure(const std::string& word) { return braid_closure(parse_braid(word)); }

std::vector<std::pair<std::string, LinkDiagram>> diagrams_up_to(std::size_t crossings) {
    std::vector<std::pair<std::string, LinkDiagram>> out;
    for (auto& [name, d] : corpus::diagrams())
        if (d.crossing_count() <= crossings) out.emplace_back(name, d);
    return out;
}

// ---------------------------------------------------------------------------

void suite_10_152(SuiteReport& r, const VerifyOptions& opt) {
    for (const char* word : {corpus::k10_152_a, corpus::k10_152_b}) {
        auto d = closure(word);
        auto ko = kh_options(opt);
        ko.i_min = 4;
        ko.i_max = 8;
        auto h = khovanov_homology(d, ko);
        auto z2 = AbelianGroup::free_plus_z2(0, 1);
        for (auto [i, j] : {Bidegree{8, 16}, Bidegree{6, 12}}) {
            auto t = group_at(h, i, j).torsion_part();
            expect(r, t == z2, [&] {
                return std::string(word) + ": tor H" + deg_str(i, j) + " = " + t.str() + ", expected Z2";
            });
        }
        r.notes.push_back(std::string(word) + ": torsion for i in 4..8: " + torsion_list(h));
        // Dual complex: tor H^{i,j} = tor H_{i-2,j}.
        r.notes.push_back(std::string(word) + ": cohomology reading tor H^{8,16} = " +
                          group_at(h, 6, 16).torsion_part().str() + ", tor H^{6,12} = " +
                          group_at(h, 4, 12).torsion_part().str());
        auto p = predict_adequate_torsion(d);
        r.notes.push_back(std::string(word) + ": state graph of s+ has " + std::to_string(p.circles) +
                          " vertices; predicted Z2 at " + deg_str(p.first.first, p.first.second) + " and " +
                          deg_str(p.second.first, p.second.second));
    }
}

void suite_8_4_1(SuiteReport& r, const VerifyOptions& opt) {
    auto d = parse_pd(corpus::kLink8_4_1);
    expect(r, d.crossing_count() == 8, [] { return std::string("crossing count"); });
    expect(r, link_components(d) == 4, [] { return std::string("component count"); });
    expect(r, is_adequate(d, d.all_plus()) && is_adequate(d, LinkDiagram::all_minus()),
           [] { return std::string("diagram not adequate"); });
    auto g = state_graph(d, d.all_plus());
    auto inv = invariants(g);
    auto simple = simplify(g);
    // s+ graph: a 4-cycle of doubled edges on four circles
    expect(r, g.vertex_count() == 4 && g.edge_count() == 8 && simple.edge_count() == 4 && inv.bipartite &&
                  invariants(simple).girth == std::optional<std::size_t>(4),
           [&] { return "state graph shape: " + graph_to_json(g); });
    auto h = khovanov_homology(d, kh_options(opt));
    auto t = group_at(h, 4, 8).torsion_part();
    expect(r, t == AbelianGroup::free_plus_z2(0, 1), [&] { return "tor H(4,8) = " + t.str(); });
    auto c = correspondence_check(d, StateSide::kPlus, ChromaticVariant::kDelta, kh_options(opt));
    expect(r, c.ok(), [] { return std::string("modified correspondence at the girth"); });
    r.notes.push_back("torsion: " + torsion_list(h));
}

void suite_main_lemma(SuiteReport& r, const VerifyOptions& opt) {
    for (const auto& g : corpus::labeled_connected_corpus(opt.seed)) {
        int v = static_cast<int>(g.vertex_count());
        auto h = group_at(chromatic_homology(g, chrom_window(opt, 2, v - 2, v - 2)), 1, v - 2);
        auto want = predict_h1_second_diagonal(g);
        expect(r, h == want, [&] { return graph_to_json(g) + ": H_{1,v-2} = " + h.str() + ", closed form " + want.str(); });
    }
}

void suite_closed_forms(SuiteReport& r, const VerifyOptions& opt) {
    for (const auto& g : corpus::labeled_connected_corpus(opt.seed)) {
        int v = static_cast<int>(g.vertex_count());
        auto res = chromatic_groups(g, chrom_window(opt, 3, v - 2, v - 1));
        auto top = predict_top_cohomology(g);
        auto sd = predict_second_diagonal(g);
        auto check = [&](const char* what, const AbelianGroup& got, const AbelianGroup& want) {
            expect(r, got == want, [&] { return graph_to_json(g) + ": " + what + " = " + got.str() + ", closed form " + want.str(); });
        };
        check("H_{0,v-1}", group_at(res.homology, 0, v - 1), predict_h0_top_homology(g));
        check("H^{0,v-1}", group_at(res.cohomology, 0, v - 1), top.h0);
        check("H^{1,v-1}", group_at(res.cohomology, 1, v - 1), top.h1);
        check("H_{1,v-2}", group_at(res.homology, 1, v - 2), sd.homology1);
        check("H_{2,v-2}", group_at(res.homology, 2, v - 2), sd.homology2);
        check("H^{1,v-2}", group_at(res.cohomology, 1, v - 2), sd.cohomology1);
        check("H^{2,v-2}", group_at(res.cohomology, 2, v - 2), sd.cohomology2);
    }
}

void suite_complete_wheel(SuiteReport& r, const VerifyOptions& opt) {
    for (std::size_t n = 4; n <= 7; ++n) {
        int v = static_cast<int>(n);
        auto h = group_at(chromatic_cohomology(complete_graph(n), chrom_window(opt, 2, v - 2, v - 2)), 2, v - 2);
        auto p = predict_complete_graph_h2(n);
        expect(r, h == p.z2_reading, [&] {
            return "K" + std::to_string(n) + ": H^{2,v-2} = " + h.str() + ", closed form " + p.z2_reading.str();
        });
        r.notes.push_back("K" + std::to_string(n) + ": H^{2,v-2} = " + h.str() + "; literal printed value " + p.printed.str() +
                          (h == p.printed ? " (matches)" : " (differs)"));
    }
    for (std::size_t n = 4; n <= 6; ++n) {
        int v = static_cast<int>(n + 1);
        auto res = chromatic_cohomology(wheel(n), chrom_window(opt, 2, v - 2, v - 2));
        auto h2 = group_at(res, 2, v - 2);
        auto p = predict_wheel_h2(n);
        expect(r, h2 == p.derived, [&] {
            return "W" + std::to_string(n) + ": H^{2,v-2} = " + h2.str() + ", derived closed form " + p.derived.str();
        });
        if (n == 4) {
            auto h1 = group_at(res, 1, v - 2);
            expect(r, h1.free_rank() == 1 && h2.free_rank() == 3, [&] {
                return "W4: rank H^{1,v-2} = " + std::to_string(h1.free_rank()) + ", rank H^{2,v-2} = " +
                       std::to_string(h2.free_rank()) + ", Euler constraint wants 1 and 3";
            });
        }
        r.notes.push_back("W" + std::to_string(n) + ": oracle " + h2.str() + "; printed " + p.printed.str() +
                          (h2 == p.printed ? " (matches)" : " (differs)"));
    }
}

void suite_euler(SuiteReport& r, const VerifyOptions& opt) {
    std::vector<std::pair<std::string, LinkDiagram>> links = diagrams_up_to(10);
    std::vector<int> parts(8);
    std::iota(parts.begin(), parts.end(), 1);
    for (const auto& b : three_braid_family(parts, 8, 8)) links.emplace_back(braid_to_string(b), braid_closure(b));
    std::size_t diagrams = 0;
    for (const auto& [name, d] : links) {
        auto chi = euler_characteristic(khovanov_homology(d, kh_options(opt)), EulerMode::kKhovanov);
        auto br = unreduced_bracket(d);
        expect(r, chi == br, [&] { return name + ": Euler characteristic " + chi.str() + ", bracket " + br.str(); });
        ++diagrams;
    }
    r.notes.push_back(std::to_string(diagrams) + " diagrams");
    std::size_t graphs = 0;
    for (const auto& [name, g] : corpus::full_graph_corpus(6, opt.seed)) {
        ChromaticOptions co;
        co.threads = opt.threads;
        co.budget = opt.budget;
        auto chi = euler_characteristic(chromatic_cohomology(g, co), EulerMode::kChromatic);
        auto poly = chromatic_q_form(chromatic_polynomial(g));
        expect(r, chi == poly, [&] { return name + ": Euler characteristic " + chi.str() + ", chromatic polynomial " + poly.str(); });
        ++graphs;
    }
    r.notes.push_back(std::to_string(graphs) + " graphs");
}

void suite_correspondence(SuiteReport& r, const VerifyOptions& opt) {
    std::set<std::string> adequate;
    for (const auto& [name, d] : diagrams_up_to(10))
        for (auto side : {StateSide::kPlus, StateSide::kMinus}) {
            auto dk = side == StateSide::kPlus ? d : mirror(d);
            if (d.crossing_count() == 0 || !is_adequate(dk, dk.all_plus())) continue;
            adequate.insert(name);
            for (auto variant : {ChromaticVariant::kPlain, ChromaticVariant::kDelta}) {
                auto rep = correspondence_check(d, side, variant, kh_options(opt));
                for (const auto& e : rep.entries)
                    expect(r, e.ok, [&, name = name] {
                        return name + (side == StateSide::kPlus ? " s+ " : " s- ") +
                               (variant == ChromaticVariant::kPlain ? "plain" : "modified") + ": H^" + deg_str(e.i, e.j) +
                               " = " + e.chromatic.str() + " vs H" + deg_str(e.a, e.b) + " = " + e.khovanov.str();
                    });
            }
        }
    expect(r, adequate.size() >= 10, [&] { return "only " + std::to_string(adequate.size()) + " adequate diagrams"; });
    r.notes.push_back(std::to_string(adequate.size()) + " diagrams adequate in at least one state");
}

void suite_delta(SuiteReport& r, const VerifyOptions& opt) {
    std::size_t loopless = 0, loops = 0;
    for (const auto& g : multigraphs_up_to_iso(5, 8, true)) {
        if (g.edge_count() == 0) continue;
        auto c = compare_delta(g, opt.threads);
        auto name = graph_to_json(g);
        if (g.has_loop()) {
            ++loops;
            expect(r, c.loop_facts_hold(), [&] {
                return name + ": H_{0,v-1} = " + c.loop_h0.str() + ", H^{1,v-1} = " + c.loop_h1.str();
            });
            continue;
        }
        ++loopless;
        expect(r, c.h1_agrees(), [&] { return name + ": H_{1,v-2} " + c.h1_delta.str() + " vs " + c.h1_plain.str(); });
        expect(r, c.torsion_agrees(), [&] { return name + ": tor H^{2,v-2} " + c.tor2_delta.str() + " vs " + c.tor2_plain.str(); });
        expect(r, c.below_girth_mismatches.empty(), [&] { return name + ": " + c.below_girth_mismatches.front(); });
    }
    r.notes.push_back(std::to_string(loopless) + " loopless multigraphs, " + std::to_string(loops) + " with loops");
}

void suite_braids(SuiteReport& r, const VerifyOptions& opt) {
    std::size_t words = 0, torsion_checked = 0;
    for (const auto& b : three_braid_family({1, 2, 3}, 5, 15)) {
        auto d = braid_closure(b);
        auto rep = braid_adequacy_predicates(b);
        bool adequate = is_adequate(d, d.all_plus()) && is_adequate(d, LinkDiagram::all_minus());
        auto word = braid_to_string(b);
        expect(r, adequate == rep.predicted_adequate, [&] {
            return word + ": adequate " + std::to_string(adequate) + ", syllable test " + std::to_string(rep.predicted_adequate);
        });
        ++words;
        if (!rep.predicts_z2_torsion || d.crossing_count() > 10) continue;
        auto h = khovanov_homology(d, kh_options(opt));
        bool z2 = std::any_of(h.begin(), h.end(), [](const auto& kv) { return kv.second.p_rank(2) > 0; });
        expect(r, z2, [&] { return word + ": no Z2 torsion"; });
        ++torsion_checked;
    }
    r.notes.push_back(std::to_string(words) + " words for adequacy, " + std::to_string(torsion_checked) +
                      " closures computed for torsion");
}

void suite_invariance(SuiteReport& r, const VerifyOptions& opt) {
    auto ko = kh_options(opt);
    const char* pairs[][2] = {
        {"BR[3,{1,1,1}]", "BR[3,{1,1,1,2,-2}]"},
        {"BR[3,{1,-2,1,-2}]", "BR[3,{1,-2,2,-2,1,-2}]"},
        {"BR[2,{1,1,1}]", "BR[2,{1,1,-1,1,1}]"},
        {"BR[3,{1,2,1}]", "BR[3,{2,1,2}]"},
        {"BR[3,{-1,-2,-1,2,2}]", "BR[3,{-2,-1,-2,2,2}]"},
        {"BR[4,{1,2,1,3,3}]", "BR[4,{2,1,2,3,3}]"},
        {"BR[4,{1,-3,2,1,2}]", "BR[4,{1,-3,1,2,1}]"},
    };
    for (auto& p : pairs) {
        auto a = khovanov_homology(closure(p[0]), ko), b = khovanov_homology(closure(p[1]), ko);
        expect(r, a == b, [&] { return std::string(p[0]) + " vs " + p[1]; });
    }
    std::mt19937_64 rng(opt.seed);
    for (const auto& [name, d] : diagrams_up_to(8)) {
        auto base = khovanov_homology(d, ko);
        if (d.crossing_count() <= 7) {
            expect(r, khovanov_homology(add_kink(d, +1), ko) == shift(base, 1, 3), [&, n = name] { return n + ": positive kink"; });
            expect(r, khovanov_homology(add_kink(d, -1), ko) == shift(base, -1, -3), [&, n = name] { return n + ": negative kink"; });
        }
        if (d.crossing_count() < 2) continue;
        std::vector<std::size_t> order(d.crossing_count());
        std::iota(order.begin(), order.end(), 0);
        for (int t = 0; t < 5; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            expect(r, khovanov_homology(d.permute_crossings(order), ko) == base, [&, n = name] { return n + ": crossing order"; });
        }
    }
    std::vector<std::pair<std::string, Multigraph>> graphs = {
        {"K4", complete_graph(4)}, {"W5", wheel(5)}, {"K3+C4", disjoint_union(complete_graph(3), cycle(4))},
        {"K4*C3", one_vertex_product(complete_graph(4), cycle(3))},
        {"multigraph", Multigraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}})}};
    for (const auto& [name, g] : graphs) {
        ChromaticOptions co;
        co.threads = opt.threads;
        auto base = chromatic_groups(g, co);
        auto dbase = delta_groups(g, co);
        std::vector<std::size_t> order(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
        for (int t = 0; t < 5; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            auto pg = g.permute_edges(order);
            auto res = chromatic_groups(pg, co);
            expect(r, res.cohomology == base.cohomology && res.homology == base.homology,
                   [&, n = name] { return n + ": edge order"; });
            auto dres = delta_groups(pg, co);
            expect(r, dres.cohomology == dbase.cohomology && dres.homology == dbase.homology,
                   [&, n = name] { return n + ": edge order, modified complex"; });
        }
    }
}

void suite_uct(SuiteReport& r, const VerifyOptions& opt) {
    for (const auto& [name, g] : corpus::full_graph_corpus(6, opt.seed)) {
        ChromaticOptions co;
        co.threads = opt.threads;
        co.budget = opt.budget;
        auto res = chromatic_groups(g, co);
        int v = static_cast<int>(g.vertex_count());
        int p0 = static_cast<int>(invariants(g).p0);
        for (int i = 0; i <= static_cast<int>(g.edge_count()) + 1; ++i)
            for (int j = -1; j <= v + 1; ++j) {
                auto want = group_at(res.homology, i, j).free_part().direct_sum(group_at(res.homology, i - 1, j).torsion_part());
                auto got = group_at(res.cohomology, i, j);
                expect(r, got == want, [&, n = name] { return n + ": H^" + deg_str(i, j) + " = " + got.str() + ", UCT gives " + want.str(); });
            }
        for (const auto& [deg, h] : res.homology) {
            if (h.is_trivial()) continue;
            int d = deg.first + deg.second;
            expect(r, d <= v && d >= v - p0, [&, n = name] { return n + ": H" + deg_str(deg.first, deg.second) + " off the diagonals"; });
            if (p0 == 1 && !h.is_free())
                expect(r, d == v - 1, [&, n = name] { return n + ": torsion at H" + deg_str(deg.first, deg.second); });
        }
    }
}

void suite_z4(SuiteReport& r, const VerifyOptions& opt) {
    // Locate 2-primary torsion with ranks mod 2 and mod 3, then compute the
    // integer groups at the located bidegrees only.
    const std::string word = "BR[4,{1,1,2,2,1,1,3,2,2,2,1,3,2,2,3}]";
    auto d = closure(word);
    expect(r, is_adequate(d, d.all_plus()) && is_adequate(d, LinkDiagram::all_minus()),
           [&] { return word + ": diagram not adequate"; });
    auto ko = kh_options(opt);
    auto loc = torsion_localize(d, 2, 3, ko);
    std::set<int> columns;
    for (const auto& [deg, diff] : loc.difference) {
        expect(r, diff > 0, [&] { return word + ": rank mod 2 below rank mod 3 at " + deg_str(deg.first, deg.second); });
        columns.insert(deg.first);
    }
    bool found = false;
    std::string where;
    for (int i : columns) {
        auto wo = ko;
        wo.i_min = i;
        wo.i_max = i;
        for (const auto& [deg, g] : khovanov_homology(d, wo))
            for (const auto& t : g.torsion())
                if (t == Integer(4) || (t % Integer(4)).is_zero()) {
                    found = true;
                    where += deg_str(deg.first, deg.second) + " " + g.str() + " ";
                }
    }
    expect(r, found, [&] { return word + ": no Z4 torsion in the located columns"; });
    r.notes.push_back(word + ": Z4 at " + (found ? where : std::string("-")));

    // The odd-prime comparison and the mod p / integer consistency on the trefoil.
    auto tref = closure("BR[2,{1,1,1}]");
    auto th = khovanov_homology(tref, ko);
    expect(r, torsion_localize(tref, 5, 7, ko).difference.empty(), [] { return std::string("trefoil: KH5 - KH7 nonzero"); });
    auto two = torsion_localize(tref, 2, 3, ko).difference;
    std::map<Bidegree, long long> expected;
    for (const auto& [deg, g] : th)
        if (auto t = g.p_rank(2)) {
            expected[deg] += static_cast<long long>(t);
            expected[{deg.first + 2, deg.second}] += static_cast<long long>(t);
        }
    expect(r, two == expected, [] { return std::string("trefoil: KH2 - KH3 does not sit next to the Z2"); });
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (const auto& [name, dd] : diagrams_up_to(10)) {
            auto h = khovanov_homology(dd, ko);
            expect(r, khovanov_mod_p(dd, p, ko) == ranks_mod_p_from_integral(h, p),
                   [&, n = name] { return n + ": ranks mod " + std::to_string(p) + " disagree with UCT"; });
        }
}

struct SuiteDef {
    const char* name;
    const char* title;
    void (*run)(SuiteReport&, const VerifyOptions&);
};

const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> list = {
        {"torsion-10-152", "10_152: tor H_{8,16} = tor H_{6,12} = Z2 for both braid words", suite_10_152},
        {"link-8-4-1", "8^4_1: tor H_{4,8} = Z2", suite_8_4_1},
        {"main-lemma", "H_{1,v-2} closed form, labeled graphs on <= 6 vertices and 200 random 7-vertex graphs", suite_main_lemma},
        {"closed-forms", "top diagonal and second diagonal closed forms on the same corpus", suite_closed_forms},
        {"complete-wheel", "K_n for n = 4..7 and W_n for n = 4..6", suite_complete_wheel},
        {"euler", "Euler characteristics: bracket and chromatic polynomial", suite_euler},
        {"correspondence", "chromatic cohomology of state graphs vs Khovanov homology", suite_correspondence},
        {"delta", "modified complex: H_{1,v-2}, tor H^{2,v-2} and loop graphs", suite_delta},
        {"braids", "positive 3-braids: adequacy and Z2 torsion", suite_braids},
        {"invariance", "Reidemeister moves, crossing order and edge order", suite_invariance},
        {"uct", "universal coefficients and two-diagonal support", suite_uct},
        {"z4", "Z4 torsion of a 15-crossing 4-braid; mod p pipeline", suite_z4},
    };
    return list;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
}

bool has_suite(const std::string& name) {
    const auto& list = suites();
    return std::any_of(list.begin(), list.end(), [&](const SuiteDef& s) { return name == s.name; });
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    for (const auto& s : suites()) {
        if (name != s.name) continue;
        SuiteReport r;
        r.name = s.name;
        r.title = s.title;
        auto t0 = std::chrono::steady_clock::now();
        s.run(r, opt);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw InvalidArgument("unknown suite: " + name);
}

}  // namespace chromkh
