#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <set>
#include <random>

#include "chromkh/error.hpp"
#include "chromkh/link.hpp"
#include "chromkh/corpus.hpp"

using namespace chromkh;

namespace {

// Circle count by walking the smoothed diagram slot to slot; shares nothing
// with the union-find in smooth().
std::size_t traced_circles(const LinkDiagram& d, KauffmanState s) {
    std::size_t n = d.crossing_count();
    std::map<std::uint32_t, std::vector<std::pair<std::size_t, int>>> ends;
    for (std::size_t k = 0; k < n; ++k)
        for (int t = 0; t < 4; ++t) ends[d.crossing(k).arcs[t]].push_back({k, t});
    auto partner = [&](std::size_t k, int t) {
        // A: 0-1, 2-3; B: 0-3, 1-2
        static const int a_pair[4] = {1, 0, 3, 2};
        static const int b_pair[4] = {3, 2, 1, 0};
        return (s >> k & 1) ? a_pair[t] : b_pair[t];
    };
    std::set<std::pair<std::size_t, int>> seen;
    std::size_t circles = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (int t = 0; t < 4; ++t) {
            if (seen.count({k, t})) continue;
            ++circles;
            std::size_t ck = k;
            int ct = t;
            while (!seen.count({ck, ct})) {
                seen.insert({ck, ct});
                int other = partner(ck, ct);
                seen.insert({ck, other});
                const auto& e = ends[d.crossing(ck).arcs[other]];
                auto next = (e[0].first == ck && e[0].second == other) ? e[1] : e[0];
                ck = next.first;
                ct = next.second;
            }
        }
    return circles + d.free_loops();
}

}  // namespace

TEST_CASE("parsing") {
    auto d = parse_pd("X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]");
    CHECK(d.crossing_count() == 3);
    CHECK(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").crossings().size() == 3);
    CHECK(parse_pd("Loop[1]").free_loops() == 1);
    CHECK(parse_pd("").crossing_count() == 0);
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), ParseError);  // labels must pair up
    CHECK_THROWS_AS(parse_pd("Y[1,1,2,2]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X[1,1,2,2]"), ParseError);

    auto b = parse_braid("BR[3,{1,1,1,2,2,1,1,2,2,2}]");
    CHECK(b.strands == 3);
    CHECK(b.letters.size() == 10);
    CHECK(braid_to_string(parse_braid("BR[4, {1, -2, 3}]")) == "BR[4,{1,-2,3}]");
    CHECK(parse_braid("BR[2,{}]").letters.empty());
    CHECK_THROWS_AS(parse_braid("BR[2,{2}]"), ParseError);
    CHECK_THROWS_AS(parse_braid("BR[2,{0}]"), ParseError);
    CHECK_THROWS_AS(parse_braid("BR[2,{1}"), ParseError);
}

TEST_CASE("braid closures") {
    auto trefoil = braid_closure(parse_braid("BR[2,{1,1,1}]"));
    CHECK(trefoil.crossing_count() == 3);
    CHECK(link_components(trefoil) == 1);
    auto k10 = braid_closure(parse_braid("BR[3,{1,1,1,2,2,1,1,2,2,2}]"));
    CHECK(k10.crossing_count() == 10);
    CHECK(link_components(k10) == 1);
    auto unlink = braid_closure(parse_braid("BR[2,{}]"));
    CHECK(unlink.crossing_count() == 0);
    CHECK(unlink.free_loops() == 2);
    CHECK(link_components(unlink) == 2);
    CHECK(braid_closure(parse_braid("BR[3,{1}]")).free_loops() == 1);
    CHECK(link_components(braid_closure(parse_braid("BR[2,{1,1}]"))) == 2);
    CHECK(link_components(braid_closure(parse_braid("BR[3,{1,1,2,2}]"))) == 3);
}

TEST_CASE("smoothing the trefoil") {
    auto unknot = parse_pd("Loop[1]");
    CHECK(smooth(unknot, 0).circles == 1);

    auto trefoil = braid_closure(parse_braid("BR[2,{1,1,1}]"));
    auto vertical = smooth(trefoil, trefoil.all_minus());
    CHECK(vertical.circles == 2);
    for (const auto& inc : vertical.incident) CHECK(inc[0] != inc[1]);
    auto dipole = state_graph(trefoil, trefoil.all_minus());
    CHECK(dipole.vertex_count() == 2);
    CHECK(dipole.edge_count() == 3);
    CHECK(girth(dipole) == std::optional<std::size_t>(2));

    auto horizontal = state_graph(trefoil, trefoil.all_plus());
    CHECK(horizontal.vertex_count() == 3);
    CHECK(horizontal.is_simple());
    CHECK(invariants(horizontal).t3 == 1);
}

TEST_CASE("10_152 state graphs") {
    for (auto word : {"BR[3,{1,1,1,2,2,1,1,2,2,2}]", "BR[3,{1,1,1,2,2,2,1,1,2,2}]"}) {
        auto d = braid_closure(parse_braid(word));
        auto minus = state_graph(d, d.all_minus());
        CHECK(minus.vertex_count() == 3);
        CHECK(girth(minus) == std::optional<std::size_t>(2));
        CHECK_FALSE(girth(simplify(minus)).has_value());

        auto plus = state_graph(d, d.all_plus());
        CHECK(plus.vertex_count() == 7);
        auto simple = simplify(plus);
        CHECK(girth(simple) == std::optional<std::size_t>(3));
        CHECK(invariants(simple).p1 == 2);
        CHECK(is_adequate(d, d.all_plus()));
        CHECK(is_adequate(d, d.all_minus()));
        CHECK_FALSE(is_strongly_adequate(d, d.all_minus()));
    }
}

TEST_CASE("adequacy examples") {
    auto a = braid_closure(parse_braid("BR[3,{1,1,2,2}]"));
    CHECK(is_adequate(a, a.all_plus()));
    CHECK(is_adequate(a, a.all_minus()));
    auto b = braid_closure(parse_braid("BR[3,{1,2,2}]"));
    bool b_adequate = is_adequate(b, b.all_plus()) && is_adequate(b, b.all_minus());
    CHECK_FALSE(b_adequate);
}

TEST_CASE("state graph properties on the corpus") {
    std::mt19937_64 rng(3);
    for (const auto& [name, d] : corpus::diagrams()) {
        CAPTURE(name);
        std::size_t n = d.crossing_count();
        auto m = mirror(d);
        for (int trial = 0; trial < 16; ++trial) {
            KauffmanState s = n ? rng() & d.all_plus() : 0;
            if (trial == 0) s = d.all_plus();
            if (trial == 1) s = 0;
            auto r = smooth(d, s);
            CHECK(r.circles == traced_circles(d, s));
            auto g = state_graph(d, s);
            CHECK(g.edge_count() == n);
            CHECK(g.vertex_count() == r.circles);
            CHECK(is_adequate(d, s) == !g.has_loop());
            CHECK(state_graph(m, ~s & d.all_plus()) == g);
        }
        CHECK(writhe(m) == -writhe(d));
    }
}

TEST_CASE("writhe") {
    CHECK(writhe(braid_closure(parse_braid("BR[2,{1,1,1}]"))) == -3);
    CHECK(writhe(braid_closure(parse_braid("BR[2,{-1,-1,-1}]"))) == 3);
    CHECK(writhe(braid_closure(parse_braid("BR[3,{1,-2,1,-2}]"))) == 0);
}

TEST_CASE("braid predicates") {
    auto r = braid_adequacy_predicates(parse_braid("BR[3,{1,1,2,2,2}]"));
    CHECK(r.predicted_adequate);
    CHECK(r.predicts_z2_torsion);
    auto s = braid_adequacy_predicates(parse_braid("BR[3,{1,1,2,2}]"));
    CHECK(s.predicted_adequate);
    CHECK_FALSE(s.predicts_z2_torsion);
    CHECK(s.components == 3);
    auto t = braid_adequacy_predicates(parse_braid("BR[3,{1,2,2}]"));
    CHECK_FALSE(t.predicted_adequate);
    auto cyc = cyclic_syllables(parse_braid("BR[3,{1,2,2,1}]"));
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0].exponent == 2);
    CHECK_THROWS_AS(braid_adequacy_predicates(parse_braid("BR[3,{1,-2}]")), InvalidArgument);
}

TEST_CASE("3-braid adequacy is decided by cyclic syllables") {
    // Every alternating syllable sequence of length 1..5 with exponents in {1,2,3}.
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& exps) {
        if (!exps.empty()) {
            for (int sign : {1, -1}) {
                BraidWord b{3, {}};
                for (std::size_t i = 0; i < exps.size(); ++i)
                    for (int k = 0; k < exps[i]; ++k) b.letters.push_back(sign * static_cast<int>(1 + i % 2));
                auto d = braid_closure(b);
                bool adequate = is_adequate(d, d.all_plus()) && is_adequate(d, d.all_minus());
                CAPTURE(braid_to_string(b));
                CHECK(adequate == braid_adequacy_predicates(b).predicted_adequate);
            }
        }
        if (exps.size() == 5) return;
        for (int a = 1; a <= 3; ++a) {
            exps.push_back(a);
            rec(exps);
            exps.pop_back();
        }
    };
    std::vector<int> exps;
    rec(exps);
}
