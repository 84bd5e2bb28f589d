#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "chromkh/correspondence.hpp"
#include "chromkh/error.hpp"
#include "chromkh/invariants.hpp"
#include "chromkh/khovanov.hpp"
#include "chromkh/survey.hpp"
#include "chromkh/corpus.hpp"

using namespace chromkh;

namespace {

LinkDiagram braid(const char* text) { return braid_closure(parse_braid(text)); }

std::vector<std::pair<std::string, LinkDiagram>> small_corpus() {
    std::vector<std::pair<std::string, LinkDiagram>> out;
    for (auto& [name, d] : corpus::diagrams())
        if (d.crossing_count() <= 10) out.emplace_back(name, d);
    return out;
}

}  // namespace

TEST_CASE("unknot and kinks") {
    auto h = khovanov_homology(parse_pd("Loop[1]"));
    CHECK(h.size() == 2);
    CHECK(group_at(h, 0, 2) == AbelianGroup::free(1));
    CHECK(group_at(h, 0, -2) == AbelianGroup::free(1));
    auto neg = khovanov_homology(parse_pd("X[1,2,2,1]"));
    CHECK(neg == shift(h, -1, -3));
    CHECK(group_at(neg, -1, -5) == AbelianGroup::free(1));
    CHECK(khovanov_homology(parse_pd("X[1,1,2,2]")) == shift(h, 1, 3));
}

TEST_CASE("Hopf link has no torsion") {
    KhovanovComplex cx(braid("BR[2,{1,1}]"));
    CHECK(cx.total_dimension() <= 12);
    auto h = khovanov_homology(braid("BR[2,{1,1}]"));
    for (auto& [deg, g] : h) CHECK(g.is_free());
}

TEST_CASE("trefoil in the oriented normalization") {
    auto d = braid("BR[2,{-1,-1,-1}]");
    auto h = to_oriented(khovanov_homology(d), writhe(d));
    CHECK(poincare_polynomial(free_ranks(h)) == "q^1*t^0 + q^3*t^0 + q^5*t^2 + q^9*t^3");
    CHECK(group_at(h, 3, 7) == AbelianGroup::free_plus_z2(0, 1));
    std::size_t torsion = 0;
    for (auto& [deg, g] : h) torsion += g.torsion().size();
    CHECK(torsion == 1);
}

TEST_CASE("pretzel link 8_4_1") {
    auto d = parse_pd(corpus::kLink8_4_1);
    CHECK(d.crossing_count() == 8);
    CHECK(link_components(d) == 4);
    CHECK(is_adequate(d, d.all_plus()));
    auto h = khovanov_homology(d);
    CHECK(group_at(h, 4, 8).torsion_part() == AbelianGroup::free_plus_z2(0, 1));
}

TEST_CASE("d squared vanishes") {
    for (auto& [name, d] : small_corpus()) {
        if (d.crossing_count() > 8) continue;
        CAPTURE(name);
        KhovanovComplex cx(d);
        for (auto [i, j] : cx.support()) {
            if (!cx.dimension(i - 2, j) || !cx.dimension(i - 4, j)) continue;
            CHECK((cx.differential(i - 2, j) * cx.differential(i, j)).is_zero());
        }
    }
}

TEST_CASE("Euler characteristic is the unreduced bracket") {
    for (auto& [name, d] : small_corpus()) {
        CAPTURE(name);
        CHECK(euler_characteristic(khovanov_homology(d), EulerMode::kKhovanov) == unreduced_bracket(d));
    }
}

TEST_CASE("first Reidemeister move shifts by (1,3)") {
    for (auto& [name, d] : small_corpus()) {
        if (d.crossing_count() > 7) continue;
        CAPTURE(name);
        auto h = khovanov_homology(d);
        CHECK(khovanov_homology(add_kink(d, +1)) == shift(h, 1, 3));
        CHECK(khovanov_homology(add_kink(d, -1)) == shift(h, -1, -3));
    }
}

TEST_CASE("second and third Reidemeister moves") {
    const char* pairs[][2] = {
        {"BR[3,{1,1,1}]", "BR[3,{1,1,1,2,-2}]"},
        {"BR[3,{1,-2,1,-2}]", "BR[3,{1,-2,2,-2,1,-2}]"},
        {"BR[3,{1,2,1}]", "BR[3,{2,1,2}]"},
        {"BR[3,{-1,-2,-1,2,2}]", "BR[3,{-2,-1,-2,2,2}]"},
        {"BR[4,{1,2,1,3,3}]", "BR[4,{2,1,2,3,3}]"},
        {"BR[4,{1,-3,2,1,2}]", "BR[4,{1,-3,1,2,1}]"},
    };
    for (auto& p : pairs) {
        CAPTURE(p[0]);
        CHECK(khovanov_homology(braid(p[0])) == khovanov_homology(braid(p[1])));
    }
}

TEST_CASE("crossing order does not matter") {
    std::mt19937_64 rng(20130101);
    for (auto& [name, d] : small_corpus()) {
        if (d.crossing_count() < 2 || d.crossing_count() > 8) continue;
        CAPTURE(name);
        auto base = khovanov_homology(d);
        std::vector<std::size_t> order(d.crossing_count());
        std::iota(order.begin(), order.end(), 0);
        for (int t = 0; t < 5; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(khovanov_homology(d.permute_crossings(order)) == base);
        }
    }
}

TEST_CASE("ranks mod p follow from the integer groups") {
    for (auto& [name, d] : small_corpus()) {
        CAPTURE(name);
        auto h = khovanov_homology(d);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            CAPTURE(p);
            CHECK(khovanov_mod_p(d, p) == ranks_mod_p_from_integral(h, p));
        }
    }
}

TEST_CASE("windows") {
    auto d = braid(corpus::k10_152_b);
    KhovanovOptions o;
    o.i_min = 6;
    o.i_max = 8;
    auto part = khovanov_homology(d, o);
    auto full = khovanov_homology(d);
    for (auto& [deg, g] : part) CHECK(group_at(full, deg.first, deg.second) == g);
    for (auto& [deg, g] : full)
        if (deg.first >= 6 && deg.first <= 8) CHECK(group_at(part, deg.first, deg.second) == g);
}

TEST_CASE("both words for 10_152 give the same groups") {
    auto a = khovanov_homology(braid(corpus::k10_152_a));
    auto b = khovanov_homology(braid(corpus::k10_152_b));
    CHECK(a == b);
}

TEST_CASE("budget errors name the chain groups") {
    KhovanovOptions o;
    o.budget = 50;
    try {
        khovanov_homology(braid("BR[3,{1,1,2,2,1,1}]"), o);
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).find("C(") != std::string::npos);
    }
}

TEST_CASE("torsion localization") {
    auto d = braid("BR[2,{1,1,1}]");
    auto h = khovanov_homology(d);
    Bidegree z2{};
    for (auto& [deg, g] : h)
        if (!g.is_free()) z2 = deg;
    auto loc = torsion_localize(d, 2, 3);
    std::set<Bidegree> keys;
    for (auto& [deg, v] : loc.difference) {
        CHECK(v > 0);
        keys.insert(deg);
    }
    CHECK(keys == std::set<Bidegree>{z2, {z2.first + 2, z2.second}});
    CHECK(torsion_localize(braid(corpus::k10_152_b), 5, 7).difference.empty());
}

TEST_CASE("correspondence with chromatic cohomology") {
    std::size_t checked = 0;
    for (auto& [name, d] : small_corpus())
        for (auto side : {StateSide::kPlus, StateSide::kMinus})
            for (auto variant : {ChromaticVariant::kPlain, ChromaticVariant::kDelta}) {
                auto dk = side == StateSide::kPlus ? d : mirror(d);
                if (!is_adequate(dk, dk.all_plus())) {
                    CHECK_THROWS_AS(correspondence_check(d, side, variant), InvalidArgument);
                    continue;
                }
                CAPTURE(name);
                auto r = correspondence_check(d, side, variant);
                CHECK(r.ok());
                ++checked;
            }
    CHECK(checked >= 40);
}

TEST_CASE("torsion predicted from the state graph") {
    for (auto& [name, d] : small_corpus()) {
        if (!is_adequate(d, d.all_plus()) || d.crossing_count() < 2) continue;
        CAPTURE(name);
        auto p = predict_adequate_torsion(d);
        auto h = khovanov_homology(d);
        if (p.connected) {
            CHECK(group_at(h, p.first.first, p.first.second).torsion_part() == p.first_torsion);
            CHECK(group_at(h, p.second.first, p.second.second).torsion_part() == p.second_torsion);
        }
        CHECK(group_at(h, p.second.first, p.second.second).torsion_part().p_rank(2) == p.second_exponent_rederived);
    }
    auto p = predict_adequate_torsion(braid(corpus::k10_152_b));
    CHECK(p.first == Bidegree{8, 20});
    CHECK(p.second == Bidegree{6, 16});
    CHECK(p.second_torsion == AbelianGroup::free_plus_z2(0, 1));
    CHECK_THROWS_AS(predict_adequate_torsion(parse_pd("X[1,2,2,1]")), InvalidArgument);
}

TEST_CASE("braid survey") {
    auto family = three_braid_family({2, 3}, 4, 8);
    CHECK(!family.empty());
    for (auto& e : survey_braids(family)) {
        CAPTURE(e.braid);
        CHECK_FALSE(e.skipped);
        CHECK(e.only_z2());
        CHECK(e.adequate_plus == e.predicted_adequate);
    }
    auto hopf = survey_braids({parse_braid("BR[2,{1,1}]")});
    CHECK(hopf.at(0).torsion.empty());
    CHECK(survey_braids({}).empty());
    KhovanovOptions o;
    o.budget = 10;
    auto skipped = survey_braids({parse_braid("BR[3,{1,1,2,2}]")}, o);
    CHECK(skipped.at(0).skipped);
}
