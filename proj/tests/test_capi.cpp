#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chromkh/chromkh.h>

#include <cstdlib>
#include <string>
#include <vector>

namespace {

std::string data_file(const char* name) {
    const char* dir = std::getenv("CHROMKH_DATA");
    return std::string(dir ? dir : "data") + "/" + name;
}

struct Entry {
    int i, j;
    size_t free_rank;
    std::vector<std::string> torsion;
};

std::vector<Entry> entries(const chromkh_groups* h) {
    std::vector<Entry> out;
    for (size_t k = 0; k < chromkh_groups_count(h); ++k) {
        Entry e{};
        size_t tc = 0;
        REQUIRE(chromkh_groups_get(h, k, &e.i, &e.j, &e.free_rank, &tc) == CHROMKH_OK);
        for (size_t t = 0; t < tc; ++t) {
            char buf[64];
            REQUIRE(chromkh_groups_torsion(h, k, t, buf, sizeof buf) == CHROMKH_OK);
            e.torsion.push_back(buf);
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace

TEST_CASE("triangle cohomology through the C interface") {
    chromkh_graph* g = nullptr;
    REQUIRE(chromkh_graph_parse_json(R"({"vertices": 3, "edges": [[0,1],[1,2],[2,0]]})", &g) == CHROMKH_OK);
    CHECK(chromkh_graph_vertices(g) == 3);
    CHECK(chromkh_graph_edges(g) == 3);
    char hash[17];
    CHECK(chromkh_graph_hash(g, hash) == CHROMKH_OK);
    CHECK(std::string(hash).size() == 16);

    chromkh_options opt;
    chromkh_options_init(&opt);
    chromkh_groups* h = nullptr;
    REQUIRE(chromkh_chromatic(g, CHROMKH_THEORY_CHROMATIC, 1, &opt, &h) == CHROMKH_OK);
    auto e = entries(h);
    REQUIRE(e.size() == 3);
    CHECK((e[0].i == 0 && e[0].j == 3 && e[0].free_rank == 1));
    CHECK((e[1].i == 1 && e[1].j == 1 && e[1].free_rank == 1));
    CHECK((e[2].i == 1 && e[2].j == 2 && e[2].free_rank == 0 && e[2].torsion == std::vector<std::string>{"2"}));
    char* euler = nullptr;
    CHECK(chromkh_groups_euler(h, 0, &euler) == CHROMKH_OK);
    CHECK(std::string(euler).size() > 0);
    chromkh_string_free(euler);
    chromkh_groups_free(h);

    REQUIRE(chromkh_chromatic(g, CHROMKH_THEORY_DELTA, 0, &opt, &h) == CHROMKH_OK);
    chromkh_groups_free(h);
    chromkh_graph_free(g);
}

TEST_CASE("trefoil Khovanov homology and oriented shift") {
    chromkh_link* l = nullptr;
    REQUIRE(chromkh_link_load_pd(data_file("trefoil.pd").c_str(), &l) == CHROMKH_OK);
    CHECK(chromkh_link_crossings(l) == 3);
    CHECK(chromkh_link_components(l) == 1);
    chromkh_options opt;
    chromkh_options_init(&opt);
    chromkh_groups* h = nullptr;
    REQUIRE(chromkh_khovanov(l, &opt, &h) == CHROMKH_OK);
    size_t torsion_groups = 0;
    for (const auto& e : entries(h)) torsion_groups += !e.torsion.empty();
    CHECK(torsion_groups == 1);
    chromkh_groups* o = nullptr;
    REQUIRE(chromkh_groups_oriented(h, chromkh_link_writhe(l), &o) == CHROMKH_OK);
    CHECK(chromkh_groups_count(o) == chromkh_groups_count(h));
    char* euler = nullptr;
    char* bracket = nullptr;
    REQUIRE(chromkh_groups_euler(h, 1, &euler) == CHROMKH_OK);
    REQUIRE(chromkh_link_bracket(l, &bracket) == CHROMKH_OK);
    CHECK(std::string(euler) == std::string(bracket));
    chromkh_string_free(euler);
    chromkh_string_free(bracket);

    chromkh_groups* m = nullptr;
    REQUIRE(chromkh_khovanov_mod_p(l, 2, &opt, &m) == CHROMKH_OK);
    size_t total2 = 0, total = 0;
    for (const auto& e : entries(m)) total2 += e.free_rank;
    for (const auto& e : entries(h)) total += e.free_rank + 2 * e.torsion.size();
    CHECK(total2 == total);
    chromkh_groups_free(m);
    chromkh_groups_free(o);
    chromkh_groups_free(h);
    chromkh_link_free(l);
}

TEST_CASE("error codes") {
    chromkh_graph* g = nullptr;
    CHECK(chromkh_graph_parse_json("{not json", &g) == CHROMKH_ERR_PARSE);
    CHECK(std::string(chromkh_last_error()).size() > 0);
    CHECK(chromkh_graph_load("/nonexistent/graph.json", &g) == CHROMKH_ERR_PARSE);
    chromkh_link* l = nullptr;
    CHECK(chromkh_link_parse_pd("X[1,2,3", &l) == CHROMKH_ERR_PARSE);
    CHECK(chromkh_link_parse_braid("BR[3,{1,5}]", &l) != CHROMKH_OK);
    CHECK(chromkh_graph_parse_json(nullptr, &g) == CHROMKH_ERR_INVALID);

    REQUIRE(chromkh_graph_load(data_file("k4.json").c_str(), &g) == CHROMKH_OK);
    chromkh_options opt;
    chromkh_options_init(&opt);
    opt.budget = 10;
    chromkh_groups* h = nullptr;
    CHECK(chromkh_chromatic(g, CHROMKH_THEORY_CHROMATIC, 1, &opt, &h) == CHROMKH_ERR_BUDGET);
    CHECK(h == nullptr);
    CHECK(chromkh_chromatic(g, static_cast<chromkh_theory>(7), 1, &opt, &h) == CHROMKH_ERR_INVALID);
    chromkh_graph_free(g);

    chromkh_report* r = nullptr;
    CHECK(chromkh_verify("no-such-suite", 1, 1, 0, &r) == CHROMKH_ERR_INVALID);
}

TEST_CASE("windowed link homology") {
    chromkh_link* l = nullptr;
    REQUIRE(chromkh_link_load_pd(data_file("8_4_1.pd").c_str(), &l) == CHROMKH_OK);
    chromkh_options opt;
    chromkh_options_init(&opt);
    opt.has_i_min = opt.has_i_max = 1;
    opt.i_min = opt.i_max = 4;
    chromkh_groups* h = nullptr;
    REQUIRE(chromkh_khovanov(l, &opt, &h) == CHROMKH_OK);
    for (const auto& e : entries(h)) CHECK(e.i == 4);
    chromkh_groups_free(h);
    chromkh_link_free(l);
}

TEST_CASE("suites and surveys") {
    REQUIRE(chromkh_suite_count() == 12);
    CHECK(std::string(chromkh_suite_name(0)) == "torsion-10-152");
    CHECK(chromkh_suite_name(12) == nullptr);
    chromkh_report* r = nullptr;
    REQUIRE(chromkh_verify("link-8-4-1", 20130101, 1, 0, &r) == CHROMKH_OK);
    CHECK(chromkh_report_passed(r) == 1);
    CHECK(chromkh_report_checked(r) > 0);
    chromkh_report_free(r);

    chromkh_options opt;
    chromkh_options_init(&opt);
    const char* words[] = {"BR[3,{1,1,2,2}]", "BR[2,{1,1,1}]"};
    chromkh_survey* s = nullptr;
    REQUIRE(chromkh_survey_words(words, 2, &opt, &s) == CHROMKH_OK);
    REQUIRE(chromkh_survey_count(s) == 2);
    size_t crossings = 0, components = 0;
    int adequate = 0, skipped = 0;
    REQUIRE(chromkh_survey_info(s, 1, &crossings, &components, &adequate, &skipped) == CHROMKH_OK);
    CHECK(crossings == 3);
    CHECK(skipped == 0);
    chromkh_groups* t = nullptr;
    REQUIRE(chromkh_survey_torsion(s, 1, &t) == CHROMKH_OK);
    CHECK(chromkh_groups_count(t) == 1);
    chromkh_groups_free(t);
    chromkh_survey_free(s);

    REQUIRE(chromkh_survey_three_braids(nullptr, 0, 4, 10, &opt, &s) == CHROMKH_OK);
    CHECK(chromkh_survey_count(s) == 0);
    chromkh_survey_free(s);
}
