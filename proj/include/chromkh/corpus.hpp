#pragma once

// Diagrams and graph families used by the verification suites and tests.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chromkh/graph.hpp"
#include "chromkh/link.hpp"

namespace chromkh::corpus {

// Pretzel link P(2,2,2,2): four components, eight crossings, alternating.
inline const char* kLink8_4_1 =
    "X[10,1,4,9]; X[5,10,9,8]; X[12,2,1,11]; X[6,12,11,5]; "
    "X[14,3,2,13]; X[7,14,13,6]; X[16,4,3,15]; X[8,16,15,7]";

inline const char* k10_152_a = "BR[3,{1,1,1,2,2,2,1,1,2,2}]";
inline const char* k10_152_b = "BR[3,{1,1,1,2,2,1,1,2,2,2}]";

inline std::vector<std::pair<std::string, LinkDiagram>> diagrams() {
    std::vector<std::pair<std::string, LinkDiagram>> out;
    out.emplace_back("unknot", parse_pd("Loop[1]"));
    out.emplace_back("unlink2", parse_pd("Loop[2]"));
    out.emplace_back("kink+", parse_pd("X[1,1,2,2]"));
    out.emplace_back("kink-", parse_pd("X[1,2,2,1]"));
    out.emplace_back("two kinks", parse_pd("X[1,1,2,3]; X[3,4,4,2]"));
    out.emplace_back("8_4_1", parse_pd(kLink8_4_1));
    const char* braids[][2] = {
        {"sigma1 closure", "BR[2,{1}]"},
        {"hopf", "BR[2,{1,1}]"},
        {"hopf mirror", "BR[2,{-1,-1}]"},
        {"trefoil", "BR[2,{1,1,1}]"},
        {"trefoil mirror", "BR[2,{-1,-1,-1}]"},
        {"T(2,4)", "BR[2,{1,1,1,1}]"},
        {"cinquefoil", "BR[2,{1,1,1,1,1}]"},
        {"figure eight", "BR[3,{1,-2,1,-2}]"},
        {"5_2", "BR[3,{1,1,1,2,-1,2}]"},
        {"6_2", "BR[3,{1,1,1,-2,1,-2}]"},
        {"6_3", "BR[3,{1,1,-2,1,-2,-2}]"},
        {"6_1", "BR[4,{1,1,2,-1,-3,2,-3}]"},
        {"borromean", "BR[3,{1,-2,1,-2,1,-2}]"},
        {"whitehead-ish", "BR[3,{1,1,-2,1,1,-2}]"},
        {"T(3,4)", "BR[3,{1,2,1,2,1,2,1,2}]"},
        {"3-braid 2,2", "BR[3,{1,1,2,2}]"},
        {"3-braid 2,3", "BR[3,{1,1,2,2,2}]"},
        {"3-braid 3,3", "BR[3,{1,1,1,2,2,2}]"},
        {"3-braid 2,2,2,2", "BR[3,{1,1,2,2,1,1,2,2}]"},
        {"split 3-braid", "BR[3,{1,1,1}]"},
        {"10_152 word a", k10_152_a},
        {"10_152 word b", k10_152_b},
    };
    for (auto& b : braids) out.emplace_back(b[0], braid_closure(parse_braid(b[1])));
    return out;
}

inline constexpr std::uint64_t kDefaultSeed = 20130101;

// Every labeled connected simple graph on 1..6 vertices, then `random7`
// seeded connected graphs on 7 vertices.
inline std::vector<Multigraph> labeled_connected_corpus(std::uint64_t seed = kDefaultSeed, std::size_t random7 = 200) {
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto& g : labeled_simple_graphs(n, true)) out.push_back(std::move(g));
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random7; ++k) out.push_back(random_connected_graph(7, rng));
    return out;
}

// Graphs whose full homology is computed: simple graphs up to isomorphism on
// at most max_n vertices (disconnected ones included), seeded 7-vertex
// graphs, named families and a few multigraphs.
inline std::vector<std::pair<std::string, Multigraph>> full_graph_corpus(std::size_t max_n = 6, std::uint64_t seed = kDefaultSeed,
                                                                         std::size_t random7 = 200) {
    std::vector<std::pair<std::string, Multigraph>> out;
    std::size_t k = 0;
    for (auto& g : simple_graphs_up_to_iso(max_n, false)) out.emplace_back("iso#" + std::to_string(k++), std::move(g));
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < random7; ++r) out.emplace_back("random7#" + std::to_string(r), random_connected_graph(7, rng));
    out.emplace_back("C7", cycle(7));
    out.emplace_back("C8", cycle(8));
    out.emplace_back("W5", wheel(5));
    out.emplace_back("W6", wheel(6));
    out.emplace_back("P8", path(8));
    out.emplace_back("K3+C4", disjoint_union(complete_graph(3), cycle(4)));
    out.emplace_back("K3+K3", disjoint_union(complete_graph(3), complete_graph(3)));
    out.emplace_back("K4*C4", one_vertex_product(complete_graph(4), cycle(4)));
    out.emplace_back("dipole", Multigraph(2, {{0, 1}, {0, 1}}));
    out.emplace_back("triple edge", Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}));
    out.emplace_back("theta with chord", Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 2}}));
    out.emplace_back("loop", Multigraph(1, {{0, 0}}));
    out.emplace_back("loop on edge", Multigraph(2, {{0, 1}, {1, 1}}));
    return out;
}

}  // namespace chromkh::corpus
