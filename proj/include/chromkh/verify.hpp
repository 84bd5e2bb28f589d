#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chromkh {

struct VerifyOptions {
    std::uint64_t seed = 20130101;
    unsigned threads = 1;
    std::size_t budget = 5'000'000;
};

struct SuiteReport {
    std::string name;
    std::string title;
    bool passed = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // every failing instance
    std::vector<std::string> notes;     // computed values and known discrepancies
    double seconds = 0;
};

// Suites, in the order they are listed:
//   torsion-10-152  tor H_{8,16} and tor H_{6,12} of both braid words for 10_152
//   link-8-4-1      diagram checks and tor H_{4,8} of the pretzel link 8^4_1
//   main-lemma      H_{1,v-2} against its closed form on every labeled connected
//                   simple graph with at most 6 vertices and 200 seeded 7-vertex graphs
//   closed-forms    top and second diagonal closed forms on the same corpus
//   complete-wheel  K_n for n = 4..7 and W_n for n = 4..6
//   euler           Euler characteristics against the bracket and chromatic polynomial
//   correspondence  chromatic cohomology of state graphs against Khovanov homology
//   delta           modified complex lemmas on small multigraphs
//   braids          adequacy and Z2 torsion of positive 3-braid closures
//   invariance      Reidemeister moves, crossing order and edge order
//   uct             universal coefficients and two-diagonal support on graphs
//   z4              Z4 torsion of a 15-crossing 4-braid and the mod p pipeline
std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace chromkh
