#pragma once

#include <string>
#include <vector>

#include "chromkh/chromatic.hpp"

namespace chromkh {

// Chromatic complex with one comultiplication, truncated at the girth.
// Forests have no cycle to close and get the plain complex.
ChromaticResult delta_groups(const Multigraph& g, ChromaticOptions opt = {});
BigradedGroups delta_cohomology(const Multigraph& g, ChromaticOptions opt = {});
BigradedGroups delta_homology(const Multigraph& g, ChromaticOptions opt = {});

// Comparison of the modified and plain groups of one graph.
struct DeltaComparison {
    // H_{1,v-2}: modified vs plain (loopless graphs).
    AbelianGroup h1_delta, h1_plain;
    // tor H^{2,v-2}: modified vs plain (loopless graphs).
    AbelianGroup tor2_delta, tor2_plain;
    // Degrees below the girth where the two complexes disagree, as text.
    std::vector<std::string> below_girth_mismatches;
    // Graphs with a loop: modified H_{0,v-1} and H^{1,v-1}.
    AbelianGroup loop_h0, loop_h1;

    bool loopless = true;
    bool h1_agrees() const { return h1_delta == h1_plain; }
    bool torsion_agrees() const { return tor2_delta == tor2_plain; }
    // For graphs with a loop: H_{0,v-1} = 0 and H^{1,v-1} torsion free.
    bool loop_facts_hold() const { return loop_h0.is_trivial() && loop_h1.is_free(); }
};
DeltaComparison compare_delta(const Multigraph& g, unsigned threads = 1);

}  // namespace chromkh
