#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "chromkh/khovanov.hpp"
#include "chromkh/link.hpp"

namespace chromkh {

// 3-braids sigma_{g1}^{a1} sigma_{g2}^{a2} ... with alternating generators
// starting at sigma_1, 1..max_syllables syllables, exponents from
// `exponents`, total crossings <= max_crossings. Negative exponents give
// inverse letters; all syllables share the sign of the first exponent.
std::vector<BraidWord> three_braid_family(const std::vector<int>& exponents, std::size_t max_syllables,
                                          std::size_t max_crossings);

struct SurveyEntry {
    std::string braid;
    std::size_t crossings = 0;
    std::size_t components = 0;
    bool adequate_plus = false, adequate_minus = false;
    bool predicted_adequate = false, predicts_z2 = false;
    bool skipped = false;
    std::string skip_reason;
    // Torsion subgroups, by bidegree (framed convention).
    BigradedGroups torsion;
    // Distinct invariant factors seen.
    std::set<std::string> torsion_orders;
    bool only_z2() const;
};

// Integer Khovanov homology of every closure; entries over budget are kept
// with skipped = true.
std::vector<SurveyEntry> survey_braids(const std::vector<BraidWord>& family, const KhovanovOptions& opt = {});

}  // namespace chromkh
