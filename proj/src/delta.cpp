#include "chromkh/delta.hpp"

namespace chromkh {

ChromaticResult delta_groups(const Multigraph& g, ChromaticOptions opt) {
    opt.variant = ChromaticVariant::kDelta;
    return chromatic_groups(g, opt);
}

BigradedGroups delta_cohomology(const Multigraph& g, ChromaticOptions opt) { return delta_groups(g, opt).cohomology; }

BigradedGroups delta_homology(const Multigraph& g, ChromaticOptions opt) { return delta_groups(g, opt).homology; }

DeltaComparison compare_delta(const Multigraph& g, unsigned threads) {
    DeltaComparison r;
    int v = static_cast<int>(g.vertex_count());
    auto l = girth(g);
    ChromaticOptions opt;
    opt.threads = threads;
    opt.i_max = l ? static_cast<int>(*l) : 2;
    if (opt.i_max < 2) opt.i_max = 2;
    auto delta = delta_groups(g, opt);
    auto plain = chromatic_groups(g, opt);
    r.loopless = !g.has_loop();
    r.h1_delta = group_at(delta.homology, 1, v - 2);
    r.h1_plain = group_at(plain.homology, 1, v - 2);
    r.tor2_delta = group_at(delta.cohomology, 2, v - 2).torsion_part();
    r.tor2_plain = group_at(plain.cohomology, 2, v - 2).torsion_part();
    r.loop_h0 = group_at(delta.homology, 0, v - 1);
    r.loop_h1 = group_at(delta.cohomology, 1, v - 1);
    int below = l ? static_cast<int>(*l) - 1 : *opt.i_max;
    for (int i = 0; i <= below; ++i)
        for (int j = -1; j <= v + 1; ++j) {
            auto a = group_at(delta.cohomology, i, j), b = group_at(plain.cohomology, i, j);
            if (a != b)
                r.below_girth_mismatches.push_back("H^{" + std::to_string(i) + "," + std::to_string(j) + "}: " + a.str() +
                                                   " vs " + b.str());
            a = group_at(delta.homology, i, j);
            b = group_at(plain.homology, i, j);
            if (a != b)
                r.below_girth_mismatches.push_back("H_{" + std::to_string(i) + "," + std::to_string(j) + "}: " + a.str() +
                                                   " vs " + b.str());
        }
    return r;
}

}  // namespace chromkh
