#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromkh/chromatic.hpp"
#include "chromkh/khovanov.hpp"
#include "chromkh/link.hpp"

namespace chromkh {

// Which all-equal state supplies the graph. For s_minus the diagram is
// mirrored first: G_{s-}(D) = G_{s+}(mirror D), and Khovanov groups are taken
// of mirror(D).
enum class StateSide { kPlus, kMinus };

struct CorrespondenceEntry {
    int i = 0, j = 0;  // chromatic bidegree
    int a = 0, b = 0;  // Khovanov bidegree a = E - 2i, b = E - 2v + 4j
    AbelianGroup chromatic, khovanov;
    bool torsion_only = false;
    bool ok = false;
};

struct CorrespondenceReport {
    Multigraph graph;
    std::optional<std::size_t> girth;
    std::vector<CorrespondenceEntry> entries;
    bool ok() const;
};

// Compares chromatic cohomology of G = G_{s+} with Khovanov homology of the
// diagram: isomorphism for i < l - 1 and torsion at i = l - 1 for the plain
// complex; isomorphism for i < l and torsion at i = l for the modified one.
// Forests are compared in every degree. Requires a loopless state graph.
CorrespondenceReport correspondence_check(const LinkDiagram& d, StateSide side, ChromaticVariant variant,
                                          const KhovanovOptions& kh = {});

// Torsion predicted for a +-adequate diagram from G = G_{s+}(D) and its
// simplification G'.
struct AdequateTorsionPrediction {
    std::size_t n = 0;        // crossings
    std::size_t circles = 0;  // |D_{s+}|
    Multigraph graph, simple_graph;
    bool connected = true;
    Bidegree outer{}, first{}, second{};  // (n, n+2c), (n-2, n+2c-4), (n-4, n+2c-8)
    // tor at `first`: Z2 when G has an odd cycle, else 0 (connected G).
    AbelianGroup first_torsion;
    // tor at `second` for connected G': Z2^{p1(G')-1} or Z2^{p1(G')}.
    AbelianGroup second_torsion;
    // Several components: exponent p1(G'_bi) + N p1(G') - C(N+1,2) and the
    // printed p1(G') + N p1(G) - C(N+1,2), N the non-bipartite components.
    std::size_t second_exponent_rederived = 0;
    long long second_exponent_printed = 0;
};
AdequateTorsionPrediction predict_adequate_torsion(const LinkDiagram& d, StateSide side = StateSide::kPlus);

}  // namespace chromkh
