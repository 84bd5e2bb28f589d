#include "chromkh/correspondence.hpp"

#include <algorithm>

#include "chromkh/error.hpp"

namespace chromkh {

bool CorrespondenceReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const CorrespondenceEntry& e) { return e.ok; });
}

namespace {

LinkDiagram oriented_side(const LinkDiagram& d, StateSide side) { return side == StateSide::kPlus ? d : mirror(d); }

}  // namespace

CorrespondenceReport correspondence_check(const LinkDiagram& d, StateSide side, ChromaticVariant variant,
                                          const KhovanovOptions& kh) {
    LinkDiagram dk = oriented_side(d, side);
    CorrespondenceReport r;
    r.graph = state_graph(dk, dk.all_plus());
    if (r.graph.has_loop()) throw InvalidArgument("the state graph has a loop; the diagram is not adequate in that state");
    r.girth = girth(r.graph);
    int e = static_cast<int>(r.graph.edge_count());
    int v = static_cast<int>(r.graph.vertex_count());
    // Last degree compared and the first degree where only torsion is compared.
    int threshold;
    if (!r.girth)
        threshold = e + 1;
    else
        threshold = static_cast<int>(*r.girth) - (variant == ChromaticVariant::kPlain ? 1 : 0);
    int last = std::min(threshold, e);

    ChromaticOptions co;
    co.variant = variant;
    co.i_max = last;
    co.threads = kh.threads;
    co.budget = kh.budget;
    auto chrom = chromatic_cohomology(r.graph, co);

    KhovanovOptions ko = kh;
    ko.i_min = e - 2 * last;
    ko.i_max = e;
    auto khov = khovanov_homology(dk, ko);

    for (int i = 0; i <= last; ++i)
        for (int j = -1; j <= v + 1; ++j) {
            CorrespondenceEntry en;
            en.i = i;
            en.j = j;
            en.a = e - 2 * i;
            en.b = e - 2 * v + 4 * j;
            en.chromatic = group_at(chrom, i, j);
            en.khovanov = group_at(khov, en.a, en.b);
            en.torsion_only = i == threshold;
            if (en.chromatic.is_trivial() && en.khovanov.is_trivial()) continue;
            en.ok = en.torsion_only ? en.chromatic.torsion_part() == en.khovanov.torsion_part() : en.chromatic == en.khovanov;
            r.entries.push_back(std::move(en));
        }
    // Khovanov groups in the compared columns must all be accounted for.
    for (const auto& [deg, g] : khov) {
        auto [a, b] = deg;
        int i = (e - a) / 2;
        if ((e - a) % 2 != 0 || i < 0 || i > last) continue;
        int shifted = b - e + 2 * v;
        if (shifted % 4 == 0 && shifted / 4 >= -1 && shifted / 4 <= v + 1) continue;  // compared above
        CorrespondenceEntry en;
        en.i = i;
        en.j = shifted / 4;
        en.a = a;
        en.b = b;
        en.khovanov = g;
        en.torsion_only = i == threshold;
        en.ok = en.torsion_only && g.is_free();
        r.entries.push_back(std::move(en));
    }
    return r;
}

AdequateTorsionPrediction predict_adequate_torsion(const LinkDiagram& d, StateSide side) {
    LinkDiagram dk = oriented_side(d, side);
    AdequateTorsionPrediction p;
    p.graph = state_graph(dk, dk.all_plus());
    if (p.graph.has_loop()) throw InvalidArgument("the diagram is not adequate in the requested state");
    p.n = dk.crossing_count();
    p.circles = p.graph.vertex_count();
    p.simple_graph = simplify(p.graph);
    auto inv = invariants(p.graph);
    auto sinv = invariants(p.simple_graph);
    p.connected = inv.p0 == 1;
    int n = static_cast<int>(p.n), c = static_cast<int>(p.circles);
    p.outer = {n, n + 2 * c};
    p.first = {n - 2, n + 2 * c - 4};
    p.second = {n - 4, n + 2 * c - 8};
    p.first_torsion = inv.bipartite ? AbelianGroup() : AbelianGroup::free_plus_z2(0, 1);
    if (p.connected && p.simple_graph.edge_count() > 0)
        p.second_torsion = predict_h1_second_diagonal(p.simple_graph).torsion_part();
    auto split = bipartite_split(p.simple_graph);
    long long p1_bi = static_cast<long long>(invariants(split.bipartite).p1);
    long long nbi = static_cast<long long>(sinv.p0 - sinv.p0_bi);
    long long cn = nbi * (nbi + 1) / 2;
    long long rederived = p1_bi + nbi * static_cast<long long>(sinv.p1) - cn;
    p.second_exponent_rederived = rederived < 0 ? 0 : static_cast<std::size_t>(rederived);
    p.second_exponent_printed = static_cast<long long>(sinv.p1) + nbi * static_cast<long long>(inv.p1) - cn;
    return p;
}

}  // namespace chromkh
