#include "chromkh/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "chromkh/error.hpp"
#include "combinatorics.hpp"
#include "parallel.hpp"

namespace chromkh {

namespace {

using detail::binomial;
using detail::colex_rank;
using detail::reverse_bits;

// Components of [G:s], numbered by smallest vertex.
struct StateComponents {
    std::vector<std::uint32_t> of_vertex;
    std::uint32_t count = 0;
};

StateComponents state_components(const Multigraph& g, std::uint64_t s) {
    std::size_t v = g.vertex_count();
    std::vector<std::uint32_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t bits = s; bits; bits &= bits - 1) {
        const Edge& e = g.edge(static_cast<std::size_t>(__builtin_ctzll(bits)));
        auto a = find(e.u), b = find(e.w);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    StateComponents out;
    out.of_vertex.resize(v);
    std::vector<std::int64_t> id(v, -1);
    for (std::uint32_t x = 0; x < v; ++x) {
        auto r = find(x);
        if (id[r] < 0) id[r] = out.count++;
        out.of_vertex[x] = static_cast<std::uint32_t>(id[r]);
    }
    return out;
}

// Position of a label mask (bit c = component c labelled x) among masks with
// the same popcount, ordered lexicographically by label vector.
std::uint64_t label_rank(std::uint64_t mask, unsigned slots) { return colex_rank(reverse_bits(mask, slots)); }

constexpr std::size_t kMaxEdges = 63;

}  // namespace

ChromaticComplex::ChromaticComplex(Multigraph g, ChromaticVariant variant, CycleEdgeMap cycle_map,
                                   std::optional<std::uint64_t> relative_to)
    : g_(std::move(g)), variant_(variant), cycle_map_(cycle_map), relative_(relative_to) {
    if (g_.edge_count() > kMaxEdges) throw InvalidArgument("chromatic complexes are limited to 63 edges");
    if (g_.vertex_count() > 62) throw InvalidArgument("chromatic complexes are limited to 62 vertices");
    girth_ = girth(g_);
    top_ = static_cast<int>(g_.edge_count());
    if (variant_ == ChromaticVariant::kDelta && girth_) top_ = static_cast<int>(*girth_);
}

bool ChromaticComplex::in_complex(std::uint64_t s) const { return !relative_ || (s & ~*relative_) != 0; }

bool ChromaticComplex::tensor_state(int i, std::size_t components) const {
    if (variant_ != ChromaticVariant::kDelta || !girth_ || i != static_cast<int>(*girth_)) return false;
    // p1([G:s]) = |s| - v + p0 > 0
    return static_cast<std::size_t>(i) + components > g_.vertex_count();
}

std::size_t ChromaticComplex::count_degree(int i, std::size_t budget) const {
    if (i < 0 || i > top_) return 0;
    unsigned m = static_cast<unsigned>(g_.edge_count());
    if (binomial(m, static_cast<unsigned>(i)) > budget)
        throw BudgetError("budget exceeded: " + std::to_string(binomial(m, static_cast<unsigned>(i))) +
                          " states in degree " + std::to_string(i) + ", budget " + std::to_string(budget));
    std::size_t total = 0;
    std::uint64_t s = detail::low_bits(static_cast<unsigned>(i));
    for (std::uint64_t k = 0, n = binomial(m, static_cast<unsigned>(i)); k < n; ++k) {
        if (in_complex(s)) {
            auto comps = state_components(g_, s).count;
            total += std::size_t{1} << (comps + (tensor_state(i, comps) ? 1 : 0));
            if (total > budget)
                throw BudgetError("budget exceeded: more than " + std::to_string(budget) + " generators in degree " +
                                  std::to_string(i));
        }
        if (i > 0 && k + 1 < n) s = detail::next_same_popcount(s);
    }
    return total;
}

const ChromaticComplex::Group& ChromaticComplex::group(int i, int j) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = groups_[{i, j}];
    if (slot) return *slot;
    slot = std::make_unique<Group>();
    Group& grp = *slot;
    if (i < 0 || i > top_) return grp;
    unsigned m = static_cast<unsigned>(g_.edge_count());
    std::uint64_t s = detail::low_bits(static_cast<unsigned>(i));
    for (std::uint64_t k = 0, n = binomial(m, static_cast<unsigned>(i)); k < n; ++k) {
        if (in_complex(s)) {
            auto comps = state_components(g_, s).count;
            bool tensor = tensor_state(i, comps);
            unsigned slots = comps + (tensor ? 1 : 0);
            int xs = j + (tensor ? 1 : 0);
            if (xs >= 0 && static_cast<unsigned>(xs) <= slots) {
                grp.index[s] = grp.blocks.size();
                grp.blocks.push_back({s, slots, grp.size});
                grp.size += binomial(slots, static_cast<unsigned>(xs));
            }
        }
        if (i > 0 && k + 1 < n) s = detail::next_same_popcount(s);
    }
    return grp;
}

std::size_t ChromaticComplex::dimension(int i, int j) const { return group(i, j).size; }

IntMatrix ChromaticComplex::differential(int i, int j) const {
    const Group& src = group(i, j);
    const Group& dst = group(i + 1, j);
    std::vector<Triplet> entries;
    if (src.size == 0 || dst.size == 0) return IntMatrix(dst.size, src.size);
    std::size_t m = g_.edge_count();
    for (const auto& block : src.blocks) {
        std::uint64_t s = block.state;
        auto comps = state_components(g_, s);
        unsigned xs = static_cast<unsigned>(j + (block.slots > comps.count ? 1 : 0));
        for (std::size_t e = 0; e < m; ++e) {
            if (s >> e & 1) continue;
            std::uint64_t t = s | (1ULL << e);
            auto found = dst.index.find(t);
            if (found == dst.index.end()) continue;
            const Block& target = dst.blocks[found->second];
            int sign = __builtin_popcountll(s & detail::low_bits(static_cast<unsigned>(e))) % 2 ? -1 : 1;
            std::uint32_t cu = comps.of_vertex[g_.edge(e).u], cw = comps.of_vertex[g_.edge(e).w];
            bool merge = cu != cw;
            if (!merge && cycle_map_ == CycleEdgeMap::kZero && target.slots == comps.count) continue;
            if (merge && cu > cw) std::swap(cu, cw);
            bool delta = !merge && target.slots > comps.count;  // comultiplication into a tensor label
            // Enumerate source label masks in lexicographic label order.
            std::uint64_t r = detail::low_bits(xs);
            std::uint64_t count = binomial(block.slots, xs);
            for (std::uint64_t col = 0; col < count; ++col) {
                std::uint64_t mask = reverse_bits(r, block.slots);
                auto emit = [&](std::uint64_t tmask) {
                    entries.push_back({static_cast<std::uint32_t>(target.offset + label_rank(tmask, target.slots)),
                                       static_cast<std::uint32_t>(block.offset + col), Integer(sign)});
                };
                if (merge) {
                    bool xu = mask >> cu & 1, xw = mask >> cw & 1;
                    if (!(xu && xw)) {
                        // drop slot cw, shift the later ones down, merged label at cu
                        std::uint64_t low = mask & detail::low_bits(cw), high = mask >> (cw + 1);
                        std::uint64_t tmask = low | (high << cw);
                        if (xw) tmask |= 1ULL << cu;
                        emit(tmask);
                    }
                } else if (delta) {
                    std::uint64_t extra = 1ULL << comps.count;
                    if (mask >> cu & 1)
                        emit(mask | extra);  // x -> x(x)x
                    else {
                        emit(mask | extra);        // 1 -> 1(x)x
                        emit(mask | 1ULL << cu);  //    + x(x)1
                    }
                } else {
                    emit(mask);
                }
                if (xs > 0 && col + 1 < count) r = detail::next_same_popcount(r);
            }
        }
    }
    return IntMatrix(dst.size, src.size, std::move(entries));
}

// ---------------------------------------------------------------------------

ChromaticResult chromatic_groups(const Multigraph& g, const ChromaticOptions& opt) {
    ChromaticComplex cx(g, opt.variant, opt.cycle_map, opt.relative_to);
    int lo = std::max(0, opt.i_min.value_or(0));
    int hi = std::min(cx.top_degree(), opt.i_max.value_or(cx.top_degree()));
    ChromaticResult out;
    if (lo > hi) return out;
    // Budget over every degree touched, then build the bases serially.
    std::size_t total = 0;
    for (int i = lo - 1; i <= hi + 1; ++i) total += cx.count_degree(i, opt.budget);
    if (total > opt.budget)
        throw BudgetError("budget exceeded: " + std::to_string(total) + " generators needed, budget " +
                          std::to_string(opt.budget));
    std::vector<Bidegree> targets, maps;
    for (int i = lo; i <= hi; ++i)
        for (int j = std::max(cx.j_min(), opt.j_min.value_or(cx.j_min())); j <= std::min(cx.j_max(), opt.j_max.value_or(cx.j_max())); ++j)
            if (cx.dimension(i, j)) targets.push_back({i, j});
    std::set<Bidegree> needed;
    for (auto [i, j] : targets) {
        needed.insert({i - 1, j});
        needed.insert({i, j});
    }
    maps.assign(needed.begin(), needed.end());
    for (auto [i, j] : maps) {
        cx.dimension(i, j);
        cx.dimension(i + 1, j);
    }
    std::vector<IntMatrix> mats(maps.size());
    std::vector<SmithForm> smith(maps.size());
    detail::parallel_for(maps.size(), opt.threads, [&](std::size_t k) {
        mats[k] = cx.differential(maps[k].first, maps[k].second);
        smith[k] = smith_normal_form(mats[k]);
    });
    std::map<Bidegree, std::size_t> by_deg;
    for (std::size_t k = 0; k < maps.size(); ++k) by_deg[maps[k]] = k;
    // One Smith form per map serves both directions: M and its transpose
    // share invariant factors.
    std::vector<AbelianGroup> co(targets.size()), ho(targets.size());
    detail::parallel_for(targets.size(), opt.threads, [&](std::size_t k) {
        auto [i, j] = targets[k];
        std::size_t prev = by_deg.at({i - 1, j}), here = by_deg.at({i, j});
        check_composable(mats[prev], mats[here]);
        std::size_t middle = mats[here].cols();
        co[k] = homology_from_smith(smith[prev], middle, smith[here].rank);
        ho[k] = homology_from_smith(smith[here], middle, smith[prev].rank);
    });
    for (std::size_t k = 0; k < targets.size(); ++k) {
        set_group(out.cohomology, targets[k].first, targets[k].second, co[k]);
        set_group(out.homology, targets[k].first, targets[k].second, ho[k]);
    }
    return out;
}

BigradedGroups chromatic_cohomology(const Multigraph& g, const ChromaticOptions& opt) {
    return chromatic_groups(g, opt).cohomology;
}

BigradedGroups chromatic_homology(const Multigraph& g, const ChromaticOptions& opt) {
    return chromatic_groups(g, opt).homology;
}

// ---------------------------------------------------------------------------

namespace {

GraphInvariants simple_invariants(const Multigraph& g, bool connected) {
    if (!g.is_simple()) throw InvalidArgument("closed form needs a simple graph");
    auto inv = invariants(g);
    if (connected && inv.p0 != 1) throw InvalidArgument("closed form needs a connected graph");
    return inv;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

std::size_t nonneg(long long x, const char* what) {
    if (x < 0) throw AssertionFailure(std::string("negative exponent in ") + what);
    return static_cast<std::size_t>(x);
}

}  // namespace

AbelianGroup predict_h0_top_homology(const Multigraph& g) {
    auto inv = simple_invariants(g, true);
    return inv.bipartite ? AbelianGroup::free(1) : AbelianGroup::free_plus_z2(0, 1);
}

TopDiagonalPrediction predict_top_cohomology(const Multigraph& g) {
    auto inv = simple_invariants(g, false);
    std::size_t nbi = inv.p0 - inv.p0_bi;
    return {AbelianGroup::free(inv.p0_bi),
            AbelianGroup::free_plus_z2(nonneg(static_cast<long long>(inv.p1) - static_cast<long long>(nbi), "H^{1,v-1}"), nbi)};
}

AbelianGroup predict_h1_second_diagonal(const Multigraph& g) {
    auto inv = simple_invariants(g, true);
    if (inv.bipartite) return AbelianGroup::free_plus_z2(0, inv.p1);
    return AbelianGroup::free_plus_z2(1, inv.p1 - 1);
}

SecondDiagonalPrediction predict_second_diagonal(const Multigraph& g) {
    auto inv = simple_invariants(g, true);
    long long p1 = static_cast<long long>(inv.p1), t3 = static_cast<long long>(inv.t3);
    SecondDiagonalPrediction r;
    r.homology1 = predict_h1_second_diagonal(g);
    long long free2 = choose2(p1) - t3 + (inv.bipartite ? 0 : 1);
    r.homology2 = AbelianGroup::free(nonneg(free2, "H_{2,v-2}"));
    r.cohomology1 = r.homology1.free_part();
    r.cohomology2 = r.homology2.direct_sum(r.homology1.torsion_part());
    return r;
}

DisjointUnionPrediction predict_disjoint_union(const Multigraph& g) {
    auto inv = simple_invariants(g, false);
    DisjointUnionPrediction r;
    // Per component: H^{1,v-1} and H^{2,v-2}; H^{0,v} = Z is the unit.
    std::vector<AbelianGroup> h1, h2;
    for (const auto& c : components(g)) {
        auto ci = invariants(c);
        if (ci.bipartite) {
            h1.push_back(AbelianGroup::free(ci.p1));
        } else {
            h1.push_back(AbelianGroup::free_plus_z2(ci.p1 - 1, 1));
        }
        if (c.edge_count() == 0)
            h2.push_back(AbelianGroup());
        else
            h2.push_back(predict_second_diagonal(c).cohomology2);
    }
    AbelianGroup total;
    for (std::size_t a = 0; a < h1.size(); ++a) {
        total = total.direct_sum(h2[a]);
        for (std::size_t b = a + 1; b < h1.size(); ++b) total = total.direct_sum(h1[a].tensor(h1[b]));
    }
    r.kunneth = total;
    auto split = bipartite_split(g);
    long long p1_bi = static_cast<long long>(invariants(split.bipartite).p1);
    auto nbi_inv = invariants(split.non_bipartite);
    long long n_nbi = static_cast<long long>(inv.p0 - inv.p0_bi);
    long long p1 = static_cast<long long>(inv.p1), t3 = static_cast<long long>(inv.t3);
    long long cn = choose2(n_nbi + 1);
    r.torsion_rederived = nonneg(p1_bi + n_nbi * p1 - cn, "the disjoint-union torsion");
    r.torsion_printed = p1_bi + n_nbi * p1 + cn;
    r.free_printed = choose2(p1 + 1) - r.torsion_printed - t3;
    long long q1 = static_cast<long long>(nbi_inv.p1), qt3 = static_cast<long long>(nbi_inv.t3);
    r.nonbipartite_torsion_stated = n_nbi * q1 - cn;
    r.nonbipartite_torsion_derived = n_nbi * q1 + cn;
    r.nonbipartite_alpha_stated = choose2(q1 + 1) - (n_nbi - 1) * q1 - cn;
    r.nonbipartite_alpha_derived = r.nonbipartite_alpha_stated - qt3;
    return r;
}

CompleteGraphPrediction predict_complete_graph_h2(std::size_t n) {
    if (n < 4) throw InvalidArgument("complete-graph formula needs n >= 4");
    auto nn = static_cast<unsigned>(n);
    std::size_t first = n * (n - 3) / 2;
    std::size_t second = nonneg(3 * static_cast<long long>(binomial(nn, 4)) + 1 - static_cast<long long>(binomial(nn, 3)),
                                "the complete-graph formula");
    return {AbelianGroup::free_plus_z2(second, first), AbelianGroup::free(first + second)};
}

WheelPrediction predict_wheel_h2(std::size_t n) {
    if (n < 4) throw InvalidArgument("wheel formula needs n >= 4");
    auto c = static_cast<long long>(binomial(static_cast<unsigned>(n - 1), 2));
    WheelPrediction r;
    r.printed = AbelianGroup::free_plus_z2(nonneg(c - static_cast<long long>(n) + 1, "the printed wheel formula"), n - 2);
    r.derived = AbelianGroup::free_plus_z2(static_cast<std::size_t>(c), n - 1);
    return r;
}

}  // namespace chromkh
