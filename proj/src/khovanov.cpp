#include "chromkh/khovanov.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "chromkh/error.hpp"
#include "combinatorics.hpp"
#include "parallel.hpp"

namespace chromkh {

namespace {

constexpr std::size_t kMaxCrossings = 30;

using detail::binomials;
using detail::colex_rank;

int sigma(KauffmanState s, std::size_t n) { return 2 * __builtin_popcountll(s) - static_cast<int>(n); }

// Circle of every circle of `from` under the identification with `to`, for
// circles away from crossing k. Free loops keep their position at the end.
std::vector<std::uint32_t> circle_map(const LinkDiagram& d, const SmoothingResult& from, const SmoothingResult& to) {
    std::size_t loops = d.free_loops();
    std::vector<std::uint32_t> image(from.circles, 0);
    std::size_t arc_circles = from.circles - loops;
    for (std::size_t a = from.arc_circle.size(); a-- > 0;) image[from.arc_circle[a]] = to.arc_circle[a];
    for (std::size_t t = 0; t < loops; ++t) image[arc_circles + t] = static_cast<std::uint32_t>(to.circles - loops + t);
    return image;
}

}  // namespace

std::size_t default_budget() {
    if (const char* env = std::getenv("CHROMKH_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 5'000'000;
}

KhovanovComplex::KhovanovComplex(const LinkDiagram& d) : d_(d) {
    std::size_t n = d.crossing_count();
    if (n > kMaxCrossings) throw BudgetError("Khovanov complexes are limited to 30 crossings");
    std::size_t states = std::size_t{1} << n;
    circles_.resize(states);
    for (KauffmanState s = 0; s < states; ++s) {
        auto c = smooth(d, s).circles;
        if (c > 60) throw BudgetError("too many circles in a smoothing");
        circles_[s] = static_cast<std::uint8_t>(c);
    }
    for (KauffmanState s = 0; s < states; ++s) {
        int i = sigma(s, n);
        int c = circles_[s];
        for (int m = 0; m <= c; ++m) {
            int j = i + 2 * (c - 2 * m);
            auto& g = groups_[{i, j}];
            g.blocks.push_back({s, static_cast<std::uint32_t>(m), g.size});
            g.offset_of[s] = g.size;
            g.size += binomials().c[c][m];
        }
    }
}

const KhovanovComplex::Group* KhovanovComplex::group(int i, int j) const {
    auto it = groups_.find({i, j});
    return it == groups_.end() ? nullptr : &it->second;
}

std::size_t KhovanovComplex::dimension(int i, int j) const {
    auto g = group(i, j);
    return g ? g->size : 0;
}

std::set<Bidegree> KhovanovComplex::support() const {
    std::set<Bidegree> out;
    for (const auto& [deg, g] : groups_) out.insert(deg);
    return out;
}

std::size_t KhovanovComplex::total_dimension() const {
    std::size_t t = 0;
    for (const auto& [deg, g] : groups_) t += g.size;
    return t;
}

IntMatrix KhovanovComplex::differential(int i, int j) const {
    const Group* src = group(i, j);
    const Group* dst = group(i - 2, j);
    IntMatrix out(dst ? dst->size : 0, src ? src->size : 0);
    if (!src || !dst) return out;
    std::size_t n = d_.crossing_count();
    std::vector<Triplet> entries;
    for (const auto& block : src->blocks) {
        auto from = smooth(d_, block.state);
        std::uint32_t c = static_cast<std::uint32_t>(from.circles);
        for (std::size_t k = 0; k < n; ++k) {
            if (!(block.state >> k & 1)) continue;
            KauffmanState target = block.state & ~(KauffmanState{1} << k);
            auto to = smooth(d_, target);
            auto at = dst->offset_of.find(target);
            if (at == dst->offset_of.end()) continue;  // no generators of this j there
            std::size_t base = at->second;
            // (-1)^(number of -1 markers after k)
            KauffmanState later = ~block.state & (n >= 64 ? ~0ULL : (KauffmanState{1} << n) - 1) & ~((KauffmanState{2} << k) - 1);
            int sign = __builtin_popcountll(later) % 2 ? -1 : 1;
            auto image = circle_map(d_, from, to);
            auto [ca, cc] = from.incident[k];
            auto [ta, tc] = to.incident[k];
            bool merge = ca != cc && ta == tc;
            bool split = ca == cc && ta != tc;
            if (!merge && !split)
                throw AssertionFailure("changing the marker at crossing " + std::to_string(k) +
                                       " keeps the circle count; the PD code is not planar");
            std::uint64_t touched = (1ULL << ca) | (1ULL << cc);
            // Enumerate masks of negative circles with block.negatives bits.
            std::uint32_t m = block.negatives;
            std::uint64_t mask = m == 0 ? 0 : (m >= 64 ? ~0ULL : (1ULL << m) - 1);
            std::uint64_t count = binomials().c[c][m];
            for (std::uint64_t col = 0; col < count; ++col) {
                std::uint64_t rest = 0;
                for (std::uint64_t bits = mask & ~touched; bits; bits &= bits - 1)
                    rest |= 1ULL << image[__builtin_ctzll(bits)];
                auto emit = [&](std::uint64_t tmask) {
                    entries.push_back({static_cast<std::uint32_t>(base + colex_rank(tmask)),
                                       static_cast<std::uint32_t>(block.offset + col), Integer(sign)});
                };
                if (merge) {
                    int negs = (mask >> ca & 1) + (mask >> cc & 1);
                    if (negs == 2)
                        emit(rest | 1ULL << ta);
                    else if (negs == 1)
                        emit(rest);
                } else if (mask >> ca & 1) {
                    emit(rest | 1ULL << ta);
                    emit(rest | 1ULL << tc);
                } else {
                    emit(rest);
                }
                if (m > 0 && m < 64) mask = detail::next_same_popcount(mask);
            }
        }
    }
    return IntMatrix(out.rows(), out.cols(), std::move(entries));
}

namespace {

struct Plan {
    std::vector<Bidegree> targets;  // bidegrees whose homology is wanted
    std::vector<Bidegree> maps;     // differentials d_{i,j} to build
};

Plan plan_window(const KhovanovComplex& cx, const KhovanovOptions& opt) {
    Plan plan;
    std::set<Bidegree> maps, groups;
    for (const auto& deg : cx.support()) {
        auto [i, j] = deg;
        if (opt.i_min && i < *opt.i_min) continue;
        if (opt.i_max && i > *opt.i_max) continue;
        if (opt.j_min && j < *opt.j_min) continue;
        if (opt.j_max && j > *opt.j_max) continue;
        plan.targets.push_back(deg);
        maps.insert({i, j});
        maps.insert({i + 2, j});
        groups.insert({i - 2, j});
        groups.insert({i, j});
        groups.insert({i + 2, j});
    }
    std::size_t total = 0;
    for (const auto& [i, j] : groups) total += cx.dimension(i, j);
    if (total > opt.budget) {
        std::ostringstream msg;
        msg << "budget exceeded: " << total << " generators needed, budget " << opt.budget << "; largest groups:";
        std::vector<std::pair<std::size_t, Bidegree>> sizes;
        for (const auto& [i, j] : groups) sizes.push_back({cx.dimension(i, j), {i, j}});
        std::sort(sizes.rbegin(), sizes.rend());
        for (std::size_t k = 0; k < std::min<std::size_t>(3, sizes.size()); ++k)
            msg << " C(" << sizes[k].second.first << "," << sizes[k].second.second << ")=" << sizes[k].first;
        throw BudgetError(msg.str());
    }
    plan.maps.assign(maps.begin(), maps.end());
    return plan;
}

// `reduce` turns one differential into a per-map summary (a Smith form, a
// rank mod p); `combine` assembles a target from the summaries of d_in, d_out.
template <class Result, class Summary, class Reduce, class Combine>
std::map<Bidegree, Result> run_plan(const KhovanovComplex& cx, const KhovanovOptions& opt, Reduce&& reduce,
                                    Combine&& combine) {
    Plan plan = plan_window(cx, opt);
    std::vector<IntMatrix> mats(plan.maps.size());
    std::vector<Summary> sums(plan.maps.size());
    detail::parallel_for(plan.maps.size(), opt.threads, [&](std::size_t k) {
        mats[k] = cx.differential(plan.maps[k].first, plan.maps[k].second);
        sums[k] = reduce(mats[k]);
    });
    std::map<Bidegree, std::size_t> by_deg;
    for (std::size_t k = 0; k < plan.maps.size(); ++k) by_deg[plan.maps[k]] = k;
    std::vector<Result> results(plan.targets.size());
    detail::parallel_for(plan.targets.size(), opt.threads, [&](std::size_t k) {
        auto [i, j] = plan.targets[k];
        std::size_t in = by_deg.at({i + 2, j}), out = by_deg.at({i, j});
        check_composable(mats[in], mats[out]);
        results[k] = combine(sums[in], mats[in].rows(), sums[out]);
    });
    std::map<Bidegree, Result> out;
    for (std::size_t k = 0; k < plan.targets.size(); ++k) out.emplace(plan.targets[k], std::move(results[k]));
    return out;
}

}  // namespace

BigradedGroups khovanov_homology(const LinkDiagram& d, const KhovanovOptions& opt) {
    KhovanovComplex cx(d);
    auto all = run_plan<AbelianGroup, SmithForm>(
        cx, opt, [](const IntMatrix& m) { return smith_normal_form(m); },
        [](const SmithForm& in, std::size_t middle, const SmithForm& out) {
            return homology_from_smith(in, middle, out.rank);
        });
    BigradedGroups out;
    for (auto& [deg, g] : all) set_group(out, deg.first, deg.second, std::move(g));
    return out;
}

BigradedRanks khovanov_mod_p(const LinkDiagram& d, std::uint64_t p, const KhovanovOptions& opt) {
    if (!is_prime(p)) throw InvalidArgument("modulus must be prime");
    KhovanovComplex cx(d);
    auto all = run_plan<std::size_t, std::size_t>(
        cx, opt, [p](const IntMatrix& m) { return rank_mod_p(m, p); },
        [](std::size_t in, std::size_t middle, std::size_t out) { return middle - in - out; });
    BigradedRanks out;
    for (const auto& [deg, r] : all)
        if (r) out[deg] = r;
    return out;
}

Bidegree oriented_bidegree(int i, int j, int w) {
    if ((w - i) % 2 != 0 || (3 * w - j) % 2 != 0) throw InvalidArgument("bidegree parity does not match the writhe");
    return {(w - i) / 2, (3 * w - j) / 2};
}

BigradedGroups to_oriented(const BigradedGroups& h, int writhe) {
    BigradedGroups out;
    for (const auto& [deg, g] : h) out[oriented_bidegree(deg.first, deg.second, writhe)] = g;
    return out;
}

BigradedRanks to_oriented(const BigradedRanks& h, int writhe) {
    BigradedRanks out;
    for (const auto& [deg, r] : h) out[oriented_bidegree(deg.first, deg.second, writhe)] = r;
    return out;
}

std::string poincare_polynomial(const BigradedRanks& ranks) {
    if (ranks.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [deg, r] : ranks) {
        if (!first) out << " + ";
        first = false;
        if (r != 1) out << r << "*";
        out << "q^" << deg.second << "*t^" << deg.first;
    }
    return out.str();
}

BigradedRanks free_ranks(const BigradedGroups& h) {
    BigradedRanks out;
    for (const auto& [deg, g] : h)
        if (g.free_rank()) out[deg] = g.free_rank();
    return out;
}

BigradedRanks ranks_mod_p_from_integral(const BigradedGroups& h, std::uint32_t p) {
    BigradedRanks out;
    for (const auto& [deg, g] : h) {
        out[deg] += g.rank_mod_p(p);
        if (auto t = g.p_rank(p)) out[{deg.first + 2, deg.second}] += t;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

LinkDiagram add_kink(const LinkDiagram& d, int sign) {
    if (sign != 1 && sign != -1) throw InvalidArgument("kink sign must be +1 or -1");
    std::vector<Crossing> xs = d.crossings();
    std::size_t loops = d.free_loops();
    std::uint32_t top = d.arc_labels().empty() ? 0 : d.arc_labels().back();
    std::uint32_t strand_in, strand_out;
    if (xs.empty()) {
        if (loops == 0) throw InvalidArgument("cannot add a kink to the empty diagram");
        --loops;
        strand_in = strand_out = top + 1;
        top += 1;
    } else {
        // Split arc `top`: its second occurrence is renamed.
        strand_in = top;
        strand_out = top + 1;
        bool seen = false;
        for (auto& x : xs)
            for (auto& a : x.arcs)
                if (a == top) {
                    if (seen) a = strand_out;
                    seen = true;
                }
        top += 1;
    }
    std::uint32_t loop = top + 1;
    // Positive kink: X[l,l,in,out] (A-smoothing splits off the loop).
    // Negative kink: X[l,in,out,l] (B-smoothing splits off the loop).
    if (sign > 0)
        xs.push_back({{loop, loop, strand_in, strand_out}});
    else
        xs.push_back({{loop, strand_in, strand_out, loop}});
    return LinkDiagram(std::move(xs), loops);
}

BigradedGroups shift(const BigradedGroups& h, int di, int dj) {
    BigradedGroups out;
    for (const auto& [deg, g] : h) out[{deg.first + di, deg.second + dj}] = g;
    return out;
}

TorsionLocalization torsion_localize(const LinkDiagram& d, std::uint64_t p, std::uint64_t q, const KhovanovOptions& opt) {
    if (p == q) throw InvalidArgument("torsion localization needs two different primes");
    TorsionLocalization r;
    r.p = p;
    r.q = q;
    auto rp = khovanov_mod_p(d, p, opt), rq = khovanov_mod_p(d, q, opt);
    for (const auto& [deg, v] : rp) r.difference[deg] += static_cast<long long>(v);
    for (const auto& [deg, v] : rq) r.difference[deg] -= static_cast<long long>(v);
    for (auto it = r.difference.begin(); it != r.difference.end();) it = it->second ? std::next(it) : r.difference.erase(it);
    return r;
}

}  // namespace chromkh
