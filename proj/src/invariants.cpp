#include "chromkh/invariants.hpp"

#include <numeric>

#include "chromkh/error.hpp"

namespace chromkh {

namespace {

const std::vector<std::string> kA = {"A"};
const std::vector<std::string> kMuAB = {"mu", "A", "B"};
const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kLambda = {"lambda"};
const std::vector<std::string> kQ = {"q"};

constexpr std::size_t kMaxStateSumEdges = 20;
constexpr std::size_t kMaxBracketCrossings = 24;

LaurentPoly loop_value() {
    // -A^2 - A^-2
    return LaurentPoly::monomial(kA, {2}, -1) + LaurentPoly::monomial(kA, {-2}, -1);
}

// Components of the spanning subgraph with edge set `mask`.
std::size_t subgraph_components(const Multigraph& g, std::uint64_t mask) {
    std::vector<std::uint32_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = g.vertex_count();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!(mask >> e & 1)) continue;
        auto a = find(g.edge(e).u), b = find(g.edge(e).w);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

void require_state_sum_size(const Multigraph& g) {
    if (g.edge_count() > kMaxStateSumEdges)
        throw InvalidArgument("state sums are limited to " + std::to_string(kMaxStateSumEdges) + " edges");
}

bool is_bridge(const Multigraph& g, std::size_t e) {
    if (g.edge(e).is_loop()) return false;
    std::uint64_t all = g.edge_count() >= 64 ? ~0ULL : (1ULL << g.edge_count()) - 1;
    return subgraph_components(g, all & ~(1ULL << e)) > subgraph_components(g, all);
}

}  // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
    std::size_t n = d.crossing_count();
    if (n > kMaxBracketCrossings) throw InvalidArgument("bracket state sum limited to 24 crossings");
    if (n == 0 && d.free_loops() == 0) throw InvalidArgument("bracket of the empty diagram is not a Laurent polynomial");
    std::vector<LaurentPoly> delta_pow(n + d.free_loops() + 1, LaurentPoly::constant(kA, 1));
    for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * loop_value();
    // Accumulate the count of states per (sigma, circles) first.
    std::map<std::pair<int, std::size_t>, std::int64_t> counts;
    for (KauffmanState s = 0; s < (KauffmanState{1} << n); ++s) {
        int sigma = 2 * __builtin_popcountll(s) - static_cast<int>(n);
        ++counts[{sigma, smooth(d, s).circles}];
    }
    LaurentPoly result(kA);
    for (const auto& [key, count] : counts)
        result += LaurentPoly::monomial(kA, {key.first}, count) * delta_pow[key.second - 1];
    return result;
}

LaurentPoly unreduced_bracket(const LinkDiagram& d) { return loop_value() * kauffman_bracket(d); }

LaurentPoly graph_bracket(const Multigraph& g) {
    require_state_sum_size(g);
    std::size_t m = g.edge_count();
    LaurentPoly result(kMuAB);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(s));
        std::size_t p0 = subgraph_components(g, s);
        std::size_t p1 = size + p0 - g.vertex_count();
        result.add_term({static_cast<int>(p0 + p1), static_cast<int>(m - size), static_cast<int>(size)}, 1);
    }
    return result;
}

Multigraph delete_edge(const Multigraph& g, std::size_t e) {
    Multigraph out(g.vertex_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k)
        if (k != e) out.add_edge(g.edge(k).u, g.edge(k).w);
    return out;
}

Multigraph contract_edge(const Multigraph& g, std::size_t e) {
    const Edge& c = g.edge(e);
    if (c.is_loop()) {
        Multigraph out(g.vertex_count() + 1);
        for (std::size_t k = 0; k < g.edge_count(); ++k)
            if (k != e) out.add_edge(g.edge(k).u, g.edge(k).w);
        return out;
    }
    auto keep = std::min(c.u, c.w), gone = std::max(c.u, c.w);
    auto map = [&](std::uint32_t v) {
        if (v == gone) v = keep;
        return v > gone ? v - 1 : v;
    };
    Multigraph out(g.vertex_count() - 1);
    for (std::size_t k = 0; k < g.edge_count(); ++k)
        if (k != e) out.add_edge(map(g.edge(k).u), map(g.edge(k).w));
    return out;
}

bool graph_bracket_recursion_holds(const Multigraph& g, std::size_t e) {
    if (e >= g.edge_count()) throw InvalidArgument("edge index out of range");
    auto a = LaurentPoly::variable(kMuAB, 1), b = LaurentPoly::variable(kMuAB, 2);
    return graph_bracket(g) == a * graph_bracket(delete_edge(g, e)) + b * graph_bracket(contract_edge(g, e));
}

LaurentPoly tutte_polynomial(const Multigraph& g) {
    if (g.edge_count() == 0) return LaurentPoly::constant(kXY, 1);
    std::size_t e = g.edge_count() - 1;
    if (g.edge(e).is_loop()) return LaurentPoly::variable(kXY, 1) * tutte_polynomial(delete_edge(g, e));
    // Ordinary contraction here: endpoints merge, no extra vertex.
    if (is_bridge(g, e)) return LaurentPoly::variable(kXY, 0) * tutte_polynomial(contract_edge(g, e));
    return tutte_polynomial(delete_edge(g, e)) + tutte_polynomial(contract_edge(g, e));
}

bool tutte_check(const Multigraph& g) {
    auto inv = invariants(g);
    std::size_t rank = g.edge_count() - inv.p1;
    auto mu = LaurentPoly::variable(kMuAB, 0), a = LaurentPoly::variable(kMuAB, 1), b = LaurentPoly::variable(kMuAB, 2);
    auto x_num = b + mu * a;  // x = x_num / B
    auto y_num = a + mu * b;  // y = y_num / A
    LaurentPoly rhs(kMuAB);
    auto tutte = tutte_polynomial(g);
    for (const auto& [e, c] : tutte.terms()) {
        int i = e[0], j = e[1];
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) > rank || static_cast<std::size_t>(j) > inv.p1) return false;
        rhs += LaurentPoly::constant(kMuAB, c) * x_num.pow(i) * b.pow(static_cast<unsigned>(rank - i)) * y_num.pow(j) *
               a.pow(static_cast<unsigned>(inv.p1 - j));
    }
    rhs *= mu.pow(static_cast<unsigned>(inv.p0));
    return rhs == graph_bracket(g);
}

namespace {

LaurentPoly chromatic_simple(const Multigraph& g) {
    if (g.edge_count() == 0) return LaurentPoly::monomial(kLambda, {static_cast<int>(g.vertex_count())});
    std::size_t e = g.edge_count() - 1;
    auto contracted = contract_edge(g, e);
    // Parallel copies of e become loops after contraction: that term vanishes.
    LaurentPoly minus = contracted.has_loop() ? LaurentPoly(kLambda) : chromatic_simple(simplify(contracted));
    return chromatic_simple(delete_edge(g, e)) - minus;
}

}  // namespace

LaurentPoly chromatic_polynomial(const Multigraph& g) {
    if (g.has_loop()) return LaurentPoly(kLambda);
    return chromatic_simple(simplify(g));
}

LaurentPoly chromatic_polynomial_state_sum(const Multigraph& g) {
    require_state_sum_size(g);
    LaurentPoly result(kLambda);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edge_count()); ++s) {
        int sign = __builtin_popcountll(s) % 2 ? -1 : 1;
        result.add_term({static_cast<int>(subgraph_components(g, s))}, sign);
    }
    return result;
}

LaurentPoly chromatic_q_form(const LaurentPoly& in_lambda) {
    return in_lambda.substitute(0, LaurentPoly::constant(kQ, 1) + LaurentPoly::variable(kQ, 0));
}

LaurentPoly euler_characteristic(const BigradedGroups& h, EulerMode mode) {
    if (mode == EulerMode::kKhovanov) {
        LaurentPoly r(kA);
        for (const auto& [deg, grp] : h) {
            auto [i, j] = deg;
            if ((j - i) % 2 != 0) throw InvalidArgument("Khovanov bidegree with odd j - i");
            int sign = ((j - i) / 2) % 2 == 0 ? 1 : -1;
            r.add_term({j}, sign * static_cast<std::int64_t>(grp.free_rank()));
        }
        return r;
    }
    LaurentPoly r(kQ);
    for (const auto& [deg, grp] : h) {
        auto [i, j] = deg;
        r.add_term({j}, (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(grp.free_rank()));
    }
    return r;
}

}  // namespace chromkh
