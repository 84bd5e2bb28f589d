#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromkh/bigraded.hpp"
#include "chromkh/graph.hpp"

namespace chromkh {

// What d_e does when e joins two vertices of one component of [G:s].
enum class CycleEdgeMap { kIdentity, kZero };

enum class ChromaticVariant {
    kPlain,
    // Truncated at the girth l: at |s| = l the component carrying the closed
    // cycle is labelled by A2 (x) A2, and edges closing a shortest cycle act
    // by the comultiplication 1 -> 1(x)x + x(x)1, x -> x(x)x.
    kDelta,
};

// Chromatic cochain complex over A2 = Z[x]/(x^2). A generator is an edge
// subset s with a label 1 or x on every component of [G:s]; j counts the
// x labels. On a tensor-labelled component the two factors count
// separately and the generator's j is lowered by one, so 1(x)1, 1(x)x and
// x(x)x sit one below their x count.
//
// Generators of C^{i,j} are ordered by the edge bitset of s, then
// lexicographically by the label vector (1 < x), components being ordered by
// their smallest vertex and the right tensor factor coming last.
class ChromaticComplex {
public:
    // With `relative_to` set, only states that are not contained in that
    // edge mask are kept: the quotient complex C(G)/C(H) in homological
    // terms, a subcomplex for the coboundary.
    explicit ChromaticComplex(Multigraph g, ChromaticVariant variant = ChromaticVariant::kPlain,
                              CycleEdgeMap cycle_map = CycleEdgeMap::kIdentity,
                              std::optional<std::uint64_t> relative_to = std::nullopt);

    const Multigraph& graph() const { return g_; }
    // Largest i with nonzero cochain groups (|E|, or the girth for the delta variant).
    int top_degree() const { return top_; }
    int j_min() const { return -1; }
    int j_max() const { return static_cast<int>(g_.vertex_count()) + 1; }

    std::size_t dimension(int i, int j) const;
    // d^i : C^{i,j} -> C^{i+1,j}, rows indexed by C^{i+1,j}.
    IntMatrix differential(int i, int j) const;
    // Number of cochain generators summed over all j in degree i, without
    // building the basis. Throws BudgetError when the count exceeds `budget`.
    std::size_t count_degree(int i, std::size_t budget) const;

private:
    struct Block {
        std::uint64_t state;
        std::uint32_t slots;  // label positions: components, plus one for a tensor factor
        std::size_t offset;
    };
    struct Group {
        std::vector<Block> blocks;
        std::unordered_map<std::uint64_t, std::size_t> index;  // state -> block
        std::size_t size = 0;
    };
    const Group& group(int i, int j) const;
    bool in_complex(std::uint64_t s) const;
    // true when [G:s] has a cycle and carries a tensor label
    bool tensor_state(int i, std::size_t components) const;

    Multigraph g_;
    ChromaticVariant variant_;
    CycleEdgeMap cycle_map_;
    std::optional<std::uint64_t> relative_;
    std::optional<std::size_t> girth_;
    int top_ = 0;
    mutable std::mutex mutex_;
    mutable std::map<Bidegree, std::unique_ptr<Group>> groups_;
};

struct ChromaticOptions {
    ChromaticVariant variant = ChromaticVariant::kPlain;
    CycleEdgeMap cycle_map = CycleEdgeMap::kIdentity;
    std::optional<std::uint64_t> relative_to;
    // Homological degrees to compute; unset means all.
    std::optional<int> i_min, i_max;
    // Quantum degrees to compute; unset means all.
    std::optional<int> j_min, j_max;
    std::size_t budget = 5'000'000;
    unsigned threads = 1;
};

struct ChromaticResult {
    BigradedGroups cohomology;  // ker d^i / im d^(i-1)
    BigradedGroups homology;    // the same complex with transposed differentials
};

// Both directions in one pass; d*d = 0 is asserted on every pair used.
ChromaticResult chromatic_groups(const Multigraph& g, const ChromaticOptions& opt = {});
BigradedGroups chromatic_cohomology(const Multigraph& g, const ChromaticOptions& opt = {});
BigradedGroups chromatic_homology(const Multigraph& g, const ChromaticOptions& opt = {});

// ---------------------------------------------------------------------------
// Closed forms. Every function takes its data from GraphInvariants alone.

// Connected simple G: H_{0,v-1} = Z if bipartite, Z2 otherwise.
AbelianGroup predict_h0_top_homology(const Multigraph& g);

// Simple G: H^{0,v-1} = Z^{p0_bi}, H^{1,v-1} = Z^{p1 - (p0 - p0_bi)} + Z2^{p0 - p0_bi}.
struct TopDiagonalPrediction {
    AbelianGroup h0, h1;
};
TopDiagonalPrediction predict_top_cohomology(const Multigraph& g);

// Connected simple G: H_{1,v-2} = Z2^{p1} if bipartite, Z2^{p1-1} + Z otherwise.
AbelianGroup predict_h1_second_diagonal(const Multigraph& g);

// Connected simple G, bidegrees (1, v-2) and (2, v-2).
struct SecondDiagonalPrediction {
    AbelianGroup homology1, homology2, cohomology1, cohomology2;
};
SecondDiagonalPrediction predict_second_diagonal(const Multigraph& g);

// H^{2,v-2} of a simple graph with several components.
struct DisjointUnionPrediction {
    // Assembled from the connected closed forms through the Kunneth formula.
    AbelianGroup kunneth;
    // Z2 exponent p1(G_bi) + N p1(G) - C(N+1,2), N the number of
    // non-bipartite components. Equals the exponent of `kunneth`.
    std::size_t torsion_rederived = 0;
    // The printed exponent, + C(N+1,2) instead.
    long long torsion_printed = 0;
    // C(p1+1,2) - (printed exponent) - t3.
    long long free_printed = 0;
    // The non-bipartite part alone, as stated (with - C(N+1,2)) and as in
    // its derivation (with + C(N+1,2)); alpha with and without the -t3 term.
    long long nonbipartite_torsion_stated = 0, nonbipartite_torsion_derived = 0;
    long long nonbipartite_alpha_stated = 0, nonbipartite_alpha_derived = 0;
};
DisjointUnionPrediction predict_disjoint_union(const Multigraph& g);

// Complete graph K_n, n >= 4: H^{2,v-2} with the first summand read as
// Z2^{n(n-3)/2}, and the literal printed value with a free first summand.
struct CompleteGraphPrediction {
    AbelianGroup z2_reading, printed;
};
CompleteGraphPrediction predict_complete_graph_h2(std::size_t n);

// Wheel W_n (n rim vertices plus hub), n >= 4.
struct WheelPrediction {
    AbelianGroup printed;  // Z2^{n-2} + Z^{C(n-1,2) - n + 1}
    AbelianGroup derived;  // Z2^{n-1} + Z^{C(n-1,2)}, from the connected closed form
};
WheelPrediction predict_wheel_h2(std::size_t n);

}  // namespace chromkh
