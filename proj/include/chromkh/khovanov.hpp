#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chromkh/bigraded.hpp"
#include "chromkh/link.hpp"

namespace chromkh {

// Enhanced-state chain complex in the framed, unoriented convention:
// a generator is a Kauffman state s plus a sign on every circle of D_s, with
// i = (#plus markers) - (#minus markers) and j = i + 2 tau, tau being
// (#plus circles) - (#minus circles). The differential lowers i by 2 and
// keeps j: it turns one +1 marker into -1, and the two sides differ only on
// the circles through that crossing, with tau going up by one.
//
// Generators of C_{i,j} are ordered by state, then by the set of negative
// circles in colexicographic order.
class KhovanovComplex {
public:
    explicit KhovanovComplex(const LinkDiagram& d);

    const LinkDiagram& diagram() const { return d_; }
    std::size_t dimension(int i, int j) const;
    // Every bidegree with a nonzero chain group.
    std::set<Bidegree> support() const;
    std::size_t total_dimension() const;

    // d : C_{i,j} -> C_{i-2,j}, rows indexed by C_{i-2,j}.
    IntMatrix differential(int i, int j) const;

private:
    struct Block {
        KauffmanState state;
        std::uint32_t negatives;  // number of negative circles
        std::size_t offset;
    };
    struct Group {
        std::vector<Block> blocks;
        std::map<KauffmanState, std::size_t> offset_of;  // state -> offset
        std::size_t size = 0;
    };
    const Group* group(int i, int j) const;

    LinkDiagram d_;
    std::vector<std::uint8_t> circles_;  // |D_s| for every state
    std::map<Bidegree, Group> groups_;
};

struct KhovanovOptions {
    // Homological degrees to compute; empty means all.
    std::optional<int> i_min, i_max;
    std::optional<int> j_min, j_max;
    // Upper bound on generators summed over the chain groups touched.
    std::size_t budget = 5'000'000;
    unsigned threads = 1;
};

// Budget default, overridden by the CHROMKH_BUDGET environment variable.
std::size_t default_budget();

// H_{i,j} = ker(d_{i,j}) / im(d_{i+2,j}) over the integers, for bidegrees in
// the requested window. d*d = 0 is asserted on every pair used.
BigradedGroups khovanov_homology(const LinkDiagram& d, const KhovanovOptions& opt = {});
BigradedRanks khovanov_mod_p(const LinkDiagram& d, std::uint64_t p, const KhovanovOptions& opt = {});

// Oriented normalization (h, q) = ((w - i) / 2, (3w - j) / 2), w the writhe.
// Cohomological degree h, quantum degree q, as in the usual knot tables.
Bidegree oriented_bidegree(int i, int j, int writhe);
BigradedGroups to_oriented(const BigradedGroups& h, int writhe);
BigradedRanks to_oriented(const BigradedRanks& h, int writhe);

// "q^31*t^0 + 2*q^37*t^4"; keys read as (t, q). "0" when empty.
std::string poincare_polynomial(const BigradedRanks& ranks);
// Ranks of free parts.
BigradedRanks free_ranks(const BigradedGroups& h);
// Ranks over F_p from integer homology via the universal coefficient theorem:
// dim H(F_p)_{i,j} = rank H_{i,j} + p-rank of tor H_{i,j} + p-rank of tor H_{i-2,j}.
BigradedRanks ranks_mod_p_from_integral(const BigradedGroups& h, std::uint32_t p);

// Positive kink r_{+1}: H_{i+1,j+3}(r_{+1}(D)) = H_{i,j}(D); negative kink
// r_{-1}: H_{i-1,j-3}. The kink is inserted on the arc with the largest label.
LinkDiagram add_kink(const LinkDiagram& d, int sign);
BigradedGroups shift(const BigradedGroups& h, int di, int dj);

// Comparison of bigraded ranks over two prime fields, entries rank_p - rank_q.
// A positive entry at (i,j) certifies p-power torsion at (i,j) or (i-2,j).
struct TorsionLocalization {
    std::uint64_t p = 0, q = 0;
    std::map<Bidegree, long long> difference;  // zeros omitted
};
TorsionLocalization torsion_localize(const LinkDiagram& d, std::uint64_t p, std::uint64_t q,
                                     const KhovanovOptions& opt = {});

}  // namespace chromkh
