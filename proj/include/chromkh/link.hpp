#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromkh/graph.hpp"

namespace chromkh {

// PD crossing X[a,b,c,d]: the four arc labels counterclockwise, starting
// with an end of the under-strand. The under-strand runs a-c, the over-strand
// b-d. Orientation only matters for the writhe, where the under-strand is
// read as a -> c.
//
//            c
//            |          marker +1 (A-smoothing): a joins b, c joins d
//      d ----|---- b    marker -1 (B-smoothing): a joins d, b joins c
//            |
//            a
struct Crossing {
    std::array<std::uint32_t, 4> arcs;
};

// Kauffman state: bit k set means marker +1 at crossing k.
using KauffmanState = std::uint64_t;

class LinkDiagram {
public:
    LinkDiagram() = default;
    // Every arc label must occur exactly twice among the crossings.
    explicit LinkDiagram(std::vector<Crossing> crossings, std::size_t free_loops = 0);

    std::size_t crossing_count() const { return crossings_.size(); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(std::size_t k) const { return crossings_[k]; }
    // Crossingless unknotted components.
    std::size_t free_loops() const { return free_loops_; }
    // Distinct arc labels, sorted.
    const std::vector<std::uint32_t>& arc_labels() const { return labels_; }
    std::size_t arc_index(std::uint32_t label) const;

    LinkDiagram permute_crossings(const std::vector<std::size_t>& order) const;
    std::string str() const;

    KauffmanState all_plus() const { return crossings_.size() >= 64 ? ~0ULL : (1ULL << crossings_.size()) - 1; }
    static constexpr KauffmanState all_minus() { return 0; }

private:
    std::vector<Crossing> crossings_;
    std::size_t free_loops_ = 0;
    std::vector<std::uint32_t> labels_;
};

struct BraidWord {
    std::size_t strands = 2;
    std::vector<int> letters;  // +i is sigma_i, -i its inverse; 1 <= |i| < strands
};

// "X[1,2,3,4]; X[...]" optionally wrapped as "PD[...]"; "Loop[k]" adds k
// crossingless components. Separators between items may be ',', ';' or space.
LinkDiagram parse_pd(const std::string& text);
// "BR[k,{i1,i2,...}]"
BraidWord parse_braid(const std::string& text);
std::string braid_to_string(const BraidWord& b);

// Closure of a braid drawn bottom to top, strands numbered left to right.
// sigma_i is the crossing whose A-smoothing is the horizontal (cap/cup)
// resolution; crossings are ordered by letter position; a strand untouched by
// every letter becomes a crossingless component.
LinkDiagram braid_closure(const BraidWord& b);

struct SmoothingResult {
    std::size_t circles = 0;
    // Circle ids of the two smoothing arcs at each crossing, (circle of a, circle of c).
    std::vector<std::array<std::uint32_t, 2>> incident;
    // Circle id of every arc, indexed like LinkDiagram::arc_labels().
    std::vector<std::uint32_t> arc_circle;
};

SmoothingResult smooth(const LinkDiagram& d, KauffmanState s);
// Edge k joins the circles at crossing k, smaller circle id first.
Multigraph state_graph(const LinkDiagram& d, KauffmanState s);
bool is_adequate(const LinkDiagram& d, KauffmanState s);
std::optional<std::size_t> state_girth(const LinkDiagram& d, KauffmanState s);
// Strongly s-adequate: girth of G_s(D) greater than 2.
bool is_strongly_adequate(const LinkDiagram& d, KauffmanState s);

// X[a,b,c,d] -> X[b,c,d,a]: swaps over and under at every crossing, so
// state_graph(mirror(D), s) == state_graph(D, ~s).
LinkDiagram mirror(const LinkDiagram& d);

std::size_t link_components(const LinkDiagram& d);
// Signs use the orientation a -> c on every under-strand; components that
// never pass under are oriented along b -> d at their first crossing.
std::vector<int> crossing_signs(const LinkDiagram& d);
int writhe(const LinkDiagram& d);

// Syllables sigma_{g}^{a} of a braid word, read cyclically: when the first
// and last syllable use the same generator they are one syllable of the
// closure.
struct BraidSyllable {
    int generator;  // signed
    std::size_t exponent;
};

struct BraidAdequacyReport {
    std::vector<BraidSyllable> syllables;
    bool homogeneous_sign = true;  // all letters of one sign
    bool three_strand_alternating = false;  // 3 strands, syllables alternate generators
    bool predicted_adequate = false;        // every syllable exponent >= 2
    bool predicts_z2_torsion = false;       // additionally some exponent >= 3
    std::size_t components = 0;
};

std::vector<BraidSyllable> cyclic_syllables(const BraidWord& b);
// Throws InvalidArgument for a word mixing signs.
BraidAdequacyReport braid_adequacy_predicates(const BraidWord& b);

}  // namespace chromkh
