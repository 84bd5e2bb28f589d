#include "chromkh/link.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "chromkh/error.hpp"

namespace chromkh {

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::size_t free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (crossings_.size() > 63) throw InvalidArgument("diagrams are limited to 63 crossings");
    std::map<std::uint32_t, int> seen;
    for (const auto& x : crossings_)
        for (auto a : x.arcs) ++seen[a];
    for (const auto& [label, count] : seen) {
        if (count != 2)
            throw InvalidArgument("arc " + std::to_string(label) + " occurs " + std::to_string(count) +
                                  " times; every arc must occur exactly twice");
        labels_.push_back(label);
    }
}

std::size_t LinkDiagram::arc_index(std::uint32_t label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw InvalidArgument("unknown arc label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

LinkDiagram LinkDiagram::permute_crossings(const std::vector<std::size_t>& order) const {
    if (order.size() != crossings_.size()) throw InvalidArgument("crossing permutation has wrong length");
    std::vector<char> used(order.size(), 0);
    std::vector<Crossing> out;
    for (auto i : order) {
        if (i >= crossings_.size() || used[i]) throw InvalidArgument("not a permutation of the crossings");
        used[i] = 1;
        out.push_back(crossings_[i]);
    }
    return LinkDiagram(std::move(out), free_loops_);
}

std::string LinkDiagram::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& x : crossings_) {
        out << (first ? "" : "; ") << "X[" << x.arcs[0] << "," << x.arcs[1] << "," << x.arcs[2] << "," << x.arcs[3] << "]";
        first = false;
    }
    if (free_loops_) out << (first ? "" : "; ") << "Loop[" << free_loops_ << "]";
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text, const char* what) : text_(text), what_(what) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool accept(const std::string& token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& token) {
        if (!accept(token)) fail("expected '" + token + "'");
    }
    long long integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits || pos_ - digits > 9) {
            pos_ = start;
            fail("expected an integer");
        }
        return std::stoll(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(std::string(what_) + ": " + msg + " at offset " + std::to_string(pos_));
    }

private:
    const std::string& text_;
    const char* what_;
    std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    Scanner in(text, "PD code");
    bool wrapped = in.accept("PD[");
    std::vector<Crossing> crossings;
    std::size_t loops = 0;
    while (true) {
        while (in.accept(",") || in.accept(";")) {
        }
        if (wrapped && in.accept("]")) break;
        if (in.done()) {
            if (wrapped) in.fail("missing closing ']'");
            break;
        }
        if (in.accept("X[")) {
            Crossing x{};
            for (int k = 0; k < 4; ++k) {
                if (k) in.expect(",");
                auto v = in.integer();
                if (v < 0) in.fail("arc labels must be nonnegative");
                x.arcs[k] = static_cast<std::uint32_t>(v);
            }
            in.expect("]");
            crossings.push_back(x);
        } else if (in.accept("Loop[")) {
            auto v = in.integer();
            if (v < 0) in.fail("Loop count must be nonnegative");
            in.expect("]");
            loops += static_cast<std::size_t>(v);
        } else {
            in.fail("expected X[...] or Loop[...]");
        }
    }
    if (!in.done()) in.fail("trailing text");
    try {
        return LinkDiagram(std::move(crossings), loops);
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("PD code: ") + e.what());
    }
}

BraidWord parse_braid(const std::string& text) {
    Scanner in(text, "braid");
    in.expect("BR[");
    auto k = in.integer();
    if (k < 1) in.fail("strand count must be positive");
    in.expect(",");
    in.expect("{");
    BraidWord b;
    b.strands = static_cast<std::size_t>(k);
    if (!in.accept("}")) {
        do {
            auto g = in.integer();
            if (g == 0 || static_cast<std::size_t>(g < 0 ? -g : g) >= b.strands) in.fail("generator index out of range");
            b.letters.push_back(static_cast<int>(g));
        } while (in.accept(","));
        in.expect("}");
    }
    in.expect("]");
    if (!in.done()) in.fail("trailing text");
    return b;
}

std::string braid_to_string(const BraidWord& b) {
    std::ostringstream out;
    out << "BR[" << b.strands << ",{";
    for (std::size_t i = 0; i < b.letters.size(); ++i) out << (i ? "," : "") << b.letters[i];
    out << "}]";
    return out.str();
}

LinkDiagram braid_closure(const BraidWord& b) {
    std::size_t k = b.strands;
    for (int g : b.letters)
        if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= k) throw InvalidArgument("generator index out of range");
    // Arc labels at the bottom are 1..k; each letter replaces two of them.
    std::vector<std::uint32_t> current(k);
    std::iota(current.begin(), current.end(), 1u);
    std::uint32_t next = static_cast<std::uint32_t>(k) + 1;
    std::vector<Crossing> crossings;
    for (int g : b.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;  // strands i, i+1 (0-based)
        std::uint32_t in_l = current[i], in_r = current[i + 1];
        std::uint32_t out_l = next++, out_r = next++;
        if (g > 0)
            crossings.push_back({{in_l, in_r, out_r, out_l}});  // under-strand SW -> NE
        else
            crossings.push_back({{in_r, out_r, out_l, in_l}});  // under-strand SE -> NW
        current[i] = out_l;
        current[i + 1] = out_r;
    }
    // Close up: the top label of each position is the bottom label.
    std::map<std::uint32_t, std::uint32_t> rename;
    std::size_t free_loops = 0;
    for (std::uint32_t p = 0; p < k; ++p) {
        if (current[p] == p + 1)
            ++free_loops;
        else
            rename[current[p]] = p + 1;
    }
    for (auto& x : crossings)
        for (auto& a : x.arcs)
            if (auto it = rename.find(a); it != rename.end()) a = it->second;
    // Renumber to 1..m in order of first appearance.
    std::map<std::uint32_t, std::uint32_t> compact;
    for (auto& x : crossings)
        for (auto& a : x.arcs) {
            auto [it, inserted] = compact.emplace(a, static_cast<std::uint32_t>(compact.size() + 1));
            a = it->second;
        }
    return LinkDiagram(std::move(crossings), free_loops);
}

// ---------------------------------------------------------------------------

namespace {

struct ArcUnionFind {
    std::vector<std::uint32_t> parent;
    explicit ArcUnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

SmoothingResult smooth(const LinkDiagram& d, KauffmanState s) {
    std::size_t m = d.arc_labels().size();
    ArcUnionFind uf(m);
    std::vector<std::array<std::uint32_t, 4>> idx(d.crossing_count());
    for (std::size_t k = 0; k < d.crossing_count(); ++k) {
        for (int t = 0; t < 4; ++t) idx[k][t] = static_cast<std::uint32_t>(d.arc_index(d.crossing(k).arcs[t]));
        auto [a, b, c, dd] = idx[k];
        if (s >> k & 1) {
            uf.unite(a, b);
            uf.unite(c, dd);
        } else {
            uf.unite(a, dd);
            uf.unite(b, c);
        }
    }
    SmoothingResult r;
    r.arc_circle.resize(m);
    std::vector<std::int64_t> id(m, -1);
    for (std::uint32_t a = 0; a < m; ++a) {
        auto root = uf.find(a);
        if (id[root] < 0) id[root] = static_cast<std::int64_t>(r.circles++);
        r.arc_circle[a] = static_cast<std::uint32_t>(id[root]);
    }
    r.circles += d.free_loops();
    for (std::size_t k = 0; k < d.crossing_count(); ++k) r.incident.push_back({r.arc_circle[idx[k][0]], r.arc_circle[idx[k][2]]});
    return r;
}

Multigraph state_graph(const LinkDiagram& d, KauffmanState s) {
    auto r = smooth(d, s);
    Multigraph g(r.circles);
    for (const auto& [x, y] : r.incident) g.add_edge(std::min(x, y), std::max(x, y));
    return g;
}

bool is_adequate(const LinkDiagram& d, KauffmanState s) { return !state_graph(d, s).has_loop(); }

std::optional<std::size_t> state_girth(const LinkDiagram& d, KauffmanState s) { return girth(state_graph(d, s)); }

bool is_strongly_adequate(const LinkDiagram& d, KauffmanState s) {
    auto l = state_girth(d, s);
    return !l || *l > 2;
}

LinkDiagram mirror(const LinkDiagram& d) {
    std::vector<Crossing> out;
    for (const auto& x : d.crossings()) out.push_back({{x.arcs[1], x.arcs[2], x.arcs[3], x.arcs[0]}});
    return LinkDiagram(std::move(out), d.free_loops());
}

std::size_t link_components(const LinkDiagram& d) {
    ArcUnionFind uf(d.arc_labels().size());
    for (const auto& x : d.crossings()) {
        uf.unite(static_cast<std::uint32_t>(d.arc_index(x.arcs[0])), static_cast<std::uint32_t>(d.arc_index(x.arcs[2])));
        uf.unite(static_cast<std::uint32_t>(d.arc_index(x.arcs[1])), static_cast<std::uint32_t>(d.arc_index(x.arcs[3])));
    }
    std::size_t n = 0;
    for (std::uint32_t a = 0; a < d.arc_labels().size(); ++a) n += uf.find(a) == a;
    return n + d.free_loops();
}

std::vector<int> crossing_signs(const LinkDiagram& d) {
    std::size_t n = d.crossing_count();
    // occurrences of each arc as (crossing, slot)
    std::vector<std::vector<std::pair<std::size_t, int>>> occ(d.arc_labels().size());
    for (std::size_t k = 0; k < n; ++k)
        for (int t = 0; t < 4; ++t) occ[d.arc_index(d.crossing(k).arcs[t])].push_back({k, t});
    // entered[k][t]: the strand enters crossing k through slot t
    std::vector<std::array<char, 4>> visited(n, {0, 0, 0, 0});
    std::vector<int> under_dir(n, 0), over_dir(n, 0);  // +1: a->c / d->b
    auto walk = [&](std::size_t k0, int t0) {
        std::size_t k = k0;
        int t = t0;
        while (!visited[k][t]) {
            int out = (t + 2) % 4;
            visited[k][t] = visited[k][out] = 1;
            if (t == 0) under_dir[k] = 1;
            if (t == 2) under_dir[k] = -1;
            if (t == 3) over_dir[k] = 1;
            if (t == 1) over_dir[k] = -1;
            const auto& o = occ[d.arc_index(d.crossing(k).arcs[out])];
            auto next = o[0].first == k && o[0].second == out ? o[1] : o[0];
            k = next.first;
            t = next.second;
        }
    };
    for (std::size_t k = 0; k < n; ++k)
        if (!visited[k][0]) walk(k, 0);
    for (std::size_t k = 0; k < n; ++k)
        if (!visited[k][1]) walk(k, 1);
    std::vector<int> sign(n);
    for (std::size_t k = 0; k < n; ++k) sign[k] = under_dir[k] * over_dir[k];
    return sign;
}

int writhe(const LinkDiagram& d) {
    auto s = crossing_signs(d);
    return std::accumulate(s.begin(), s.end(), 0);
}

// ---------------------------------------------------------------------------

std::vector<BraidSyllable> cyclic_syllables(const BraidWord& b) {
    std::vector<BraidSyllable> out;
    for (int g : b.letters) {
        if (!out.empty() && out.back().generator == g)
            ++out.back().exponent;
        else
            out.push_back({g, 1});
    }
    if (out.size() > 1 && out.front().generator == out.back().generator) {
        out.front().exponent += out.back().exponent;
        out.pop_back();
    }
    return out;
}

BraidAdequacyReport braid_adequacy_predicates(const BraidWord& b) {
    BraidAdequacyReport r;
    bool pos = std::all_of(b.letters.begin(), b.letters.end(), [](int g) { return g > 0; });
    bool neg = std::all_of(b.letters.begin(), b.letters.end(), [](int g) { return g < 0; });
    if (!pos && !neg) throw InvalidArgument("braid adequacy predicates need a word of one sign");
    r.homogeneous_sign = true;
    r.syllables = cyclic_syllables(b);
    r.three_strand_alternating = b.strands == 3;
    r.predicted_adequate = std::all_of(r.syllables.begin(), r.syllables.end(), [](const BraidSyllable& s) { return s.exponent >= 2; });
    r.predicts_z2_torsion = r.predicted_adequate &&
                            std::any_of(r.syllables.begin(), r.syllables.end(), [](const BraidSyllable& s) { return s.exponent >= 3; });
    // Components are the cycles of the underlying permutation.
    std::vector<std::size_t> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : b.letters) {
        auto i = static_cast<std::size_t>(std::abs(g)) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<char> seen(b.strands, 0);
    for (std::size_t i = 0; i < b.strands; ++i) {
        if (seen[i]) continue;
        ++r.components;
        for (auto j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return r;
}

}  // namespace chromkh
