#include "chromkh/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "chromkh/error.hpp"
#include "json.hpp"

namespace chromkh {

Multigraph::Multigraph(std::size_t vertices, std::vector<Edge> edges) : vertices_(vertices) {
    for (const auto& e : edges) add_edge(e.u, e.w);
}

void Multigraph::add_edge(std::uint32_t u, std::uint32_t w) {
    if (u >= vertices_ || w >= vertices_)
        throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(w) + ") out of range for " +
                              std::to_string(vertices_) + " vertices");
    edges_.push_back({u, w});
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::is_simple() const {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : edges_) {
        if (e.is_loop()) return false;
        if (!seen.insert(std::minmax(e.u, e.w)).second) return false;
    }
    return true;
}

Multigraph Multigraph::permute_edges(const std::vector<std::size_t>& order) const {
    if (order.size() != edges_.size()) throw InvalidArgument("edge permutation has wrong length");
    std::vector<char> used(edges_.size(), 0);
    Multigraph out(vertices_);
    for (auto i : order) {
        if (i >= edges_.size() || used[i]) throw InvalidArgument("not a permutation of the edges");
        used[i] = 1;
        out.edges_.push_back(edges_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency(const Multigraph& g) {
    // (neighbour, edge id)
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(g.vertex_count());
    for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        adj[e.u].push_back({e.w, i});
        if (!e.is_loop()) adj[e.w].push_back({e.u, i});
    }
    return adj;
}

// 2-colouring per component; colour[v] in {0,1}. Returns per-component bipartiteness.
std::vector<bool> colour_components(const Multigraph& g, const std::vector<std::uint32_t>& comp, std::size_t count) {
    std::vector<bool> ok(count, true);
    std::vector<int> colour(g.vertex_count(), -1);
    auto adj = adjacency(g);
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::queue<std::uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            for (auto [y, id] : adj[x]) {
                if (colour[y] < 0) {
                    colour[y] = 1 - colour[x];
                    q.push(y);
                } else if (colour[y] == colour[x]) {
                    ok[comp[x]] = false;
                }
            }
        }
    }
    return ok;
}

}  // namespace

std::vector<std::uint32_t> component_labels(const Multigraph& g, std::size_t* count) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) uf.unite(e.u, e.w);
    std::vector<std::uint32_t> label(g.vertex_count());
    std::vector<std::int64_t> root_label(g.vertex_count(), -1);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        auto r = uf.find(v);
        if (root_label[r] < 0) root_label[r] = next++;
        label[v] = static_cast<std::uint32_t>(root_label[r]);
    }
    if (count) *count = next;
    return label;
}

bool is_connected(const Multigraph& g) {
    std::size_t count = 0;
    component_labels(g, &count);
    return count <= 1;
}

std::optional<std::size_t> girth(const Multigraph& g) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    bool parallel = false;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) return 1;
        if (!seen.insert(std::minmax(e.u, e.w)).second) parallel = true;
    }
    if (parallel) return 2;

    auto adj = adjacency(g);
    std::optional<std::size_t> best;
    const std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> dist(g.vertex_count()), via(g.vertex_count());
    for (std::uint32_t root = 0; root < g.vertex_count(); ++root) {
        std::fill(dist.begin(), dist.end(), kNone);
        dist[root] = 0;
        via[root] = kNone;
        std::queue<std::uint32_t> q;
        q.push(root);
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            if (best && 2 * dist[x] + 1 >= *best) break;
            for (auto [y, id] : adj[x]) {
                if (id == via[x]) continue;
                if (dist[y] == kNone) {
                    dist[y] = dist[x] + 1;
                    via[y] = id;
                    q.push(y);
                } else {
                    std::size_t len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

GraphInvariants invariants(const Multigraph& g) {
    GraphInvariants inv;
    auto comp = component_labels(g, &inv.p0);
    inv.p1 = g.edge_count() + inv.p0 - g.vertex_count();
    inv.girth = girth(g);
    auto ok = colour_components(g, comp, inv.p0);
    inv.p0_bi = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), true));
    inv.bipartite = inv.p0_bi == inv.p0;

    std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges())
        if (!e.is_loop()) adj[e.u][e.w] = adj[e.w][e.u] = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (std::size_t c = b + 1; c < n; ++c)
                if (adj[a][c] && adj[b][c]) ++inv.t3;
        }
    return inv;
}

Multigraph simplify(const Multigraph& g) {
    Multigraph out(g.vertex_count());
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) throw InvalidArgument("cannot simplify a graph with a loop");
        if (seen.insert(std::minmax(e.u, e.w)).second) out.add_edge(e.u, e.w);
    }
    return out;
}

std::vector<std::size_t> spanning_tree(const Multigraph& g) {
    UnionFind uf(g.vertex_count());
    std::vector<std::size_t> tree;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (uf.unite(g.edge(i).u, g.edge(i).w)) tree.push_back(i);
    if (g.vertex_count() > 0 && tree.size() + 1 != g.vertex_count())
        throw InvalidArgument("spanning_tree needs a connected graph");
    return tree;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<std::uint32_t>& vertices) {
    std::vector<std::int64_t> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<std::int64_t>(i);
    Multigraph out(vertices.size());
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.w] >= 0)
            out.add_edge(static_cast<std::uint32_t>(index[e.u]), static_cast<std::uint32_t>(index[e.w]));
    return out;
}

std::vector<Multigraph> components(const Multigraph& g) {
    std::size_t count = 0;
    auto comp = component_labels(g, &count);
    std::vector<std::vector<std::uint32_t>> members(count);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);
    std::vector<Multigraph> out;
    for (const auto& m : members) out.push_back(induced_subgraph(g, m));
    return out;
}

BipartiteSplit bipartite_split(const Multigraph& g) {
    std::size_t count = 0;
    auto comp = component_labels(g, &count);
    auto ok = colour_components(g, comp, count);
    BipartiteSplit split;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        (ok[comp[v]] ? split.bipartite_vertices : split.non_bipartite_vertices).push_back(v);
    split.bipartite = induced_subgraph(g, split.bipartite_vertices);
    split.non_bipartite = induced_subgraph(g, split.non_bipartite_vertices);
    return split;
}

// ---------------------------------------------------------------------------

Multigraph complete_graph(std::size_t n) {
    if (n < 1) throw InvalidArgument("complete_graph needs n >= 1");
    Multigraph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph cycle(std::size_t n) {
    if (n < 1) throw InvalidArgument("cycle needs n >= 1");
    Multigraph g(n);
    for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, static_cast<std::uint32_t>((i + 1) % n));
    return g;
}

Multigraph path(std::size_t n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    Multigraph g(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph wheel(std::size_t n) {
    if (n < 3) throw InvalidArgument("wheel needs n >= 3");
    Multigraph g(n + 1, cycle(n).edges());
    for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, static_cast<std::uint32_t>(n));
    return g;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph g(a.vertex_count() + b.vertex_count(), a.edges());
    auto shift = static_cast<std::uint32_t>(a.vertex_count());
    for (const auto& e : b.edges()) g.add_edge(e.u + shift, e.w + shift);
    return g;
}

Multigraph one_vertex_product(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() == 0 || b.vertex_count() == 0) throw InvalidArgument("one_vertex_product needs nonempty graphs");
    Multigraph g(a.vertex_count() + b.vertex_count() - 1, a.edges());
    auto map = [&](std::uint32_t v) { return v == 0 ? 0u : v + static_cast<std::uint32_t>(a.vertex_count()) - 1; };
    for (const auto& e : b.edges()) g.add_edge(map(e.u), map(e.w));
    return g;
}

// ---------------------------------------------------------------------------

std::string graph_to_json(const Multigraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.w});
    j["edges"] = edges;
    return j.dump();
}

Multigraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_unsigned())
        throw ParseError("graph JSON: missing nonnegative integer \"vertices\"");
    Multigraph g(j["vertices"].get<std::size_t>());
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("graph JSON: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw ParseError("graph JSON: every edge must be a pair of vertex indices");
            auto u = e[0].get<std::uint64_t>(), w = e[1].get<std::uint64_t>();
            if (u >= g.vertex_count() || w >= g.vertex_count()) throw ParseError("graph JSON: edge endpoint out of range");
            g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(w));
        }
    }
    return g;
}

Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

std::string graph_hash(const Multigraph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : graph_to_json(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Index of pair (i,j), i<j, in the complete_graph edge order.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

Multigraph from_pair_mask(std::size_t n, std::uint64_t mask) {
    Multigraph g(n);
    std::size_t k = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j, ++k)
            if (mask >> k & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

std::vector<Multigraph> labeled_simple_graphs(std::size_t n, bool connected_only) {
    std::size_t pairs = n * (n - 1) / 2;
    if (n == 0 || pairs > 21) throw InvalidArgument("labeled_simple_graphs supports 1..7 vertices");
    std::vector<Multigraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        auto g = from_pair_mask(n, mask);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::uint64_t canonical_code(const Multigraph& g) {
    std::size_t n = g.vertex_count();
    if (n > 7) throw InvalidArgument("canonical_code supports at most 7 vertices");
    auto s = simplify(g);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = UINT64_MAX;
    do {
        std::uint64_t code = 0;
        for (const auto& e : s.edges()) {
            auto [a, b] = std::minmax(perm[e.u], perm[e.w]);
            code |= std::uint64_t{1} << pair_index(n, a, b);
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Multigraph> simple_graphs_up_to_iso(std::size_t max_n, bool connected_only) {
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::set<std::uint64_t> seen;
        for (auto& g : labeled_simple_graphs(n, connected_only)) {
            auto code = canonical_code(g);
            if (seen.insert(code).second) out.push_back(from_pair_mask(n, code));
        }
    }
    return out;
}

std::vector<Multigraph> multigraphs_up_to_iso(std::size_t max_v, std::size_t max_e, bool with_loops) {
    if (max_v > 7) throw InvalidArgument("multigraphs_up_to_iso supports at most 7 vertices");
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= max_v; ++n) {
        // Slots: pairs (a,b), a<b, then loops.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
        if (with_loops)
            for (std::uint32_t a = 0; a < n; ++a) slots.emplace_back(a, a);
        std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
        for (std::size_t k = 0; k < slots.size(); ++k) {
            slot_of[slots[k].first][slots[k].second] = k;
            slot_of[slots[k].second][slots[k].first] = k;
        }
        std::vector<std::vector<std::uint32_t>> perms;
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::vector<std::uint8_t>> seen;
        std::vector<std::uint8_t> mult(slots.size(), 0), image(slots.size());
        auto visit = [&] {
            std::vector<std::uint8_t> best;
            for (const auto& p : perms) {
                std::fill(image.begin(), image.end(), 0);
                for (std::size_t k = 0; k < slots.size(); ++k)
                    image[slot_of[p[slots[k].first]][p[slots[k].second]]] = mult[k];
                if (best.empty() || image > best) best = image;
            }
            if (!seen.insert(best).second) return;
            Multigraph g(n);
            for (std::size_t k = 0; k < slots.size(); ++k)
                for (std::uint8_t t = 0; t < best[k]; ++t) g.add_edge(slots[k].first, slots[k].second);
            out.push_back(std::move(g));
        };
        auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
            visit();
            for (std::size_t k = from; k < slots.size() && left > 0; ++k) {
                ++mult[k];
                self(self, k, left - 1);
                --mult[k];
            }
        };
        rec(rec, 0, max_e);
    }
    return out;
}

Multigraph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
    if (n == 0 || n > 11) throw InvalidArgument("random_connected_graph supports 1..11 vertices");
    std::size_t pairs = n * (n - 1) / 2;
    while (true) {
        std::uint64_t mask = pairs ? rng() & ((std::uint64_t{1} << pairs) - 1) : 0;
        auto g = from_pair_mask(n, mask);
        if (is_connected(g)) return g;
    }
}

}  // namespace chromkh
