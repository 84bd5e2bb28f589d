#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace chromkh {

struct Edge {
    std::uint32_t u;
    std::uint32_t w;
    bool is_loop() const { return u == w; }
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.w == b.w; }
};

// Multigraph with an ordered edge list. Loops and parallel edges are allowed.
// The edge order is part of the value: it fixes the signs of every
// differential built on top of the graph.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertices, std::vector<Edge> edges = {});

    std::size_t vertex_count() const { return vertices_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    void add_edge(std::uint32_t u, std::uint32_t w);
    bool has_loop() const;
    bool is_simple() const;

    // Same graph with edges listed as edges[order[0]], edges[order[1]], ...
    Multigraph permute_edges(const std::vector<std::size_t>& order) const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertices_ = 0;
    std::vector<Edge> edges_;
};

struct GraphInvariants {
    std::size_t p0 = 0;               // components
    std::size_t p1 = 0;               // cyclomatic number |E| - v + p0
    std::optional<std::size_t> girth; // empty for forests
    bool bipartite = true;
    std::size_t t3 = 0;               // triangles of the simplified graph
    std::size_t p0_bi = 0;            // bipartite components
};

GraphInvariants invariants(const Multigraph& g);

// Component id of every vertex, numbered in order of first appearance.
std::vector<std::uint32_t> component_labels(const Multigraph& g, std::size_t* count = nullptr);
std::optional<std::size_t> girth(const Multigraph& g);
bool is_connected(const Multigraph& g);

// One edge per adjacent pair, in first-occurrence order. Throws on loops.
Multigraph simplify(const Multigraph& g);

// Indices of a spanning tree, greedy over edge order. Throws if disconnected.
std::vector<std::size_t> spanning_tree(const Multigraph& g);

struct BipartiteSplit {
    Multigraph bipartite;
    Multigraph non_bipartite;
    // Original vertex ids of the vertices of each part, in order.
    std::vector<std::uint32_t> bipartite_vertices;
    std::vector<std::uint32_t> non_bipartite_vertices;
};
BipartiteSplit bipartite_split(const Multigraph& g);

// Induced subgraph on the given vertices (renumbered in the given order).
Multigraph induced_subgraph(const Multigraph& g, const std::vector<std::uint32_t>& vertices);
// The components of g as separate graphs, ordered by smallest vertex.
std::vector<Multigraph> components(const Multigraph& g);

// Named families. Edge orders:
//   complete_graph(n): (i,j) for i<j, lexicographic
//   cycle(n):          (0,1), (1,2), ..., (n-1,0); cycle(1) is a loop, cycle(2) a double edge
//   path(n):           (0,1), ..., (n-2,n-1)
//   wheel(n):          rim cycle(n) on 0..n-1, then spokes (i,n) for i = 0..n-1
//   disjoint_union:    edges of a, then edges of b shifted by v(a)
//   one_vertex_product: vertex 0 of b is glued to vertex 0 of a; other vertices
//                       of b are shifted by v(a)-1; edges of a, then of b
Multigraph complete_graph(std::size_t n);
Multigraph cycle(std::size_t n);
Multigraph path(std::size_t n);
Multigraph wheel(std::size_t n);
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);
Multigraph one_vertex_product(const Multigraph& a, const Multigraph& b);

// {"vertices": n, "edges": [[u,w], ...]}
std::string graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const std::string& text);
Multigraph load_graph(const std::string& path);
// FNV-1a over the JSON text, as 16 hex digits.
std::string graph_hash(const Multigraph& g);

// Test corpora.
// All labeled simple graphs on n vertices, optionally only connected ones;
// edges listed in the complete_graph order.
std::vector<Multigraph> labeled_simple_graphs(std::size_t n, bool connected_only);
// Canonical adjacency code of a simple graph (minimum over relabelings).
// Only intended for n <= 7.
std::uint64_t canonical_code(const Multigraph& g);
// One representative per isomorphism class of simple graphs on 1..max_n vertices.
std::vector<Multigraph> simple_graphs_up_to_iso(std::size_t max_n, bool connected_only);
// One representative per isomorphism class of multigraphs with 1..max_v
// vertices and 0..max_e edges. Loops only when with_loops is set. Edges are
// listed in the complete_graph order, loops at vertex k after the pairs.
std::vector<Multigraph> multigraphs_up_to_iso(std::size_t max_v, std::size_t max_e, bool with_loops);
// Connected simple graph on n vertices with edge probability 1/2, rejection sampled.
Multigraph random_connected_graph(std::size_t n, std::mt19937_64& rng);

}  // namespace chromkh
