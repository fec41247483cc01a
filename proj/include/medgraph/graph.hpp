#pragma once

#include "medgraph/vertex_set.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace medgraph {

using Edge = std::pair<Vertex, Vertex>;

class DistMatrix {
public:
    DistMatrix() = default;
    explicit DistMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(Vertex u, Vertex v, int value) {
        d_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint16_t>(value);
    }
    int diameter() const;
    int eccentricity(Vertex v) const;

    friend bool operator==(const DistMatrix&, const DistMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

// Immutable simple connected graph. Distances are computed once, at construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges, std::string name = {});

    int order() const { return data_ ? data_->n : 0; }
    std::size_t edge_count() const { return data_ ? data_->m : 0; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return data_->adj[v]; }
    int degree(Vertex v) const { return static_cast<int>(data_->adj[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return data_->dist(u, v) == 1; }
    int dist(Vertex u, Vertex v) const { return data_->dist(u, v); }
    const DistMatrix& distances() const { return data_->dist; }
    int diameter() const { return data_->diameter; }
    const std::string& name() const { return data_->name; }
    Graph with_name(std::string name) const;

    // Sorted lexicographically with u < v.
    std::vector<Edge> edges() const;
    VertexSet vertex_set() const { return VertexSet::full(order()); }

private:
    struct Data {
        int n = 0;
        std::size_t m = 0;
        std::vector<std::vector<Vertex>> adj;
        DistMatrix dist;
        int diameter = 0;
        std::string name;
    };
    std::shared_ptr<const Data> data_;
};

Graph build_graph(int n, const std::vector<Edge>& edges, std::string name = {});

// Fresh BFS from every vertex; does not reuse the matrix cached in G.
DistMatrix all_pairs_distances(const Graph& g);

// Subgraph induced by `vertices` (in the given order); throws Disconnected if it is.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

bool is_connected(int n, const std::vector<Edge>& edges);

} // namespace medgraph
