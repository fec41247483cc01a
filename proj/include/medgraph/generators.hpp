#pragma once

#include "medgraph/classes.hpp"
#include "medgraph/graph.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace medgraph {

struct Generated {
    Graph graph;
    std::optional<LabeledEmbedding> labels;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph wheel_graph(int n);       // C_n plus a center (vertex n)
Graph wheel_minus_graph(int n); // W_n without the spoke to vertex 0
Graph propeller_graph();        // K_5 - K_3
Graph hyperoctahedron(int m);   // K_{m×2}; vertex i is opposite to i^1
Graph b_graph(int n);           // B_n: a_i = i, b_i = n + i
Graph b_hat_graph(int n);       // B_n plus a = 2n (~ all b_i), b = 2n+1 (~ all a_i)
Generated hypercube(int n);
Generated halved_cube(int n);
Generated johnson_graph(int n, int k);
Graph tree_from_pruefer(const std::vector<int>& code);

// Vertex (i, j) is i * n2 + j.
Graph cartesian_product(const Graph& g1, const Graph& g2);

// Glues G2 onto G1 along the template images h1 (in G1) and h2 (in G2), h1[i] ↔ h2[i].
// G1 keeps its numbering; the remaining G2 vertices follow in increasing order.
Graph gated_amalgam(const Graph& g1, const Graph& g2, const std::vector<Vertex>& h1, const std::vector<Vertex>& h2);

struct ProjectivePlaneGraph {
    Graph graph;
    int points = 0; // points are 0..points-1, lines points..2*points-1
    Vertex u = 0;   // adjacent to every point
    Vertex v = 0;   // adjacent to every line
};

ProjectivePlaneGraph projective_incidence_graph(int q);

enum class Attach { U, V };

struct BetaConfiguration {
    Graph graph;
    Vertex u = 0, v = 1, s = 2, t = 3, w = 4, a = 5, b = 6, c = 7;
};

// extra_edges is a subset of {"ab", "ac", "bc"}.
BetaConfiguration beta_configuration(Attach a, Attach b, Attach c, const std::vector<std::string>& extra_edges = {});

struct AlphaConfiguration {
    Graph graph;
    int type = 1;
    Vertex u = 0, v = 1, s = 2, t = 3, w = 4;
};

AlphaConfiguration alpha_configuration(int type);

Graph random_k_tree(int n, int k, std::mt19937_64& rng);
Graph random_interval_graph(int n, std::mt19937_64& rng);
Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng);

// Connected graphs on exactly n vertices (n <= 7), one per isomorphism class.
std::vector<Graph> all_connected_graphs(int n);
// Trees on exactly n vertices, one per isomorphism class.
std::vector<Graph> all_trees(int n);

// Isomorphism search with distance-profile refinement; returns f with G2-vertex f[v] for v in G1.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2);

// Family dispatch used by the CLI; throws UnknownFamily or ParameterOutOfRange.
Generated generate(const std::string& family, const std::vector<std::string>& params);
std::vector<std::string> family_names();

} // namespace medgraph
