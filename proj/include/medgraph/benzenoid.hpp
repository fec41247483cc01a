#pragma once

#include "medgraph/graph.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace medgraph {

// Axial coordinates of hexagons on the hexagonal tiling.
struct BenzenoidSpec {
    std::vector<std::pair<int, int>> hexagons;
};

struct BenzenoidGraph {
    Graph graph;
    std::vector<std::pair<int, int>> corners;  // lattice coordinate of each vertex
    std::vector<int> edge_class;               // aligned with graph.edges(); values 0, 1, 2
    std::array<Graph, 3> trees;                // T_i: components of G minus class i
    std::vector<std::array<Vertex, 3>> phi;    // vertex -> tree vertices
    std::vector<std::vector<Vertex>> hexagons; // corners in cyclic order
    std::vector<std::vector<Vertex>> incomplete_hexagons; // 3-paths in path order

    int class_of(Vertex a, Vertex b) const;
};

// Throws HoleDetected or DisconnectedHexagons; the embedding is checked before returning.
BenzenoidGraph benzenoid(const BenzenoidSpec& spec);

// d_G(x, y) == sum of tree distances, for every pair.
bool embedding_is_isometric(const BenzenoidGraph& b);

// Edges grouped by (class, tree edge).
std::vector<std::vector<Edge>> parallelism_classes(const BenzenoidGraph& b);

// "hexagon", "naphthalene", "anthracene", "bent-chain".
BenzenoidSpec benzenoid_preset(const std::string& name);
std::vector<std::string> benzenoid_preset_names();

} // namespace medgraph
