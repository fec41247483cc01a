#pragma once

#include "medgraph/graph.hpp"

#include <optional>
#include <vector>

namespace medgraph {

struct MetricTriangle {
    Vertex v1 = 0;
    Vertex v2 = 0;
    Vertex v3 = 0;
    std::optional<int> size; // set only when equilateral

    friend bool operator==(const MetricTriangle&, const MetricTriangle&) = default;
};

VertexSet interval(const Graph& g, Vertex u, Vertex v);
VertexSet interior_interval(const Graph& g, Vertex u, Vertex v);
VertexSet ball(const Graph& g, Vertex center, int radius);

Graph power_graph(const Graph& g, int p);

bool is_convex_set(const Graph& g, const VertexSet& s);

struct GateResult {
    bool gated = false;
    std::vector<Vertex> gate; // gate[x]; members of S are their own gate; empty unless gated
    Vertex failing_vertex = -1;
};

GateResult is_gated_set(const Graph& g, const VertexSet& s);

bool is_metric_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);
MetricTriangle make_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);

std::vector<MetricTriangle> enumerate_quasi_medians(const Graph& g, Vertex x, Vertex y, Vertex z);
MetricTriangle greedy_quasi_median(const Graph& g, Vertex x, Vertex y, Vertex z);
bool is_quasi_median(const Graph& g, Vertex x, Vertex y, Vertex z, const MetricTriangle& t);

// Throws NotEquilateral unless all three sides have equal length.
bool is_strongly_equilateral(const Graph& g, const MetricTriangle& t);

VertexSet J_set(const Graph& g, Vertex u, Vertex v);
VertexSet M_set(const Graph& g, Vertex u, Vertex v);
VertexSet Jcirc_set(const Graph& g, Vertex u, Vertex v);
VertexSet S_set(const Graph& g, Vertex u, Vertex v);

} // namespace medgraph
