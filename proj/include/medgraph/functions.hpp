#pragma once

#include "medgraph/graph.hpp"
#include "medgraph/rational.hpp"

#include <map>
#include <vector>

namespace medgraph {

// Nonnegative weights with nonempty finite support; zero weights are dropped.
class Profile {
public:
    Profile() = default;
    explicit Profile(const std::map<Vertex, Rational>& weights);

    const std::map<Vertex, Rational>& weights() const { return w_; }
    Rational weight(Vertex v) const;
    bool empty() const { return w_.empty(); }
    std::vector<Vertex> support() const;

    // Throws ProfileSupportOutOfRange / InvalidProfile.
    void validate(const Graph& g) const;

private:
    std::map<Vertex, Rational> w_;
};

using VertexFunction = std::vector<Rational>;

class GeodesicString {
public:
    // Throws InvalidString when the sequence is not on a common geodesic.
    GeodesicString(const Graph& g, std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return w_; }
    std::size_t size() const { return w_.size(); }
    Vertex operator[](std::size_t i) const { return w_[i]; }
    int max_gap(const Graph& g) const;

private:
    std::vector<Vertex> w_;
};

bool is_geodesic_string(const Graph& g, const std::vector<Vertex>& w);

Rational median_value(const Graph& g, const Profile& pi, Vertex x);
VertexFunction median_function(const Graph& g, const Profile& pi);
VertexSet median_set(const Graph& g, const Profile& pi);
VertexSet local_median_set_p(const Graph& g, const Profile& pi, int p);

VertexSet argmin_set(const VertexFunction& f);
// Vertices x with f(x) <= f(y) for every y at distance 1..p.
VertexSet local_minima_p(const Graph& g, const VertexFunction& f, int p);

bool is_peakless_on_string(const VertexFunction& f, const GeodesicString& s);
bool is_convex_on_string(const Graph& g, const VertexFunction& f, const GeodesicString& s);

// Pair conditions; u and v must be distinct and nonadjacent (AdjacentPair otherwise).
bool check_WC(const Graph& g, const VertexFunction& f, Vertex u, Vertex v);
bool check_WP(const Graph& g, const VertexFunction& f, Vertex u, Vertex v);
bool check_Loz(const Graph& g, const VertexFunction& f, Vertex u, Vertex v);

// Local tests over pairs with p+1 <= d(u,v) <= 2p.
bool is_p_weakly_peakless(const Graph& g, const VertexFunction& f, int p);
bool is_p_weakly_convex(const Graph& g, const VertexFunction& f, int p);
// Same conditions over every pair with d(u,v) >= p+1.
bool is_p_weakly_peakless_all_pairs(const Graph& g, const VertexFunction& f, int p);
bool is_p_weakly_convex_all_pairs(const Graph& g, const VertexFunction& f, int p);

GeodesicString find_peakless_p_geodesic(const Graph& g, const VertexFunction& f, Vertex u, Vertex v, int p);

bool is_unimodal_on_power(const Graph& g, const VertexFunction& f, int p);

VertexSet level_set(const VertexFunction& f, const Rational& alpha);
bool is_p_connected(const Graph& g, const VertexSet& s, int p);
bool is_p_isometric(const Graph& g, const VertexSet& s, int p);

} // namespace medgraph
