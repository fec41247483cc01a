#include "medgraph/metric.hpp"

#include "medgraph/error.hpp"

#include <algorithm>

namespace medgraph {

namespace {

bool on_geodesic(const Graph& g, Vertex u, Vertex w, Vertex v)
{
    return g.dist(u, w) + g.dist(w, v) == g.dist(u, v);
}

// Vertex of I(a,b) ∩ I(a,c) farthest from a, smallest index on ties.
Vertex farthest_in_common_interval(const Graph& g, Vertex a, Vertex b, Vertex c)
{
    Vertex best = a;
    int best_d = 0;
    for (Vertex w = 0; w < g.order(); ++w)
        if (on_geodesic(g, a, w, b) && on_geodesic(g, a, w, c) && g.dist(a, w) > best_d) {
            best = w;
            best_d = g.dist(a, w);
        }
    return best;
}

} // namespace

VertexSet interval(const Graph& g, Vertex u, Vertex v)
{
    VertexSet s(g.order());
    for (Vertex w = 0; w < g.order(); ++w)
        if (on_geodesic(g, u, w, v))
            s.insert(w);
    return s;
}

VertexSet interior_interval(const Graph& g, Vertex u, Vertex v)
{
    auto s = interval(g, u, v);
    s.erase(u);
    if (v != u)
        s.erase(v);
    return s;
}

VertexSet ball(const Graph& g, Vertex center, int radius)
{
    VertexSet s(g.order());
    for (Vertex w = 0; w < g.order(); ++w)
        if (g.dist(center, w) <= radius)
            s.insert(w);
    return s;
}

Graph power_graph(const Graph& g, int p)
{
    if (p < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "power p=" + std::to_string(p));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.dist(u, v) <= p)
                edges.emplace_back(u, v);
    return Graph(g.order(), edges, g.name().empty() ? std::string{} : g.name() + "^" + std::to_string(p));
}

bool is_convex_set(const Graph& g, const VertexSet& s)
{
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Vertex x = members[i], y = members[j];
            if (g.dist(x, y) < 2)
                continue;
            for (Vertex w = 0; w < g.order(); ++w)
                if (!s.contains(w) && on_geodesic(g, x, w, y))
                    return false;
        }
    return true;
}

GateResult is_gated_set(const Graph& g, const VertexSet& s)
{
    GateResult result;
    auto members = s.members();
    if (members.empty())
        return result;
    std::vector<Vertex> gate(g.order(), -1);
    for (Vertex x = 0; x < g.order(); ++x) {
        if (s.contains(x)) {
            gate[x] = x;
            continue;
        }
        int nearest = g.order() + 1;
        int ties = 0;
        Vertex candidate = -1;
        for (Vertex y : members) {
            int d = g.dist(x, y);
            if (d < nearest) {
                nearest = d;
                ties = 1;
                candidate = y;
            }
            else if (d == nearest)
                ++ties;
        }
        bool ok = ties == 1;
        for (Vertex y : members) {
            if (!ok)
                break;
            ok = on_geodesic(g, x, candidate, y);
        }
        if (!ok) {
            result.failing_vertex = x;
            return result;
        }
        gate[x] = candidate;
    }
    result.gated = true;
    result.gate = std::move(gate);
    return result;
}

bool is_metric_triangle(const Graph& g, Vertex a, Vertex b, Vertex c)
{
    const Vertex corners[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        Vertex x = corners[i], y = corners[(i + 1) % 3], z = corners[(i + 2) % 3];
        for (Vertex w = 0; w < g.order(); ++w)
            if (w != x && on_geodesic(g, x, w, y) && on_geodesic(g, x, w, z))
                return false;
    }
    return true;
}

MetricTriangle make_triangle(const Graph& g, Vertex a, Vertex b, Vertex c)
{
    MetricTriangle t{a, b, c, std::nullopt};
    int d = g.dist(a, b);
    if (g.dist(b, c) == d && g.dist(a, c) == d)
        t.size = d;
    return t;
}

bool is_quasi_median(const Graph& g, Vertex x, Vertex y, Vertex z, const MetricTriangle& t)
{
    auto path3 = [&](Vertex from, Vertex a, Vertex b, Vertex to) {
        return g.dist(from, to) == g.dist(from, a) + g.dist(a, b) + g.dist(b, to);
    };
    return path3(x, t.v1, t.v2, y) && path3(y, t.v2, t.v3, z) && path3(z, t.v3, t.v1, x)
        && is_metric_triangle(g, t.v1, t.v2, t.v3);
}

std::vector<MetricTriangle> enumerate_quasi_medians(const Graph& g, Vertex x, Vertex y, Vertex z)
{
    auto cx = (interval(g, x, y) & interval(g, x, z)).members();
    auto cy = (interval(g, y, x) & interval(g, y, z)).members();
    auto cz = (interval(g, z, x) & interval(g, z, y)).members();
    std::vector<MetricTriangle> out;
    for (Vertex v1 : cx)
        for (Vertex v2 : cy) {
            if (g.dist(x, y) != g.dist(x, v1) + g.dist(v1, v2) + g.dist(v2, y))
                continue;
            for (Vertex v3 : cz) {
                if (g.dist(y, z) != g.dist(y, v2) + g.dist(v2, v3) + g.dist(v3, z))
                    continue;
                if (g.dist(z, x) != g.dist(z, v3) + g.dist(v3, v1) + g.dist(v1, x))
                    continue;
                if (is_metric_triangle(g, v1, v2, v3))
                    out.push_back(make_triangle(g, v1, v2, v3));
            }
        }
    return out;
}

MetricTriangle greedy_quasi_median(const Graph& g, Vertex x, Vertex y, Vertex z)
{
    Vertex v1 = farthest_in_common_interval(g, x, y, z);
    Vertex v2 = farthest_in_common_interval(g, y, v1, z);
    Vertex v3 = farthest_in_common_interval(g, z, v1, v2);
    return make_triangle(g, v1, v2, v3);
}

bool is_strongly_equilateral(const Graph& g, const MetricTriangle& t)
{
    int k = g.dist(t.v1, t.v2);
    if (g.dist(t.v2, t.v3) != k || g.dist(t.v1, t.v3) != k)
        throw Error(ErrorKind::NotEquilateral,
            "sides " + std::to_string(g.dist(t.v1, t.v2)) + "," + std::to_string(g.dist(t.v2, t.v3)) + ","
                + std::to_string(g.dist(t.v1, t.v3)));
    const Vertex corners[3] = {t.v1, t.v2, t.v3};
    for (int i = 0; i < 3; ++i) {
        Vertex a = corners[i], b = corners[(i + 1) % 3], c = corners[(i + 2) % 3];
        for (Vertex w = 0; w < g.order(); ++w)
            if (on_geodesic(g, b, w, c) && g.dist(a, w) != k)
                return false;
    }
    return true;
}

VertexSet J_set(const Graph& g, Vertex u, Vertex v)
{
    VertexSet s(g.order());
    for (Vertex z = 0; z < g.order(); ++z) {
        bool trivial = true;
        for (Vertex w = 0; w < g.order() && trivial; ++w)
            if (w != z && on_geodesic(g, z, w, u) && on_geodesic(g, z, w, v))
                trivial = false;
        if (trivial)
            s.insert(z);
    }
    return s;
}

VertexSet M_set(const Graph& g, Vertex u, Vertex v)
{
    VertexSet s(g.order());
    for (Vertex z : J_set(g, u, v).members())
        if (g.dist(u, z) == g.dist(v, z))
            s.insert(z);
    return s;
}

VertexSet Jcirc_set(const Graph& g, Vertex u, Vertex v)
{
    return J_set(g, u, v) - M_set(g, u, v);
}

VertexSet S_set(const Graph& g, Vertex u, Vertex v)
{
    VertexSet s(g.order());
    for (Vertex z = 0; z < g.order(); ++z)
        for (const auto& t : enumerate_quasi_medians(g, z, u, v))
            if (t.size && is_strongly_equilateral(g, t)) {
                s.insert(z);
                break;
            }
    return s;
}

} // namespace medgraph
