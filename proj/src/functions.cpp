#include "medgraph/functions.hpp"

#include "medgraph/error.hpp"
#include "medgraph/metric.hpp"

#include <algorithm>

namespace medgraph {

namespace {

void require_nonadjacent(const Graph& g, Vertex u, Vertex v)
{
    if (g.dist(u, v) < 2)
        throw Error(ErrorKind::AdjacentPair,
            "pair (" + std::to_string(u) + "," + std::to_string(v) + ") at distance " + std::to_string(g.dist(u, v)));
}

bool wp_holds_at(const VertexFunction& f, Vertex u, Vertex v, Vertex w)
{
    const Rational& hi = std::max(f[u], f[v]);
    return f[w] < hi || (f[w] == f[u] && f[w] == f[v]);
}

template <typename Check>
bool all_pairs_in_range(const Graph& g, int lo, int hi, Check check)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            int d = g.dist(u, v);
            if (d >= lo && d <= hi && !check(u, v))
                return false;
        }
    return true;
}

bool peakless_sequence(const VertexFunction& f, const std::vector<Vertex>& w)
{
    int phase = 0; // 0 strictly decreasing, 1 constant, 2 strictly increasing
    for (std::size_t i = 1; i < w.size(); ++i) {
        int c = cmp(f[w[i]], f[w[i - 1]]);
        if (c < 0) {
            if (phase != 0)
                return false;
        }
        else if (c == 0) {
            if (phase == 2)
                return false;
            phase = 1;
        }
        else
            phase = 2;
    }
    return true;
}

} // namespace

Profile::Profile(const std::map<Vertex, Rational>& weights)
{
    for (const auto& [v, q] : weights) {
        if (q < 0)
            throw Error(ErrorKind::InvalidProfile, "negative weight at vertex " + std::to_string(v));
        if (q != 0)
            w_.emplace(v, q);
    }
}

Rational Profile::weight(Vertex v) const
{
    auto it = w_.find(v);
    return it == w_.end() ? Rational(0) : it->second;
}

std::vector<Vertex> Profile::support() const
{
    std::vector<Vertex> out;
    for (const auto& [v, q] : w_)
        out.push_back(v);
    return out;
}

void Profile::validate(const Graph& g) const
{
    if (w_.empty())
        throw Error(ErrorKind::InvalidProfile, "empty support");
    for (const auto& [v, q] : w_)
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::ProfileSupportOutOfRange, "vertex " + std::to_string(v));
}

bool is_geodesic_string(const Graph& g, const std::vector<Vertex>& w)
{
    if (w.empty())
        return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (g.dist(w[0], w[i]) <= g.dist(w[0], w[i - 1]))
            return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.dist(w[0], w[j]) != g.dist(w[0], w[i]) + g.dist(w[i], w[j]))
                return false;
    return true;
}

GeodesicString::GeodesicString(const Graph& g, std::vector<Vertex> vertices) : w_(std::move(vertices))
{
    for (Vertex v : w_)
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    if (!is_geodesic_string(g, w_))
        throw Error(ErrorKind::InvalidString, "vertices do not lie in order on a common geodesic");
}

int GeodesicString::max_gap(const Graph& g) const
{
    int gap = 0;
    for (std::size_t i = 1; i < w_.size(); ++i)
        gap = std::max(gap, g.dist(w_[i - 1], w_[i]));
    return gap;
}

Rational median_value(const Graph& g, const Profile& pi, Vertex x)
{
    Rational total = 0;
    for (const auto& [u, q] : pi.weights())
        total += q * g.dist(u, x);
    return total;
}

VertexFunction median_function(const Graph& g, const Profile& pi)
{
    pi.validate(g);
    VertexFunction f(g.order());
    for (Vertex x = 0; x < g.order(); ++x)
        f[x] = median_value(g, pi, x);
    return f;
}

VertexSet argmin_set(const VertexFunction& f)
{
    const int n = static_cast<int>(f.size());
    VertexSet s(n);
    if (n == 0)
        return s;
    const Rational& best = *std::min_element(f.begin(), f.end());
    for (Vertex x = 0; x < n; ++x)
        if (f[x] == best)
            s.insert(x);
    return s;
}

VertexSet median_set(const Graph& g, const Profile& pi)
{
    return argmin_set(median_function(g, pi));
}

VertexSet local_minima_p(const Graph& g, const VertexFunction& f, int p)
{
    VertexSet s(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        bool local = true;
        for (Vertex y = 0; y < g.order() && local; ++y) {
            int d = g.dist(x, y);
            if (d >= 1 && d <= p && f[y] < f[x])
                local = false;
        }
        if (local)
            s.insert(x);
    }
    return s;
}

VertexSet local_median_set_p(const Graph& g, const Profile& pi, int p)
{
    return local_minima_p(g, median_function(g, pi), p);
}

bool is_peakless_on_string(const VertexFunction& f, const GeodesicString& s)
{
    return peakless_sequence(f, s.vertices());
}

bool is_convex_on_string(const Graph& g, const VertexFunction& f, const GeodesicString& s)
{
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        Vertex a = s[i - 1], b = s[i], c = s[i + 1];
        if (g.dist(a, c) * f[b] > g.dist(b, c) * f[a] + g.dist(a, b) * f[c])
            return false;
    }
    return true;
}

bool check_WC(const Graph& g, const VertexFunction& f, Vertex u, Vertex v)
{
    require_nonadjacent(g, u, v);
    const int duv = g.dist(u, v);
    for (Vertex w : interior_interval(g, u, v).members())
        if (duv * f[w] <= g.dist(v, w) * f[u] + g.dist(u, w) * f[v])
            return true;
    return false;
}

bool check_WP(const Graph& g, const VertexFunction& f, Vertex u, Vertex v)
{
    require_nonadjacent(g, u, v);
    for (Vertex w : interior_interval(g, u, v).members())
        if (wp_holds_at(f, u, v, w))
            return true;
    return false;
}

bool check_Loz(const Graph& g, const VertexFunction& f, Vertex u, Vertex v)
{
    require_nonadjacent(g, u, v);
    auto inner = interior_interval(g, u, v).members();
    if (inner.empty())
        return false;
    Rational lowest = f[inner.front()];
    for (Vertex w : inner)
        lowest = std::min(lowest, f[w]);
    return 2 * lowest <= f[u] + f[v];
}

bool is_p_weakly_peakless(const Graph& g, const VertexFunction& f, int p)
{
    return all_pairs_in_range(g, p + 1, 2 * p, [&](Vertex u, Vertex v) { return check_WP(g, f, u, v); });
}

bool is_p_weakly_convex(const Graph& g, const VertexFunction& f, int p)
{
    return all_pairs_in_range(g, p + 1, 2 * p, [&](Vertex u, Vertex v) { return check_WC(g, f, u, v); });
}

bool is_p_weakly_peakless_all_pairs(const Graph& g, const VertexFunction& f, int p)
{
    return all_pairs_in_range(g, p + 1, g.order(), [&](Vertex u, Vertex v) { return check_WP(g, f, u, v); });
}

bool is_p_weakly_convex_all_pairs(const Graph& g, const VertexFunction& f, int p)
{
    return all_pairs_in_range(g, p + 1, g.order(), [&](Vertex u, Vertex v) { return check_WC(g, f, u, v); });
}

namespace {

std::vector<Vertex> peakless_path(const Graph& g, const VertexFunction& f, Vertex u, Vertex v, int p)
{
    if (u == v)
        return {u};
    if (g.dist(u, v) <= p)
        return {u, v};

    Vertex w = -1;
    for (Vertex x : interior_interval(g, u, v).members())
        if (w < 0 || f[x] < f[w])
            w = x;
    if (w < 0 || !wp_holds_at(f, u, v, w))
        throw Error(ErrorKind::NotPeakless,
            "WP fails for pair (" + std::to_string(u) + "," + std::to_string(v) + ")");

    auto path = peakless_path(g, f, u, w, p);
    auto second = peakless_path(g, f, w, v, p);
    path.insert(path.end(), second.begin() + 1, second.end());
    if (peakless_sequence(f, path))
        return path;

    // f(w) exceeds the smaller endpoint value: skip the constant run next to w.
    bool reversed = f[v] < f[u];
    if (reversed)
        std::reverse(path.begin(), path.end());
    auto at = static_cast<std::size_t>(std::find(path.begin(), path.end(), w) - path.begin());
    std::size_t m = at;
    while (m + 1 < path.size() && f[path[m + 1]] == f[w])
        ++m;
    if (g.dist(path.front(), path[m]) <= p) {
        std::vector<Vertex> shortcut{path.front()};
        shortcut.insert(shortcut.end(), path.begin() + static_cast<std::ptrdiff_t>(m), path.end());
        if (peakless_sequence(f, shortcut)) {
            if (reversed)
                std::reverse(shortcut.begin(), shortcut.end());
            return shortcut;
        }
    }
    throw Error(ErrorKind::NotPeakless,
        "no peakless p-geodesic between " + std::to_string(u) + " and " + std::to_string(v));
}

} // namespace

GeodesicString find_peakless_p_geodesic(const Graph& g, const VertexFunction& f, Vertex u, Vertex v, int p)
{
    if (p < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "p=" + std::to_string(p));
    GeodesicString s(g, peakless_path(g, f, u, v, p));
    if (s.max_gap(g) > p || !is_peakless_on_string(f, s))
        throw Error(ErrorKind::NotPeakless, "constructed string fails validation");
    return s;
}

bool is_unimodal_on_power(const Graph& g, const VertexFunction& f, int p)
{
    return local_minima_p(g, f, p) == argmin_set(f);
}

VertexSet level_set(const VertexFunction& f, const Rational& alpha)
{
    VertexSet s(static_cast<int>(f.size()));
    for (Vertex x = 0; x < static_cast<int>(f.size()); ++x)
        if (f[x] <= alpha)
            s.insert(x);
    return s;
}

bool is_p_connected(const Graph& g, const VertexSet& s, int p)
{
    auto members = s.members();
    if (members.empty())
        return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{members.front()};
    seen[members.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : members)
            if (!seen[y] && g.dist(x, y) <= p) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == members.size();
}

bool is_p_isometric(const Graph& g, const VertexSet& s, int p)
{
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Vertex x = members[i], y = members[j];
            if (g.dist(x, y) <= p)
                continue;
            if ((interior_interval(g, x, y) & s).empty())
                return false;
        }
    return true;
}

} // namespace medgraph
