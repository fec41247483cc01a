#include "medgraph/classes.hpp"

#include "medgraph/error.hpp"
#include "medgraph/metric.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace medgraph {

namespace {

ClassVerdict pass(std::string name)
{
    return ClassVerdict{std::move(name), true, {}, {}};
}

ClassVerdict fail(std::string name, std::vector<Vertex> witness, std::string detail)
{
    return ClassVerdict{std::move(name), false, std::move(witness), std::move(detail)};
}

bool has_common_neighbor_at(const Graph& g, Vertex v, Vertex w, Vertex u, int dist)
{
    for (Vertex x : g.neighbors(v))
        if (g.adjacent(x, w) && g.dist(u, x) == dist)
            return true;
    return false;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b)
{
    std::vector<Vertex> out;
    std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
        g.neighbors(b).end(), std::back_inserter(out));
    return out;
}

bool adjacent_to_all(const Graph& g, Vertex x, const std::vector<Vertex>& zs, Vertex except = -1)
{
    for (Vertex z : zs)
        if (z != except && !g.adjacent(x, z))
            return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

// Each square once, as (v1, v2, v3, v4) with v1 < v3 and v2 < v4.
void for_each_induced_square(const Graph& g, const std::function<bool(Vertex, Vertex, Vertex, Vertex)>& visit)
{
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex c = a + 1; c < g.order(); ++c) {
            if (g.dist(a, c) != 2)
                continue;
            auto common = common_neighbors(g, a, c);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]) && !visit(a, common[i], c, common[j]))
                        return;
        }
}

} // namespace

ClassVerdict is_meshed(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w = v + 1; w < g.order(); ++w) {
            if (g.dist(v, w) != 2)
                continue;
            auto common = common_neighbors(g, v, w);
            for (Vertex u = 0; u < g.order(); ++u) {
                bool ok = false;
                for (Vertex x : common)
                    if (2 * g.dist(u, x) <= g.dist(u, v) + g.dist(u, w)) {
                        ok = true;
                        break;
                    }
                if (!ok)
                    return fail("meshed", {u, v, w}, "no common neighbor x of v,w with 2d(u,x) <= d(u,v)+d(u,w)");
            }
        }
    return pass("meshed");
}

ClassVerdict triangle_condition(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex w : g.neighbors(v)) {
                int k = g.dist(u, v);
                if (w <= v || k < 1 || g.dist(u, w) != k)
                    continue;
                if (!has_common_neighbor_at(g, v, w, u, k - 1))
                    return fail("triangle-condition", {u, v, w}, "TC(u) fails for edge vw");
            }
    return pass("triangle-condition");
}

ClassVerdict quadrangle_condition(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex z = 0; z < g.order(); ++z) {
            int k = g.dist(u, z) - 1;
            if (k < 2)
                continue;
            const auto& nz = g.neighbors(z);
            for (std::size_t i = 0; i < nz.size(); ++i)
                for (std::size_t j = i + 1; j < nz.size(); ++j) {
                    Vertex v = nz[i], w = nz[j];
                    if (g.dist(v, w) != 2 || g.dist(u, v) != k || g.dist(u, w) != k)
                        continue;
                    if (!has_common_neighbor_at(g, v, w, u, k - 1))
                        return fail("quadrangle-condition", {u, v, w, z}, "QC(u) fails for v,w,z");
                }
        }
    return pass("quadrangle-condition");
}

ClassVerdict is_weakly_modular(const Graph& g)
{
    auto tc = triangle_condition(g);
    if (!tc.verdict)
        return fail("weakly-modular", tc.witness, tc.detail);
    auto qc = quadrangle_condition(g);
    if (!qc.verdict)
        return fail("weakly-modular", qc.witness, qc.detail);
    return pass("weakly-modular");
}

ClassVerdict is_modular(const Graph& g)
{
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (Vertex w = v + 1; w < n; ++w) {
                bool found = false;
                for (Vertex x = 0; x < n && !found; ++x)
                    found = g.dist(u, x) + g.dist(x, v) == g.dist(u, v) && g.dist(v, x) + g.dist(x, w) == g.dist(v, w)
                        && g.dist(w, x) + g.dist(x, u) == g.dist(w, u);
                if (!found)
                    return fail("modular", {u, v, w}, "triple without a median");
            }
    return pass("modular");
}

std::vector<Vertex> mcs_order(const Graph& g)
{
    const int n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<char> done(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best]))
                best = v;
        done[best] = 1;
        order.push_back(best);
        for (Vertex y : g.neighbors(best))
            if (!done[y])
                ++weight[y];
    }
    return order;
}

ClassVerdict is_chordal(const Graph& g)
{
    // The reverse of an MCS order is a perfect elimination order iff G is chordal.
    auto order = mcs_order(g);
    std::vector<int> position(g.order());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = static_cast<int>(i);
    bool peo = true;
    for (Vertex v : order) {
        std::vector<Vertex> earlier;
        for (Vertex y : g.neighbors(v))
            if (position[y] < position[v])
                earlier.push_back(y);
        if (!is_clique(g, earlier)) {
            peo = false;
            break;
        }
    }
    if (peo)
        return pass("chordal");

    // Witness: a nonadjacent pair of neighbors a,b of v joined outside N[v].
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        const auto& nv = g.neighbors(v);
        for (std::size_t i = 0; i < nv.size(); ++i)
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                Vertex a = nv[i], b = nv[j];
                if (g.adjacent(a, b))
                    continue;
                std::vector<Vertex> parent(n, -2);
                for (Vertex y : nv)
                    parent[y] = -3;
                parent[v] = -3;
                parent[a] = -1;
                parent[b] = -2;
                std::vector<Vertex> queue{a};
                for (std::size_t h = 0; h < queue.size() && parent[b] == -2; ++h)
                    for (Vertex y : g.neighbors(queue[h]))
                        if (parent[y] == -2) {
                            parent[y] = queue[h];
                            queue.push_back(y);
                        }
                if (parent[b] == -2)
                    continue;
                std::vector<Vertex> cycle{v};
                for (Vertex x = b; x != -1; x = parent[x])
                    cycle.push_back(x);
                return fail("chordal", cycle, "chordless cycle of length " + std::to_string(cycle.size()));
            }
    }
    return fail("chordal", {}, "no perfect elimination order");
}

std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int length)
{
    if (length < 4)
        return std::nullopt;
    std::vector<Vertex> path;
    std::function<bool()> extend = [&]() -> bool {
        const Vertex last = path.back();
        const bool closing = static_cast<int>(path.size()) == length - 1;
        for (Vertex y : g.neighbors(last)) {
            if (y <= path.front() || std::find(path.begin(), path.end(), y) != path.end())
                continue;
            bool ok = true;
            for (std::size_t i = 1; i + 1 < path.size() && ok; ++i)
                ok = !g.adjacent(y, path[i]);
            if (!ok || (path.size() >= 2 && g.adjacent(y, path.front()) != closing))
                continue;
            path.push_back(y);
            if (closing || extend())
                return true;
            path.pop_back();
        }
        return false;
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        if (extend())
            return path;
    }
    return std::nullopt;
}

ClassVerdict is_bridged(const Graph& g)
{
    auto wm = is_weakly_modular(g);
    if (!wm.verdict)
        return fail("bridged", wm.witness, "not weakly modular: " + wm.detail);
    for (int len : {4, 5})
        if (auto c = find_induced_cycle(g, len))
            return fail("bridged", *c, "induced C" + std::to_string(len));
    return pass("bridged");
}

ClassVerdict is_weakly_bridged(const Graph& g)
{
    auto wm = is_weakly_modular(g);
    if (!wm.verdict)
        return fail("weakly-bridged", wm.witness, "not weakly modular: " + wm.detail);
    if (auto c = find_induced_cycle(g, 4))
        return fail("weakly-bridged", *c, "induced C4");
    return pass("weakly-bridged");
}

ClassVerdict has_convex_balls(const Graph& g)
{
    const int n = g.order();
    for (Vertex c = 0; c < n; ++c) {
        int ecc = g.distances().eccentricity(c);
        for (int r = 1; r < ecc; ++r)
            for (Vertex x = 0; x < n; ++x) {
                if (g.dist(c, x) > r)
                    continue;
                for (Vertex y = x + 1; y < n; ++y) {
                    if (g.dist(c, y) > r || g.dist(x, y) < 2)
                        continue;
                    for (Vertex z = 0; z < n; ++z)
                        if (g.dist(c, z) > r && g.dist(x, z) + g.dist(z, y) == g.dist(x, y))
                            return fail("convex-balls", {c, r, x, y, z},
                                "ball B_r(c) misses z in I(x,y); witness is (c, r, x, y, z)");
                }
            }
    }
    return pass("convex-balls");
}

ClassVerdict satisfies_INC(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.dist(u, v) < 2)
                continue;
            std::vector<Vertex> near;
            for (Vertex x : g.neighbors(u))
                if (1 + g.dist(x, v) == g.dist(u, v))
                    near.push_back(x);
            for (std::size_t i = 0; i < near.size(); ++i)
                for (std::size_t j = i + 1; j < near.size(); ++j)
                    if (!g.adjacent(near[i], near[j]))
                        return fail("INC", {u, v, near[i], near[j]}, "nonadjacent neighbors of u in I(u,v)");
        }
    return pass("INC");
}

ClassVerdict satisfies_TPC(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex x = 0; x < g.order(); ++x) {
            int k = g.dist(v, x);
            if (k < 2)
                continue;
            for (Vertex y : g.neighbors(x)) {
                if (y <= x || g.dist(v, y) != k)
                    continue;
                if (has_common_neighbor_at(g, x, y, v, k - 1))
                    continue;
                bool pentagon = false;
                for (Vertex z = 0; z < g.order() && !pentagon; ++z) {
                    if (g.dist(v, z) != k - 2)
                        continue;
                    pentagon = !common_neighbors(g, x, z).empty() && !common_neighbors(g, y, z).empty();
                }
                if (!pentagon)
                    return fail("TPC", {v, x, y}, "edge xy has neither a triangle nor a pentagon towards v");
            }
        }
    return pass("TPC");
}

ClassVerdict satisfies_PC(const Graph& g)
{
    std::optional<ClassVerdict> bad;
    for_each_induced_square(g, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        for (Vertex u = 0; u < g.order(); ++u)
            if (g.dist(u, a) + g.dist(u, c) != g.dist(u, b) + g.dist(u, d)) {
                bad = fail("PC", {u, a, b, c, d}, "d(u,v1)+d(u,v3) != d(u,v2)+d(u,v4)");
                return false;
            }
        return true;
    });
    return bad ? *bad : pass("PC");
}

ClassVerdict satisfies_ICm(const Graph& g, int m)
{
    const std::string name = "IC" + std::to_string(m);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.dist(u, v) != 2)
                continue;
            auto in = interval(g, u, v).members();
            // Induced subgraph of K_{m×2} iff its complement is a matching and it needs at most m slots.
            int slots = 0;
            bool matching = true;
            for (Vertex a : in) {
                int non = 0;
                for (Vertex b : in)
                    if (b != a && !g.adjacent(a, b))
                        ++non;
                if (non > 1)
                    matching = false;
                slots += non == 0 ? 2 : 1;
            }
            slots /= 2;
            if (!matching || slots > m)
                return fail(name, {u, v}, matching ? "2-interval needs more than m hyperoctahedron slots"
                                                   : "complement of the 2-interval is not a matching");
        }
    return pass(name);
}

ClassVerdict is_thick(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.dist(u, v) != 2)
                continue;
            auto common = common_neighbors(g, u, v);
            bool square = false;
            for (std::size_t i = 0; i < common.size() && !square; ++i)
                for (std::size_t j = i + 1; j < common.size() && !square; ++j)
                    square = !g.adjacent(common[i], common[j]);
            if (!square)
                return fail("thick", {u, v}, "distance-2 pair not in a square");
        }
    return pass("thick");
}

ClassVerdict is_bipartite(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u))
            if (g.dist(0, u) == g.dist(0, v))
                return fail("bipartite", {0, u, v}, "edge between vertices at equal distance from 0");
    return pass("bipartite");
}

bool check_condition_a(const Graph& g, Vertex u, Vertex v)
{
    if (g.dist(u, v) != 3)
        throw Error(ErrorKind::WrongDistance, "condition (a) needs d(u,v)=3");
    auto in = interval(g, u, v);
    std::vector<Vertex> near_u, near_v;
    for (Vertex x : g.neighbors(u))
        if (in.contains(x))
            near_u.push_back(x);
    for (Vertex y : g.neighbors(v))
        if (in.contains(y))
            near_v.push_back(y);
    for (Vertex x : near_u)
        for (Vertex y : near_v)
            if (adjacent_to_all(g, x, near_v, y) && adjacent_to_all(g, y, near_u, x))
                return true;
    return false;
}

bool check_condition_b(const Graph& g, Vertex u, Vertex v)
{
    if (g.dist(u, v) != 4)
        throw Error(ErrorKind::WrongDistance, "condition (b) needs d(u,v)=4");
    auto in = interval(g, u, v);
    std::vector<Vertex> near_u, near_v, middle;
    for (Vertex z : in.members()) {
        if (g.dist(u, z) == 1)
            near_u.push_back(z);
        if (g.dist(v, z) == 1)
            near_v.push_back(z);
        if (g.dist(u, z) == 2)
            middle.push_back(z);
    }
    bool x_ok = false, y_ok = false;
    for (Vertex x : middle) {
        x_ok = x_ok || adjacent_to_all(g, x, near_u);
        y_ok = y_ok || adjacent_to_all(g, x, near_v);
    }
    return x_ok && y_ok;
}

bool check_condition_c(const Graph& g, Vertex u, Vertex v)
{
    if (g.dist(u, v) != 4)
        throw Error(ErrorKind::WrongDistance, "condition (c) needs d(u,v)=4");
    auto in = interval(g, u, v);
    std::vector<Vertex> middle;
    for (Vertex z : in.members())
        if (g.dist(u, z) == 2)
            middle.push_back(z);
    bool x_ok = false, y_ok = false;
    for (Vertex x : g.neighbors(u))
        x_ok = x_ok || (in.contains(x) && adjacent_to_all(g, x, middle));
    for (Vertex y : g.neighbors(v))
        y_ok = y_ok || (in.contains(y) && adjacent_to_all(g, y, middle));
    return x_ok && y_ok;
}

ClassVerdict is_bipartite_absolute_retract(const Graph& g)
{
    const std::string name = "bipartite-absolute-retract";
    auto bip = is_bipartite(g);
    if (!bip.verdict)
        return fail(name, bip.witness, "not bipartite");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.dist(u, v) < 3)
                continue;
            auto in = interval(g, u, v);
            std::vector<Vertex> near_v;
            for (Vertex y : g.neighbors(v))
                if (in.contains(y))
                    near_v.push_back(y);
            bool found = false;
            for (Vertex x : in.members())
                if (x != v && adjacent_to_all(g, x, near_v)) {
                    found = true;
                    break;
                }
            if (!found)
                return fail(name, {u, v}, "neighbors of v in I(u,v) lack a second common neighbor in I(u,v)");
        }
    return pass(name);
}

ClassVerdict bn_extension_condition(const Graph& g, int max_n)
{
    const std::string name = "bn-extension";
    auto mod = is_modular(g);
    if (!mod.verdict)
        return fail(name, mod.witness, "not modular");
    const int n = g.order();
    std::optional<ClassVerdict> bad;
    for (int size = 4; size <= max_n && !bad; ++size) {
        std::vector<Vertex> a;
        std::function<void(Vertex)> choose_a = [&](Vertex from) {
            if (bad)
                return;
            if (static_cast<int>(a.size()) == size) {
                // b_i adjacent to every a_j except a_i.
                std::vector<std::vector<Vertex>> cand(size);
                for (int i = 0; i < size; ++i)
                    for (Vertex x = 0; x < n; ++x) {
                        bool ok = !g.adjacent(x, a[i]) && std::find(a.begin(), a.end(), x) == a.end();
                        for (int j = 0; j < size && ok; ++j)
                            ok = j == i || g.adjacent(x, a[j]);
                        if (ok)
                            cand[i].push_back(x);
                    }
                std::vector<Vertex> b(size);
                std::function<void(int)> choose_b = [&](int i) {
                    if (bad)
                        return;
                    if (i == size) {
                        for (int p = 0; p < size; ++p)
                            for (int q = p + 1; q < size; ++q)
                                if (g.adjacent(b[p], b[q]))
                                    return;
                        for (Vertex x = 0; x < n; ++x)
                            if (adjacent_to_all(g, x, b))
                                for (Vertex y : g.neighbors(x))
                                    if (adjacent_to_all(g, y, a))
                                        return;
                        std::vector<Vertex> w = a;
                        w.insert(w.end(), b.begin(), b.end());
                        bad = fail(name, w, "induced B_" + std::to_string(size) + " without extension");
                        return;
                    }
                    for (Vertex x : cand[i])
                        if (std::find(b.begin(), b.begin() + i, x) == b.begin() + i) {
                            b[i] = x;
                            choose_b(i + 1);
                        }
                };
                choose_b(0);
                return;
            }
            for (Vertex x = from; x < n; ++x) {
                bool ok = true;
                for (Vertex y : a)
                    ok = ok && g.dist(x, y) == 2;
                if (!ok)
                    continue;
                a.push_back(x);
                choose_a(x + 1);
                a.pop_back();
            }
        };
        choose_a(0);
    }
    return bad ? *bad : pass(name);
}

AbsoluteRetractReport absolute_retract_report(const Graph& g)
{
    AbsoluteRetractReport r;
    r.interval_condition = is_bipartite_absolute_retract(g);
    auto bip = is_bipartite(g);
    r.extension_condition = bip.verdict ? bn_extension_condition(g) : fail("bn-extension", bip.witness, "not bipartite");
    r.disagree = r.interval_condition.verdict != r.extension_condition.verdict;
    return r;
}

namespace {

struct TwoInterval {
    Vertex u, v;
    std::vector<Vertex> interior;
};

// Pairs at distance 2 whose interior is 2 or 3 pairwise adjacent vertices.
std::vector<TwoInterval> clique_two_intervals(const Graph& g)
{
    std::vector<TwoInterval> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.dist(u, v) != 2)
                continue;
            auto in = common_neighbors(g, u, v);
            if (in.size() >= 2 && in.size() <= 3 && is_clique(g, in))
                out.push_back({u, v, in});
        }
    return out;
}

// Vertices at distance 2 from u, v and every interior vertex except `far`, and at distance 3 from `far`.
std::vector<Vertex> far_vertices(const Graph& g, const TwoInterval& iv, Vertex far)
{
    std::vector<Vertex> out;
    for (Vertex a = 0; a < g.order(); ++a) {
        bool ok = g.dist(a, iv.u) == 2 && g.dist(a, iv.v) == 2 && g.dist(a, far) == 3;
        for (Vertex q : iv.interior)
            ok = ok && (q == far || g.dist(a, q) == 2);
        if (ok)
            out.push_back(a);
    }
    return out;
}

// b outside I(u,v), adjacent to u or v, whose interior neighbors are exactly `hit`.
std::optional<Vertex> attached_vertex(const Graph& g, const TwoInterval& iv, const std::vector<Vertex>& hit)
{
    for (Vertex b = 0; b < g.order(); ++b) {
        if (b == iv.u || b == iv.v || g.dist(iv.u, b) + g.dist(b, iv.v) == 2)
            continue;
        if (!g.adjacent(b, iv.u) && !g.adjacent(b, iv.v))
            continue;
        bool ok = true;
        for (Vertex q : iv.interior) {
            bool want = std::find(hit.begin(), hit.end(), q) != hit.end();
            ok = ok && g.adjacent(b, q) == want;
        }
        if (ok)
            return b;
    }
    return std::nullopt;
}

} // namespace

std::optional<BetaWitness> detect_beta_configuration(const Graph& g)
{
    for (const auto& iv : clique_two_intervals(g)) {
        if (iv.interior.size() != 3)
            continue;
        auto jc = Jcirc_set(g, iv.u, iv.v).members();
        Vertex personal[3] = {-1, -1, -1};
        for (int i = 0; i < 3; ++i)
            for (Vertex x : jc) {
                int hits = 0;
                for (Vertex q : iv.interior)
                    hits += g.adjacent(x, q);
                if (hits == 1 && g.adjacent(x, iv.interior[i])) {
                    personal[i] = x;
                    break;
                }
            }
        if (personal[0] >= 0 && personal[1] >= 0 && personal[2] >= 0)
            return BetaWitness{iv.u, iv.v, iv.interior[0], iv.interior[1], iv.interior[2], personal[0], personal[1],
                personal[2]};
    }
    return std::nullopt;
}

std::optional<AlphaWitness> detect_alpha_configuration(const Graph& g)
{
    auto intervals = clique_two_intervals(g);
    for (const auto& iv : intervals)
        for (Vertex t : iv.interior) {
            auto a = far_vertices(g, iv, t);
            auto b = attached_vertex(g, iv, {t});
            if (!a.empty() && b) {
                std::vector<Vertex> roles;
                for (Vertex q : iv.interior)
                    if (q != t)
                        roles.push_back(q);
                roles.insert(roles.begin() + 1, t); // s, t[, w]
                return AlphaWitness{1, iv.u, iv.v, roles, {a.front()}, *b};
            }
        }
    for (const auto& iv : intervals) {
        if (iv.interior.size() != 3)
            continue;
        for (int si = 0; si < 3; ++si) {
            Vertex s = iv.interior[si];
            Vertex t = iv.interior[(si + 1) % 3], w = iv.interior[(si + 2) % 3];
            auto a1 = far_vertices(g, iv, t);
            auto a2 = far_vertices(g, iv, w);
            if (a1.empty() || a2.empty())
                continue;
            if (auto b = attached_vertex(g, iv, {t, w}))
                return AlphaWitness{2, iv.u, iv.v, {s, t, w}, {a1.front(), a2.front()}, *b};
        }
    }
    for (const auto& iv : intervals) {
        if (iv.interior.size() != 3)
            continue;
        Vertex s = iv.interior[0], t = iv.interior[1], w = iv.interior[2];
        auto a1 = far_vertices(g, iv, t);
        auto a2 = far_vertices(g, iv, w);
        auto a3 = far_vertices(g, iv, s);
        if (!a1.empty() && !a2.empty() && !a3.empty())
            return AlphaWitness{3, iv.u, iv.v, {s, t, w}, {a1.front(), a2.front(), a3.front()}, -1};
    }
    return std::nullopt;
}

ClassVerdict verify_labeled_embedding(const Graph& g, const LabeledEmbedding& e)
{
    if (static_cast<int>(e.labels.size()) != g.order())
        throw Error(ErrorKind::LabelArity,
            std::to_string(e.labels.size()) + " labels for " + std::to_string(g.order()) + " vertices");
    for (Vertex v = 0; v < g.order(); ++v) {
        auto size = e.labels[v].size();
        if (e.target == EmbeddingTarget::HalvedCube && size % 2 != 0)
            throw Error(ErrorKind::LabelArity, "odd label at vertex " + std::to_string(v));
        if (e.target == EmbeddingTarget::Johnson && static_cast<int>(size) != e.k)
            throw Error(ErrorKind::LabelArity, "label of size " + std::to_string(size) + " at vertex " + std::to_string(v));
    }
    const int div = e.target == EmbeddingTarget::Hypercube ? 1 : 2;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            std::vector<int> diff;
            std::set_symmetric_difference(e.labels[u].begin(), e.labels[u].end(), e.labels[v].begin(),
                e.labels[v].end(), std::back_inserter(diff));
            if (static_cast<int>(diff.size()) != div * g.dist(u, v))
                return fail("embedding", {u, v}, "label distance differs from graph distance");
        }
    return pass("embedding");
}

ClassVerdict connected_medians_partial_johnson(const Graph& g, const LabeledEmbedding& e)
{
    if (e.target != EmbeddingTarget::Johnson || !verify_labeled_embedding(g, e).verdict)
        throw Error(ErrorKind::EmbeddingUnverified, "not an isometric Johnson embedding");
    auto m = is_meshed(g);
    m.name = "connected-medians-partial-johnson";
    return m;
}

ClassVerdict connected_medians_partial_halved_cube(const Graph& g, const LabeledEmbedding& e)
{
    const std::string name = "connected-medians-partial-halved-cube";
    if (e.target != EmbeddingTarget::HalvedCube || !verify_labeled_embedding(g, e).verdict)
        throw Error(ErrorKind::EmbeddingUnverified, "not an isometric halved-cube embedding");
    auto m = is_meshed(g);
    if (!m.verdict)
        return fail(name, m.witness, "not meshed");
    auto beta = detect_beta_configuration(g);
    if (beta)
        return fail(name, {beta->u, beta->v, beta->s, beta->t, beta->w, beta->a, beta->b, beta->c}, "beta-configuration");
    bool wm = is_weakly_modular(g).verdict;
    if (auto alpha = detect_alpha_configuration(g)) {
        std::vector<Vertex> w{alpha->u, alpha->v};
        w.insert(w.end(), alpha->interior.begin(), alpha->interior.end());
        w.insert(w.end(), alpha->a.begin(), alpha->a.end());
        if (alpha->b >= 0)
            w.push_back(alpha->b);
        return fail(name, w, "alpha-configuration of type " + std::to_string(alpha->type)
                + (wm ? " (weakly modular input: the beta-only criterion would accept)" : ""));
    }
    auto out = pass(name);
    if (wm)
        out.detail = "weakly modular; beta-only criterion agrees";
    return out;
}

} // namespace medgraph
