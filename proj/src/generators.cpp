#include "medgraph/generators.hpp"

#include "medgraph/error.hpp"
#include "medgraph/metric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace medgraph {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::ParameterOutOfRange, what);
}

std::vector<int> mask_members(std::uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1U)
            out.push_back(i);
    return out;
}

Generated from_masks(const std::vector<std::uint32_t>& masks, int adjacent_popcount, EmbeddingTarget target, int k,
    std::string name)
{
    std::map<std::uint32_t, Vertex> index;
    for (std::size_t i = 0; i < masks.size(); ++i)
        index[masks[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (std::popcount(masks[i] ^ masks[j]) == adjacent_popcount)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    LabeledEmbedding e;
    e.target = target;
    e.k = k;
    for (auto m : masks)
        e.labels.push_back(mask_members(m));
    return Generated{Graph(static_cast<int>(masks.size()), edges, std::move(name)), std::move(e)};
}

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

int parse_int(const std::string& s)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    }
    catch (const std::exception&) {
    }
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + s + "'");
}

// Canonical code: lexicographically smallest upper-triangle bit string over invariant-respecting relabelings.
std::uint64_t canonical_code(int n, const std::vector<std::uint32_t>& adj)
{
    std::vector<std::pair<int, std::vector<int>>> inv(n);
    for (int v = 0; v < n; ++v) {
        inv[v].first = std::popcount(adj[v]);
        for (int y : mask_members(adj[v]))
            inv[v].second.push_back(std::popcount(adj[y]));
        std::sort(inv[v].second.begin(), inv[v].second.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> permute = [&](std::size_t b) {
        if (b == blocks.size()) {
            std::uint64_t code = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    code = (code << 1) | ((adj[order[i]] >> order[j]) & 1U);
            best = std::min(best, code);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do
            permute(b + 1);
        while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    permute(0);
    return best;
}

Graph graph_from_masks(int n, const std::vector<std::uint32_t>& adj)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((adj[u] >> v) & 1U)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent)
{
    std::vector<std::string> kids;
    for (int y : adj[v])
        if (y != parent)
            kids.push_back(ahu(adj, y, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids)
        s += k;
    return s + ")";
}

std::string tree_code(const std::vector<std::vector<int>>& adj)
{
    // Root at the center(s) found by repeatedly peeling leaves.
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1)
            layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int y : adj[v])
                if (--degree[y] == 1)
                    next.push_back(y);
        layer = next;
    }
    std::string best;
    for (int c : layer) {
        auto s = ahu(adj, c, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

} // namespace

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e, "P" + std::to_string(n));
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e, "C" + std::to_string(n));
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e, "K" + std::to_string(n));
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete bipartite needs both sides nonempty");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return Graph(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph star_graph(int leaves)
{
    return complete_bipartite(1, leaves).with_name("star" + std::to_string(leaves));
}

Graph wheel_graph(int n)
{
    require(n >= 3, "wheel needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(i, n);
    }
    return Graph(n + 1, e, "W" + std::to_string(n));
}

Graph wheel_minus_graph(int n)
{
    require(n >= 4, "W_n minus a spoke needs n >= 4");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        if (i != 0)
            e.emplace_back(i, n);
    }
    return Graph(n + 1, e, "W" + std::to_string(n) + "-");
}

Graph propeller_graph()
{
    // K_5 on {0..4} minus the triangle {2,3,4}.
    std::vector<Edge> e{{0, 1}};
    for (int x = 2; x < 5; ++x) {
        e.emplace_back(0, x);
        e.emplace_back(1, x);
    }
    return Graph(5, e, "propeller");
}

Graph hyperoctahedron(int m)
{
    require(m >= 2, "hyperoctahedron needs m >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < 2 * m; ++i)
        for (int j = i + 1; j < 2 * m; ++j)
            if ((i ^ 1) != j)
                e.emplace_back(i, j);
    return Graph(2 * m, e, "K" + std::to_string(m) + "x2");
}

Graph b_graph(int n)
{
    require(n >= 3, "B_n needs n >= 3 to be connected");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                e.emplace_back(i, n + j);
    return Graph(2 * n, e, "B" + std::to_string(n));
}

Graph b_hat_graph(int n)
{
    require(n >= 2, "hat B_n needs n >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j)
                e.emplace_back(i, n + j);
        e.emplace_back(2 * n, n + i);
        e.emplace_back(2 * n + 1, i);
    }
    e.emplace_back(2 * n, 2 * n + 1);
    return Graph(2 * n + 2, e, "B" + std::to_string(n) + "hat");
}

Generated hypercube(int n)
{
    // Eager 16-bit distance matrices bound the size at 2^12 vertices.
    require(n >= 1 && n <= 12, "hypercube needs 1 <= n <= 12");
    std::vector<std::uint32_t> masks(std::size_t{1} << n);
    std::iota(masks.begin(), masks.end(), 0U);
    return from_masks(masks, 1, EmbeddingTarget::Hypercube, 0, "H" + std::to_string(n));
}

Generated halved_cube(int n)
{
    require(n >= 2 && n <= 12, "halved cube needs 2 <= n <= 12");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1U << n); ++m)
        if (std::popcount(m) % 2 == 0)
            masks.push_back(m);
    return from_masks(masks, 2, EmbeddingTarget::HalvedCube, 0, "halfH" + std::to_string(n));
}

Generated johnson_graph(int n, int k)
{
    require(n >= 2 && n <= 31 && k >= 1 && k < n && binomial(n, k) <= 10000, "johnson needs 1 <= k < n, C(n,k) <= 10000");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1U << n); ++m)
        if (std::popcount(m) == k)
            masks.push_back(m);
    return from_masks(masks, 2, EmbeddingTarget::Johnson, k, "J" + std::to_string(n) + "," + std::to_string(k));
}

Graph tree_from_pruefer(const std::vector<int>& code)
{
    const int n = static_cast<int>(code.size()) + 2;
    for (int x : code)
        require(x >= 0 && x < n, "Pruefer entry out of range");
    std::vector<int> degree(n, 1);
    for (int x : code)
        ++degree[x];
    std::vector<Edge> e;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    for (int x : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(leaf, x);
        if (--degree[x] == 1)
            leaves.insert(x);
    }
    e.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
    return Graph(n, e, "tree");
}

Graph cartesian_product(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<Edge> e;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            for (Vertex y : g2.neighbors(j))
                if (y > j)
                    e.emplace_back(i * n2 + j, i * n2 + y);
            for (Vertex x : g1.neighbors(i))
                if (x > i)
                    e.emplace_back(i * n2 + j, x * n2 + j);
        }
    std::string name;
    if (!g1.name().empty() && !g2.name().empty())
        name = g1.name() + "x" + g2.name();
    return Graph(n1 * n2, e, name);
}

Graph gated_amalgam(const Graph& g1, const Graph& g2, const std::vector<Vertex>& h1, const std::vector<Vertex>& h2)
{
    require(!h1.empty() && h1.size() == h2.size(), "template maps must be nonempty and of equal size");
    auto image = [](const Graph& g, const std::vector<Vertex>& h) {
        VertexSet s(g.order());
        for (Vertex x : h) {
            require(x >= 0 && x < g.order() && !s.contains(x), "template map is not an injection");
            s.insert(x);
        }
        return s;
    };
    auto s1 = image(g1, h1), s2 = image(g2, h2);
    for (std::size_t i = 0; i < h1.size(); ++i)
        for (std::size_t j = i + 1; j < h1.size(); ++j)
            if (g1.adjacent(h1[i], h1[j]) != g2.adjacent(h2[i], h2[j]))
                throw Error(ErrorKind::NotInducedIso, "template images differ on pair " + std::to_string(i) + ","
                        + std::to_string(j));
    if (!is_gated_set(g1, s1).gated)
        throw Error(ErrorKind::NotGated, "template image not gated in the first graph");
    if (!is_gated_set(g2, s2).gated)
        throw Error(ErrorKind::NotGated, "template image not gated in the second graph");

    std::vector<Vertex> map2(g2.order(), -1);
    for (std::size_t i = 0; i < h2.size(); ++i)
        map2[h2[i]] = h1[i];
    Vertex next = g1.order();
    for (Vertex x = 0; x < g2.order(); ++x)
        if (map2[x] < 0)
            map2[x] = next++;
    auto e = g1.edges();
    for (auto [a, b] : g2.edges())
        if (!(s2.contains(a) && s2.contains(b)))
            e.emplace_back(map2[a], map2[b]);
    return Graph(next, e);
}

ProjectivePlaneGraph projective_incidence_graph(int q)
{
    if (!is_prime(q))
        throw Error(ErrorKind::NotPrime, "q=" + std::to_string(q));
    require(q <= 61, "q too large for desk-scale distance matrices");
    // Normalized representatives: first nonzero coordinate equals 1.
    std::vector<std::array<int, 3>> reps;
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
            reps.push_back({1, b, c});
    for (int c = 0; c < q; ++c)
        reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});
    const int n = static_cast<int>(reps.size());
    ProjectivePlaneGraph out;
    out.points = n;
    out.u = 2 * n;
    out.v = 2 * n + 1;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(out.u, i);
        e.emplace_back(out.v, n + i);
        for (int j = 0; j < n; ++j) {
            int dot = reps[i][0] * reps[j][0] + reps[i][1] * reps[j][1] + reps[i][2] * reps[j][2];
            if (dot % q == 0)
                e.emplace_back(i, n + j);
        }
    }
    out.graph = Graph(2 * n + 2, e, "G" + std::to_string(q));
    return out;
}

BetaConfiguration beta_configuration(Attach a, Attach b, Attach c, const std::vector<std::string>& extra_edges)
{
    BetaConfiguration r;
    std::vector<Edge> e{{r.s, r.t}, {r.s, r.w}, {r.t, r.w}, {r.a, r.s}, {r.b, r.t}, {r.c, r.w}};
    for (Vertex x : {r.s, r.t, r.w}) {
        e.emplace_back(r.u, x);
        e.emplace_back(r.v, x);
    }
    auto end = [&](Attach at) { return at == Attach::U ? r.u : r.v; };
    e.emplace_back(r.a, end(a));
    e.emplace_back(r.b, end(b));
    e.emplace_back(r.c, end(c));
    for (const auto& x : extra_edges) {
        if (x == "ab")
            e.emplace_back(r.a, r.b);
        else if (x == "ac")
            e.emplace_back(r.a, r.c);
        else if (x == "bc")
            e.emplace_back(r.b, r.c);
        else
            throw Error(ErrorKind::ParameterOutOfRange, "extra edge '" + x + "' is not one of ab, ac, bc");
    }
    std::string name = "beta-";
    for (Attach at : {a, b, c})
        name += at == Attach::U ? 'u' : 'v';
    for (const auto& x : extra_edges)
        name += "+" + x;
    r.graph = Graph(8, e, name);
    return r;
}

AlphaConfiguration alpha_configuration(int type)
{
    require(type >= 1 && type <= 3, "alpha type must be 1, 2 or 3");
    AlphaConfiguration r;
    r.type = type;
    const Vertex u = r.u, v = r.v, s = r.s, t = r.t, w = r.w;
    std::vector<Edge> e{{s, t}, {s, w}, {t, w}};
    for (Vertex x : {s, t, w}) {
        e.emplace_back(u, x);
        e.emplace_back(v, x);
    }
    // Shared connectors: yu ~ u and yv ~ v reach u and v without touching the interior.
    const Vertex yu = 5, yv = 6;
    e.emplace_back(yu, u);
    e.emplace_back(yv, v);
    Vertex next = 7;
    // Each far vertex a (far from `far`) hangs on yu, yv and a connector adjacent to the two other interior vertices.
    std::vector<std::pair<Vertex, Vertex>> far_of; // (a, far)
    auto add_far = [&](Vertex far) {
        Vertex a = next++, z = next++;
        e.emplace_back(a, yu);
        e.emplace_back(a, yv);
        e.emplace_back(a, z);
        for (Vertex q : {s, t, w})
            if (q != far)
                e.emplace_back(z, q);
        far_of.emplace_back(a, far);
    };
    Vertex b = -1;
    if (type == 1) {
        add_far(t);
        b = next++;
        e.emplace_back(b, t);
        e.emplace_back(b, u);
    }
    else if (type == 2) {
        add_far(t);
        add_far(w);
        b = next++;
        e.emplace_back(b, t);
        e.emplace_back(b, w);
        e.emplace_back(b, u);
    }
    else {
        add_far(t);
        add_far(w);
        add_far(s);
    }
    r.graph = Graph(next, e, "alpha" + std::to_string(type));

    const Graph& g = r.graph;
    bool ok = g.dist(u, v) == 2 && interior_interval(g, u, v) == VertexSet(g.order(), {s, t, w});
    for (auto [a, far] : far_of) {
        ok = ok && g.dist(a, u) == 2 && g.dist(a, v) == 2 && g.dist(a, far) == 3;
        for (Vertex q : {s, t, w})
            ok = ok && (q == far || g.dist(a, q) == 2);
    }
    if (b >= 0)
        ok = ok && (g.adjacent(b, u) || g.adjacent(b, v)) && !g.adjacent(b, s) && g.adjacent(b, t)
            && g.adjacent(b, w) == (type == 2);
    if (!ok)
        throw Error(ErrorKind::ConstraintsUnsatisfiable, "alpha configuration of type " + std::to_string(type));
    return r;
}

Graph random_k_tree(int n, int k, std::mt19937_64& rng)
{
    require(k >= 1 && n >= k + 1, "k-tree needs n >= k+1");
    std::vector<Edge> e;
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Vertex> base(k + 1);
    std::iota(base.begin(), base.end(), 0);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            e.emplace_back(i, j);
    for (int drop = 0; drop <= k; ++drop) {
        std::vector<Vertex> c;
        for (int i = 0; i <= k; ++i)
            if (i != drop)
                c.push_back(i);
        cliques.push_back(c);
    }
    for (Vertex v = k + 1; v < n; ++v) {
        auto c = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
        for (Vertex x : c)
            e.emplace_back(x, v);
        for (int drop = 0; drop < k; ++drop) {
            auto nc = c;
            nc[drop] = v;
            cliques.push_back(nc);
        }
    }
    return Graph(n, e, std::to_string(k) + "-tree");
}

Graph random_interval_graph(int n, std::mt19937_64& rng)
{
    require(n >= 1, "interval graph needs n >= 1");
    std::uniform_int_distribution<int> start(0, 3 * n), length(1, 6);
    for (;;) {
        std::vector<std::pair<int, int>> iv(n);
        for (auto& [l, r] : iv) {
            l = start(rng);
            r = l + length(rng);
        }
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::max(iv[i].first, iv[j].first) <= std::min(iv[i].second, iv[j].second))
                    e.emplace_back(i, j);
        if (is_connected(n, e))
            return Graph(n, e, "interval");
    }
}

Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng)
{
    require(n >= 1, "graph needs n >= 1");
    std::set<Edge> e;
    for (int v = 1; v < n; ++v) {
        int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
        e.emplace(parent, v);
    }
    std::bernoulli_distribution coin(edge_probability);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace(u, v);
    return Graph(n, std::vector<Edge>(e.begin(), e.end()), "random");
}

std::vector<Graph> all_connected_graphs(int n)
{
    require(n >= 1 && n <= 7, "exhaustive enumeration is limited to n <= 7");
    std::vector<std::vector<std::uint32_t>> layer{{0U}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::uint64_t, std::vector<std::uint32_t>> seen;
        for (const auto& base : layer)
            for (std::uint32_t nb = 0; nb < (1U << (size - 1)); ++nb) {
                auto adj = base;
                adj.push_back(nb);
                for (int x = 0; x < size - 1; ++x)
                    if ((nb >> x) & 1U)
                        adj[x] |= 1U << (size - 1);
                seen.emplace(canonical_code(size, adj), adj);
            }
        layer.clear();
        for (auto& [code, adj] : seen)
            layer.push_back(adj);
    }
    std::vector<Graph> out;
    for (const auto& adj : layer) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((adj[u] >> v) & 1U)
                    e.emplace_back(u, v);
        if (is_connected(n, e))
            out.push_back(graph_from_masks(n, adj));
    }
    return out;
}

std::vector<Graph> all_trees(int n)
{
    require(n >= 1 && n <= 12, "tree enumeration is limited to n <= 12");
    std::vector<std::vector<std::vector<int>>> layer{{{}}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, std::vector<std::vector<int>>> seen;
        for (const auto& base : layer)
            for (int x = 0; x < size - 1; ++x) {
                auto adj = base;
                adj.emplace_back(1, x);
                adj[x].push_back(size - 1);
                seen.emplace(tree_code(adj), adj);
            }
        layer.clear();
        for (auto& [code, adj] : seen)
            layer.push_back(adj);
    }
    std::vector<Graph> out;
    for (const auto& adj : layer) {
        std::vector<Edge> e;
        for (int v = 0; v < n; ++v)
            for (int y : adj[v])
                if (y > v)
                    e.emplace_back(v, y);
        out.emplace_back(n, e, "tree");
    }
    return out;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2)
{
    const int n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    auto profile = [](const Graph& g, Vertex v) {
        std::vector<int> counts(g.diameter() + 1, 0);
        for (Vertex x = 0; x < g.order(); ++x)
            ++counts[g.dist(v, x)];
        return counts;
    };
    std::vector<std::vector<int>> p1(n), p2(n);
    for (Vertex v = 0; v < n; ++v) {
        p1[v] = profile(g1, v);
        p2[v] = profile(g2, v);
    }
    {
        auto a = p1, b = p2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }
    // Visit G1 in BFS order from vertex 0 so that each new vertex has a mapped neighbor.
    std::vector<Vertex> order;
    {
        std::vector<char> seen(n, 0);
        order.push_back(0);
        seen[0] = 1;
        for (std::size_t h = 0; h < order.size(); ++h)
            for (Vertex y : g1.neighbors(order[h]))
                if (!seen[y]) {
                    seen[y] = 1;
                    order.push_back(y);
                }
    }
    std::vector<Vertex> f(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == order.size())
            return true;
        Vertex x = order[i];
        for (Vertex y = 0; y < n; ++y) {
            if (used[y] || p1[x] != p2[y])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = g1.dist(x, order[j]) == g2.dist(y, f[order[j]]);
            if (!ok)
                continue;
            f[x] = y;
            used[y] = 1;
            if (place(i + 1))
                return true;
            used[y] = 0;
            f[x] = -1;
        }
        return false;
    };
    if (!place(0))
        return std::nullopt;
    return f;
}

std::vector<std::string> family_names()
{
    return {"path", "cycle", "complete", "complete-bipartite", "star", "wheel", "wheel-minus", "propeller",
        "hyperoctahedron", "hypercube", "halved-cube", "johnson", "bn", "bn-hat", "tree", "grid", "prism", "torus",
        "projective", "beta", "alpha"};
}

Generated generate(const std::string& family, const std::vector<std::string>& params)
{
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw Error(ErrorKind::ParameterOutOfRange,
                family + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    };
    auto arg = [&](std::size_t i) { return parse_int(params.at(i)); };
    auto plain = [](Graph g) { return Generated{std::move(g), std::nullopt}; };

    if (family == "path") { need(1); return plain(path_graph(arg(0))); }
    if (family == "cycle") { need(1); return plain(cycle_graph(arg(0))); }
    if (family == "complete") { need(1); return plain(complete_graph(arg(0))); }
    if (family == "complete-bipartite") { need(2); return plain(complete_bipartite(arg(0), arg(1))); }
    if (family == "star") { need(1); return plain(star_graph(arg(0))); }
    if (family == "wheel") { need(1); return plain(wheel_graph(arg(0))); }
    if (family == "wheel-minus") { need(1); return plain(wheel_minus_graph(arg(0))); }
    if (family == "propeller") { need(0); return plain(propeller_graph()); }
    if (family == "hyperoctahedron") { need(1); return plain(hyperoctahedron(arg(0))); }
    if (family == "hypercube") { need(1); return hypercube(arg(0)); }
    if (family == "halved-cube") { need(1); return halved_cube(arg(0)); }
    if (family == "johnson") { need(2); return johnson_graph(arg(0), arg(1)); }
    if (family == "bn") { need(1); return plain(b_graph(arg(0))); }
    if (family == "bn-hat") { need(1); return plain(b_hat_graph(arg(0))); }
    if (family == "tree") {
        std::vector<int> code;
        for (std::size_t i = 0; i < params.size(); ++i)
            code.push_back(arg(i));
        return plain(tree_from_pruefer(code));
    }
    if (family == "grid") {
        need(2);
        return plain(cartesian_product(path_graph(arg(0)), path_graph(arg(1))));
    }
    if (family == "prism") {
        need(1);
        return plain(cartesian_product(cycle_graph(arg(0)), path_graph(2)));
    }
    if (family == "torus") {
        need(2);
        return plain(cartesian_product(cycle_graph(arg(0)), cycle_graph(arg(1))));
    }
    if (family == "projective") { need(1); return plain(projective_incidence_graph(arg(0)).graph); }
    if (family == "beta") {
        if (params.empty() || params.size() > 2 || params[0].size() != 3)
            throw Error(ErrorKind::ParameterOutOfRange, "beta takes an attachment word like 'uuv' and optional 'ab,bc'");
        Attach at[3];
        for (int i = 0; i < 3; ++i) {
            char ch = params[0][static_cast<std::size_t>(i)];
            if (ch != 'u' && ch != 'v')
                throw Error(ErrorKind::ParameterOutOfRange, "attachment letters must be u or v");
            at[i] = ch == 'u' ? Attach::U : Attach::V;
        }
        std::vector<std::string> extra;
        if (params.size() == 2) {
            std::string cur;
            for (char ch : params[1] + ",") {
                if (ch == ',') {
                    if (!cur.empty())
                        extra.push_back(cur);
                    cur.clear();
                }
                else
                    cur += ch;
            }
        }
        return plain(beta_configuration(at[0], at[1], at[2], extra).graph);
    }
    if (family == "alpha") { need(1); return plain(alpha_configuration(arg(0)).graph); }
    throw Error(ErrorKind::UnknownFamily, family);
}

} // namespace medgraph
