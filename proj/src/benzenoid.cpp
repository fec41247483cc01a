#include "medgraph/benzenoid.hpp"

#include "medgraph/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace medgraph {

namespace {

using Point = std::pair<int, int>;

constexpr std::array<Point, 6> kDir{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

// Hexagon centers sit at 3h; corner i is center + D[i] + D[i+1].
std::array<Point, 6> corners_of(Point h)
{
    std::array<Point, 6> out;
    for (int i = 0; i < 6; ++i) {
        auto [a, b] = kDir[i];
        auto [c, d] = kDir[(i + 1) % 6];
        out[i] = {3 * h.first + a + c, 3 * h.second + b + d};
    }
    return out;
}

int direction_class(Point p, Point q)
{
    int dx = q.first - p.first, dy = q.second - p.second;
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    if (dx == 1 && dy == 1)
        return 0;
    if (dx == 2 && dy == -1)
        return 1;
    if (dx == 1 && dy == -2)
        return 2;
    throw Error(ErrorKind::ParameterOutOfRange, "not a grid edge");
}

std::vector<int> components(int n, const std::vector<Edge>& edges, int& count)
{
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp(n, -1);
    count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<Vertex> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = count;
                    stack.push_back(y);
                }
        }
        ++count;
    }
    return comp;
}

} // namespace

int BenzenoidGraph::class_of(Vertex a, Vertex b) const
{
    return direction_class(corners.at(a), corners.at(b));
}

BenzenoidGraph benzenoid(const BenzenoidSpec& spec)
{
    std::set<Point> hexes(spec.hexagons.begin(), spec.hexagons.end());
    if (hexes.empty())
        throw Error(ErrorKind::DisconnectedHexagons, "no hexagons");

    // Edge-connectivity of the hexagon set.
    {
        std::set<Point> seen{*hexes.begin()};
        std::vector<Point> stack{*hexes.begin()};
        while (!stack.empty()) {
            auto h = stack.back();
            stack.pop_back();
            for (auto [dx, dy] : kDir) {
                Point nb{h.first + dx, h.second + dy};
                if (hexes.count(nb) && seen.insert(nb).second)
                    stack.push_back(nb);
            }
        }
        if (seen.size() != hexes.size())
            throw Error(ErrorKind::DisconnectedHexagons, "hexagon set is not edge-connected");
    }

    // Holes: non-chosen hexagons inside the bounding box that the outside cannot reach.
    {
        int amin = hexes.begin()->first, amax = amin, bmin = hexes.begin()->second, bmax = bmin;
        for (auto [a, b] : hexes) {
            amin = std::min(amin, a);
            amax = std::max(amax, a);
            bmin = std::min(bmin, b);
            bmax = std::max(bmax, b);
        }
        --amin, --bmin, ++amax, ++bmax;
        auto inside = [&](Point p) {
            return p.first >= amin && p.first <= amax && p.second >= bmin && p.second <= bmax;
        };
        std::set<Point> outside{{amin, bmin}};
        std::vector<Point> stack{{amin, bmin}};
        while (!stack.empty()) {
            auto h = stack.back();
            stack.pop_back();
            for (auto [dx, dy] : kDir) {
                Point nb{h.first + dx, h.second + dy};
                if (inside(nb) && !hexes.count(nb) && outside.insert(nb).second)
                    stack.push_back(nb);
            }
        }
        for (int a = amin; a <= amax; ++a)
            for (int b = bmin; b <= bmax; ++b)
                if (!hexes.count({a, b}) && !outside.count({a, b}))
                    throw Error(ErrorKind::HoleDetected,
                        "hexagon (" + std::to_string(a) + "," + std::to_string(b) + ") is enclosed");
    }

    BenzenoidGraph out;
    std::map<Point, Vertex> index;
    for (auto h : hexes)
        for (auto c : corners_of(h))
            index.emplace(c, 0);
    for (auto& [p, id] : index) {
        id = static_cast<Vertex>(out.corners.size());
        out.corners.push_back(p);
    }
    std::set<Edge> edge_set;
    for (auto h : hexes) {
        auto c = corners_of(h);
        std::vector<Vertex> cycle;
        for (int i = 0; i < 6; ++i) {
            Vertex x = index.at(c[i]), y = index.at(c[(i + 1) % 6]);
            edge_set.emplace(std::min(x, y), std::max(x, y));
            cycle.push_back(x);
        }
        out.hexagons.push_back(cycle);
    }
    // The induced subgraph of the grid must not gain edges outside the chosen hexagons.
    for (const auto& [p, x] : index)
        for (auto [dx, dy] : std::array<Point, 3>{{{1, 1}, {2, -1}, {1, -2}}}) {
            auto it = index.find({p.first + dx, p.second + dy});
            if (it != index.end() && !edge_set.count({std::min(x, it->second), std::max(x, it->second)}))
                throw Error(ErrorKind::HoleDetected, "region pinches around a missing hexagon");
        }
    const int n = static_cast<int>(out.corners.size());
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    out.graph = Graph(n, edges, "benzenoid" + std::to_string(hexes.size()));
    for (auto [a, b] : out.graph.edges())
        out.edge_class.push_back(out.class_of(a, b));

    out.phi.assign(n, {0, 0, 0});
    for (int i = 0; i < 3; ++i) {
        std::vector<Edge> kept, removed;
        for (std::size_t e = 0; e < edges.size(); ++e)
            (out.edge_class[e] == i ? removed : kept).push_back(edges[e]);
        int count = 0;
        auto comp = components(n, kept, count);
        std::set<Edge> tree_edges;
        for (auto [a, b] : removed)
            tree_edges.emplace(std::min(comp[a], comp[b]), std::max(comp[a], comp[b]));
        out.trees[i] = Graph(count, std::vector<Edge>(tree_edges.begin(), tree_edges.end()),
            "T" + std::to_string(i + 1));
        for (Vertex v = 0; v < n; ++v)
            out.phi[v][i] = comp[v];
    }

    // Incomplete hexagons: grid hexagons meeting G in exactly four consecutive corners.
    std::set<Point> candidates;
    for (auto h : hexes)
        for (auto [dx, dy] : kDir)
            if (!hexes.count({h.first + dx, h.second + dy}))
                candidates.insert({h.first + dx, h.second + dy});
    for (auto h : candidates) {
        auto c = corners_of(h);
        std::array<bool, 6> in{};
        int hits = 0;
        for (int i = 0; i < 6; ++i)
            hits += in[i] = index.count(c[i]) > 0;
        if (hits != 4)
            continue;
        for (int start = 0; start < 6; ++start)
            if (!in[(start + 4) % 6] && !in[(start + 5) % 6] && in[start]) {
                std::vector<Vertex> path;
                for (int k = 0; k < 4; ++k)
                    path.push_back(index.at(c[(start + k) % 6]));
                out.incomplete_hexagons.push_back(path);
                break;
            }
    }

    if (!embedding_is_isometric(out))
        throw Error(ErrorKind::EmbeddingUnverified, "three-tree embedding is not isometric");
    return out;
}

bool embedding_is_isometric(const BenzenoidGraph& b)
{
    const auto d = all_pairs_distances(b.graph);
    const int n = b.graph.order();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            int sum = 0;
            for (int i = 0; i < 3; ++i)
                sum += b.trees[i].dist(b.phi[x][i], b.phi[y][i]);
            if (sum != d(x, y))
                return false;
        }
    return true;
}

std::vector<std::vector<Edge>> parallelism_classes(const BenzenoidGraph& b)
{
    std::map<std::tuple<int, Vertex, Vertex>, std::vector<Edge>> groups;
    auto edges = b.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int i = b.edge_class[e];
        Vertex p = b.phi[edges[e].first][i], q = b.phi[edges[e].second][i];
        groups[{i, std::min(p, q), std::max(p, q)}].push_back(edges[e]);
    }
    std::vector<std::vector<Edge>> out;
    for (auto& [key, list] : groups)
        out.push_back(std::move(list));
    return out;
}

BenzenoidSpec benzenoid_preset(const std::string& name)
{
    if (name == "hexagon")
        return {{{0, 0}}};
    if (name == "naphthalene")
        return {{{0, 0}, {1, 0}}};
    if (name == "anthracene")
        return {{{0, 0}, {1, 0}, {2, 0}}};
    if (name == "bent-chain")
        return {{{0, 0}, {1, 0}, {2, 0}, {2, 1}}};
    throw Error(ErrorKind::UnknownFamily, "benzenoid preset '" + name + "'");
}

std::vector<std::string> benzenoid_preset_names()
{
    return {"hexagon", "naphthalene", "anthracene", "bent-chain"};
}

} // namespace medgraph
