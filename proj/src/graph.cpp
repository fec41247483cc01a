#include "medgraph/graph.hpp"

#include "medgraph/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace medgraph {

namespace {

constexpr int unreached = std::numeric_limits<std::uint16_t>::max();

std::vector<std::vector<Vertex>> adjacency_lists(int n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

void bfs_row(const std::vector<std::vector<Vertex>>& adj, Vertex source, DistMatrix& d, std::vector<Vertex>& queue)
{
    const int n = static_cast<int>(adj.size());
    for (Vertex v = 0; v < n; ++v)
        d.set(source, v, unreached);
    d.set(source, source, 0);
    queue.clear();
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        int next = d(source, x) + 1;
        for (Vertex y : adj[x])
            if (d(source, y) == unreached) {
                d.set(source, y, next);
                queue.push_back(y);
            }
    }
}

DistMatrix bfs_all(const std::vector<std::vector<Vertex>>& adj)
{
    const int n = static_cast<int>(adj.size());
    DistMatrix d(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s)
        bfs_row(adj, s, d, queue);
    return d;
}

} // namespace

int DistMatrix::diameter() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, eccentricity(v));
    return best;
}

int DistMatrix::eccentricity(Vertex v) const
{
    int best = 0;
    for (Vertex u = 0; u < n_; ++u)
        best = std::max(best, (*this)(v, u));
    return best;
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
{
    if (n < 1 || n >= unreached)
        throw Error(ErrorKind::ParameterOutOfRange, "vertex count " + std::to_string(n));
    auto data = std::make_shared<Data>();
    data->n = n;
    data->adj = adjacency_lists(n, edges);
    for (const auto& list : data->adj)
        data->m += list.size();
    data->m /= 2;
    data->dist = bfs_all(data->adj);
    for (Vertex v = 0; v < n; ++v)
        if (data->dist(0, v) == unreached)
            throw Error(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " unreachable from 0");
    data->diameter = data->dist.diameter();
    data->name = std::move(name);
    data_ = std::move(data);
}

Graph Graph::with_name(std::string name) const
{
    Graph copy;
    auto data = std::make_shared<Data>(*data_);
    data->name = std::move(name);
    copy.data_ = std::move(data);
    return copy;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges, std::string name)
{
    return Graph(n, edges, std::move(name));
}

DistMatrix all_pairs_distances(const Graph& g)
{
    std::vector<std::vector<Vertex>> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v] = g.neighbors(v);
    return bfs_all(adj);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex y : g.neighbors(vertices[i]))
            if (index[y] > static_cast<int>(i))
                edges.emplace_back(static_cast<Vertex>(i), index[y]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

bool is_connected(int n, const std::vector<Edge>& edges)
{
    if (n <= 0)
        return false;
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == n;
}

} // namespace medgraph
