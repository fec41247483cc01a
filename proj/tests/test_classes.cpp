#include "oracles.hpp"
#include "support.hpp"

#include "medgraph/classes.hpp"
#include "medgraph/generators.hpp"
#include "medgraph/metric.hpp"
#include "medgraph/recognition.hpp"

#include <doctest.h>

using namespace medgraph;
using oracle::Matrix;

namespace {

bool adj(const Matrix& d, Vertex a, Vertex b) { return d[a][b] == 1; }

int order(const Matrix& d) { return static_cast<int>(d.size()); }

bool o_meshed(const Matrix& d)
{
    const int n = order(d);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = 0; w < n; ++w) {
                if (d[v][w] != 2)
                    continue;
                bool ok = false;
                for (Vertex x = 0; x < n; ++x)
                    ok = ok || (adj(d, x, v) && adj(d, x, w) && 2 * d[u][x] <= d[u][v] + d[u][w]);
                if (!ok)
                    return false;
            }
    return true;
}

bool o_weakly_modular(const Matrix& d)
{
    const int n = order(d);
    auto below = [&](Vertex u, Vertex v, Vertex w, int k) {
        for (Vertex x = 0; x < n; ++x)
            if (adj(d, x, v) && adj(d, x, w) && d[u][x] == k)
                return true;
        return false;
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = 0; w < n; ++w) {
                const int k = d[u][v];
                if (k >= 1 && adj(d, v, w) && d[u][w] == k && !below(u, v, w, k - 1))
                    return false;
                if (k >= 1 && d[v][w] == 2 && d[u][w] == k)
                    for (Vertex z = 0; z < n; ++z)
                        if (adj(d, z, v) && adj(d, z, w) && d[u][z] == k + 1 && !below(u, v, w, k - 1))
                            return false;
            }
    return true;
}

bool o_modular(const Matrix& d)
{
    const int n = order(d);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c) {
                bool found = false;
                for (Vertex x = 0; x < n && !found; ++x)
                    found = d[a][x] + d[x][b] == d[a][b] && d[b][x] + d[x][c] == d[b][c] && d[c][x] + d[x][a] == d[c][a];
                if (!found)
                    return false;
            }
    return true;
}

// Lengths of all induced cycles, by subset enumeration.
std::set<int> o_induced_cycle_lengths(const Matrix& d)
{
    const int n = order(d);
    std::set<int> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<Vertex> s;
        for (Vertex x = 0; x < n; ++x)
            if (mask >> x & 1U)
                s.push_back(x);
        if (s.size() < 3)
            continue;
        bool two_regular = true;
        for (Vertex x : s) {
            int deg = 0;
            for (Vertex y : s)
                deg += adj(d, x, y);
            two_regular = two_regular && deg == 2;
        }
        if (!two_regular)
            continue;
        std::set<Vertex> seen{s[0]};
        std::vector<Vertex> stack{s[0]};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : s)
                if (adj(d, x, y) && seen.insert(y).second)
                    stack.push_back(y);
        }
        if (seen.size() == s.size())
            out.insert(static_cast<int>(s.size()));
    }
    return out;
}

bool o_convex_balls(const Matrix& d)
{
    const int n = order(d);
    for (Vertex c = 0; c < n; ++c)
        for (int r = 0; r <= n; ++r) {
            std::set<Vertex> ball;
            for (Vertex x = 0; x < n; ++x)
                if (d[c][x] <= r)
                    ball.insert(x);
            if (!oracle::convex(d, ball))
                return false;
        }
    return true;
}

bool o_inc(const Matrix& d)
{
    const int n = order(d);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b)
                    if (d[u][v] >= 2 && a != b && adj(d, u, a) && adj(d, u, b) && d[a][v] == d[u][v] - 1
                        && d[b][v] == d[u][v] - 1 && !adj(d, a, b))
                        return false;
    return true;
}

bool o_tpc(const Matrix& d)
{
    const int n = order(d);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y) {
                const int k = d[v][x];
                if (k < 2 || !adj(d, x, y) || d[v][y] != k)
                    continue;
                bool ok = false;
                for (Vertex z = 0; z < n && !ok; ++z)
                    ok = adj(d, z, x) && adj(d, z, y) && d[v][z] == k - 1;
                for (Vertex w = 0; w < n && !ok; ++w)
                    for (Vertex z = 0; z < n && !ok; ++z)
                        for (Vertex w2 = 0; w2 < n && !ok; ++w2)
                            ok = adj(d, x, w) && adj(d, w, z) && adj(d, z, w2) && adj(d, w2, y) && d[v][w] == k - 1
                                && d[v][w2] == k - 1 && d[v][z] == k - 2;
                if (!ok)
                    return false;
            }
    return true;
}

bool o_bipartite(const Matrix& d)
{
    for (Vertex a = 0; a < order(d); ++a)
        for (Vertex b = 0; b < order(d); ++b)
            if (adj(d, a, b) && d[0][a] % 2 == d[0][b] % 2)
                return false;
    return true;
}

bool o_thick(const Matrix& d)
{
    const int n = order(d);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (d[u][v] != 2)
                continue;
            bool ok = false;
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b)
                    ok = ok || (adj(d, a, u) && adj(d, a, v) && adj(d, b, u) && adj(d, b, v) && a != b && !adj(d, a, b));
            if (!ok)
                return false;
        }
    return true;
}

bool o_pc(const Matrix& d)
{
    const int n = order(d);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex e = 0; e < n; ++e) {
                    bool square = adj(d, a, b) && adj(d, b, c) && adj(d, c, e) && adj(d, e, a) && d[a][c] == 2 && d[b][e] == 2;
                    if (!square)
                        continue;
                    for (Vertex u = 0; u < n; ++u)
                        if (d[u][a] + d[u][c] != d[u][b] + d[u][e])
                            return false;
                }
    return true;
}

// Injective adjacency-preserving map of the 2-interval into K_{m×2}, vertex i opposite to i^1.
bool o_icm(const Matrix& d, int m)
{
    const int n = order(d);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (d[u][v] != 2)
                continue;
            auto in = oracle::interval(d, u, v);
            std::vector<Vertex> s(in.begin(), in.end());
            if (static_cast<int>(s.size()) > 2 * m)
                return false;
            std::vector<int> image(s.size(), -1);
            std::function<bool(std::size_t)> place = [&](std::size_t i) {
                if (i == s.size())
                    return true;
                for (int h = 0; h < 2 * m; ++h) {
                    bool ok = true;
                    for (std::size_t j = 0; j < i && ok; ++j)
                        ok = image[j] != h && (adj(d, s[i], s[j]) == ((image[j] ^ 1) != h));
                    if (!ok)
                        continue;
                    image[i] = h;
                    if (place(i + 1))
                        return true;
                }
                return false;
            };
            if (!place(0))
                return false;
        }
    return true;
}

std::vector<Graph> exhaustive_corpus()
{
    std::vector<Graph> out;
    for (int n = 2; n <= 6; ++n)
        for (auto& g : all_connected_graphs(n))
            out.push_back(g);
    return out;
}

std::vector<Graph> named_corpus()
{
    std::vector<Graph> out{cycle_graph(5), cycle_graph(6), cycle_graph(8), hypercube(3).graph,
        johnson_graph(4, 2).graph, johnson_graph(5, 2).graph, halved_cube(4).graph, wheel_graph(5), wheel_graph(6),
        propeller_graph(), b_hat_graph(3), b_hat_graph(4), projective_incidence_graph(2).graph,
        beta_configuration(Attach::U, Attach::U, Attach::U).graph, alpha_configuration(1).graph,
        alpha_configuration(2).graph, alpha_configuration(3).graph, cartesian_product(cycle_graph(5), path_graph(2)),
        cartesian_product(path_graph(3), path_graph(4)), gated_amalgam(cycle_graph(5), cycle_graph(5), {0}, {0})};
    std::mt19937_64 rng(31);
    for (int i = 0; i < 8; ++i)
        out.push_back(random_k_tree(9, 1 + i % 3, rng));
    return out;
}

} // namespace

TEST_CASE("recognizers agree with definitions on every connected graph up to 6 vertices")
{
    auto corpus = exhaustive_corpus();
    REQUIRE(corpus.size() == 1 + 2 + 6 + 21 + 112);
    for (const auto& g : corpus) {
        auto d = oracle::floyd(g);
        auto cycles = o_induced_cycle_lengths(d);
        bool wm = o_weakly_modular(d);
        CAPTURE(g.edges());
        CHECK(is_meshed(g).verdict == o_meshed(d));
        CHECK(is_weakly_modular(g).verdict == wm);
        CHECK(is_modular(g).verdict == o_modular(d));
        CHECK(is_chordal(g).verdict == (cycles.empty() || *cycles.rbegin() == 3));
        CHECK(is_bridged(g).verdict == (wm && !cycles.count(4) && !cycles.count(5)));
        CHECK(is_weakly_bridged(g).verdict == (wm && !cycles.count(4)));
        CHECK(has_convex_balls(g).verdict == o_convex_balls(d));
        CHECK(satisfies_INC(g).verdict == o_inc(d));
        CHECK(satisfies_TPC(g).verdict == o_tpc(d));
        CHECK(is_bipartite(g).verdict == o_bipartite(d));
        CHECK(is_thick(g).verdict == o_thick(d));
        CHECK(satisfies_PC(g).verdict == o_pc(d));
        CHECK(satisfies_ICm(g, 3).verdict == o_icm(d, 3));
        CHECK(satisfies_ICm(g, 4).verdict == o_icm(d, 4));
        for (int len = 4; len <= 6; ++len)
            CHECK(find_induced_cycle(g, len).has_value() == cycles.count(len) > 0);
    }
}

TEST_CASE("recognizers agree with definitions on named graphs")
{
    for (const auto& g : named_corpus()) {
        auto d = oracle::floyd(g);
        CAPTURE(g.edges());
        CHECK(is_meshed(g).verdict == o_meshed(d));
        CHECK(is_weakly_modular(g).verdict == o_weakly_modular(d));
        CHECK(is_modular(g).verdict == o_modular(d));
        CHECK(has_convex_balls(g).verdict == o_convex_balls(d));
        CHECK(satisfies_INC(g).verdict == o_inc(d));
        CHECK(is_thick(g).verdict == o_thick(d));
        CHECK(satisfies_PC(g).verdict == o_pc(d));
    }
}

TEST_CASE("failure witnesses re-check")
{
    for (const auto& g : exhaustive_corpus()) {
        auto d = oracle::floyd(g);
        if (auto v = is_meshed(g); !v.verdict) {
            REQUIRE(v.witness.size() == 3);
            Vertex u = v.witness[0], a = v.witness[1], b = v.witness[2];
            CHECK(d[a][b] == 2);
            for (Vertex x = 0; x < g.order(); ++x)
                if (adj(d, x, a) && adj(d, x, b))
                    CHECK(2 * d[u][x] > d[u][a] + d[u][b]);
        }
        if (auto v = is_modular(g); !v.verdict) {
            REQUIRE(v.witness.size() == 3);
            Vertex a = v.witness[0], b = v.witness[1], c = v.witness[2];
            for (Vertex x = 0; x < g.order(); ++x)
                CHECK_FALSE((d[a][x] + d[x][b] == d[a][b] && d[b][x] + d[x][c] == d[b][c] && d[c][x] + d[x][a] == d[c][a]));
        }
        if (auto v = is_chordal(g); !v.verdict) {
            const auto& c = v.witness;
            REQUIRE(c.size() >= 4);
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    CHECK(adj(d, c[i], c[j]) == (j == i + 1 || (i == 0 && j + 1 == c.size())));
        }
        if (auto v = has_convex_balls(g); !v.verdict) {
            REQUIRE(v.witness.size() == 5);
            Vertex c = v.witness[0], x = v.witness[2], y = v.witness[3], z = v.witness[4];
            int r = v.witness[1];
            CHECK(d[c][x] <= r);
            CHECK(d[c][y] <= r);
            CHECK(d[c][z] > r);
            CHECK(d[x][z] + d[z][y] == d[x][y]);
        }
        if (auto v = satisfies_INC(g); !v.verdict) {
            REQUIRE(v.witness.size() == 4);
            Vertex u = v.witness[0], t = v.witness[1], a = v.witness[2], b = v.witness[3];
            CHECK(adj(d, u, a));
            CHECK(adj(d, u, b));
            CHECK(d[a][t] + 1 == d[u][t]);
            CHECK(d[b][t] + 1 == d[u][t]);
            CHECK_FALSE(adj(d, a, b));
        }
        for (const auto& v : {is_weakly_modular(g), is_thick(g), satisfies_PC(g), satisfies_TPC(g), is_bridged(g)})
            CHECK(v.verdict == v.witness.empty());
    }
}

TEST_CASE("class examples")
{
    CHECK(is_meshed(johnson_graph(4, 2).graph).verdict);
    auto c6 = is_meshed(cycle_graph(6));
    CHECK_FALSE(c6.verdict);
    CHECK(is_meshed(complete_graph(5)).verdict);

    CHECK(is_weakly_modular(complete_graph(2)).verdict);
    CHECK_FALSE(is_weakly_modular(cycle_graph(5)).verdict);
    CHECK(is_modular(projective_incidence_graph(2).graph).verdict);
    CHECK(is_modular(tree_from_pruefer({2, 2, 5, 5})).verdict);
    CHECK_FALSE(is_modular(complete_graph(3)).verdict);

    CHECK(is_chordal(beta_configuration(Attach::U, Attach::U, Attach::U).graph).verdict);
    CHECK_FALSE(is_chordal(cycle_graph(4)).verdict);
    CHECK(is_chordal(complete_graph(4)).verdict);

    auto w5 = wheel_graph(5);
    CHECK_FALSE(is_bridged(w5).verdict);
    CHECK(is_weakly_bridged(w5).verdict);
    CHECK_FALSE(is_bridged(cycle_graph(4)).verdict);
    CHECK_FALSE(is_weakly_bridged(cycle_graph(4)).verdict);

    CHECK(has_convex_balls(cycle_graph(5)).verdict);
    CHECK_FALSE(has_convex_balls(cycle_graph(6)).verdict);
    CHECK_FALSE(satisfies_INC(cycle_graph(4)).verdict);
    CHECK(satisfies_INC(complete_graph(4)).verdict);
    CHECK(satisfies_TPC(complete_graph(4)).verdict);

    for (const auto& g : {johnson_graph(5, 2).graph, halved_cube(5).graph}) {
        CHECK(satisfies_PC(g).verdict);
        CHECK(is_thick(g).verdict);
    }
    CHECK(satisfies_ICm(johnson_graph(5, 2).graph, 3).verdict);
    CHECK(satisfies_ICm(halved_cube(5).graph, 4).verdict);
    CHECK_FALSE(satisfies_ICm(halved_cube(5).graph, 3).verdict);
    CHECK_FALSE(is_thick(path_graph(3)).verdict);
    CHECK(satisfies_ICm(hyperoctahedron(3), 3).verdict);
}

TEST_CASE("interval conditions (a), (b), (c)")
{
    auto bh = b_hat_graph(4);
    int pairs = 0;
    for (Vertex u = 0; u < bh.order(); ++u)
        for (Vertex v = u + 1; v < bh.order(); ++v)
            if (bh.dist(u, v) == 3) {
                ++pairs;
                CHECK(check_condition_a(bh, u, v));
            }
    CHECK(pairs > 0);

    auto c8 = cycle_graph(8);
    CHECK_FALSE(check_condition_b(c8, 0, 4));
    CHECK_FALSE(check_condition_c(c8, 0, 4));
    CHECK(kind_of([&] { check_condition_a(c8, 0, 4); }) == ErrorKind::WrongDistance);
    CHECK(kind_of([&] { check_condition_b(c8, 0, 3); }) == ErrorKind::WrongDistance);

    std::mt19937_64 rng(41);
    int checked = 0;
    for (int i = 0; i < 12; ++i) {
        auto g = i % 2 ? random_k_tree(14, 2, rng) : random_interval_graph(14, rng);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (g.dist(u, v) == 4) {
                    ++checked;
                    CHECK(check_condition_b(g, u, v));
                }
    }
    CHECK(checked > 0);
}

TEST_CASE("bipartite absolute retracts")
{
    CHECK(is_bipartite_absolute_retract(b_hat_graph(4)).verdict);
    CHECK(bn_extension_condition(b_hat_graph(4)).verdict);
    CHECK_FALSE(is_bipartite_absolute_retract(cycle_graph(6)).verdict);
    CHECK(is_bipartite_absolute_retract(path_graph(4)).verdict);
    CHECK(is_bipartite_absolute_retract(tree_from_pruefer({1, 1, 4, 4, 4})).verdict);
    CHECK(is_bipartite_absolute_retract(hypercube(3).graph).verdict == bn_extension_condition(hypercube(3).graph).verdict);
    CHECK_FALSE(is_bipartite_absolute_retract(cycle_graph(5)).verdict);
    auto report = absolute_retract_report(b_graph(4));
    CHECK_FALSE(report.extension_condition.verdict);
    CHECK(report.disagree == (report.interval_condition.verdict != report.extension_condition.verdict));
}

TEST_CASE("configuration detection")
{
    for (int mask = 0; mask < 8; ++mask) {
        auto at = [&](int bit) { return (mask >> bit) & 1 ? Attach::V : Attach::U; };
        auto b = beta_configuration(at(0), at(1), at(2));
        auto w = detect_beta_configuration(b.graph);
        REQUIRE(w);
        const auto& g = b.graph;
        CHECK(g.dist(w->u, w->v) == 2);
        std::vector<Vertex> inner{w->s, w->t, w->w};
        CHECK(interior_interval(g, w->u, w->v) == VertexSet(g.order(), inner));
        std::vector<Vertex> far{w->a, w->b, w->c};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(g.adjacent(far[i], inner[j]) == (i == j));
    }
    for (int type = 1; type <= 3; ++type) {
        auto a = alpha_configuration(type);
        auto w = detect_alpha_configuration(a.graph);
        REQUIRE(w);
        CHECK(w->type == type);
        CHECK(a.graph.dist(w->u, w->v) == 2);
        CHECK(w->a.size() == static_cast<std::size_t>(type));
        CHECK((w->b < 0) == (type == 3));
    }
    CHECK_FALSE(detect_beta_configuration(hypercube(3).graph));
    CHECK_FALSE(detect_alpha_configuration(hypercube(3).graph));
    CHECK_FALSE(detect_beta_configuration(johnson_graph(5, 2).graph));
}

TEST_CASE("labeled embeddings")
{
    auto j = johnson_graph(4, 2);
    REQUIRE(j.labels);
    CHECK(verify_labeled_embedding(j.graph, *j.labels).verdict);
    auto h = hypercube(3);
    CHECK(verify_labeled_embedding(h.graph, *h.labels).verdict);
    auto hc = halved_cube(5);
    CHECK(verify_labeled_embedding(hc.graph, *hc.labels).verdict);

    auto odd = *h.labels;
    odd.target = EmbeddingTarget::HalvedCube;
    CHECK(kind_of([&] { verify_labeled_embedding(h.graph, odd); }) == ErrorKind::LabelArity);
    auto short_labels = *j.labels;
    short_labels.labels.pop_back();
    CHECK(kind_of([&] { verify_labeled_embedding(j.graph, short_labels); }) == ErrorKind::LabelArity);
    auto wrong_k = *j.labels;
    wrong_k.labels[0] = {0, 1, 2};
    CHECK(kind_of([&] { verify_labeled_embedding(j.graph, wrong_k); }) == ErrorKind::LabelArity);

    auto swapped = *j.labels;
    std::swap(swapped.labels[0], swapped.labels[1]);
    auto bad = verify_labeled_embedding(j.graph, swapped);
    if (!bad.verdict) {
        REQUIRE(bad.witness.size() == 2);
        Vertex a = bad.witness[0], b = bad.witness[1];
        std::vector<int> diff;
        std::set_symmetric_difference(swapped.labels[a].begin(), swapped.labels[a].end(), swapped.labels[b].begin(),
            swapped.labels[b].end(), std::back_inserter(diff));
        CHECK(static_cast<int>(diff.size()) / 2 != j.graph.dist(a, b));
    }

    auto c5 = cycle_graph(5);
    LabeledEmbedding not_iso{EmbeddingTarget::Hypercube, 0, {{}, {0}, {0, 1}, {1}, {2}}};
    CHECK_FALSE(verify_labeled_embedding(c5, not_iso).verdict);
}

TEST_CASE("connected medians via embeddings")
{
    auto j52 = johnson_graph(5, 2);
    CHECK(connected_medians_partial_johnson(j52.graph, *j52.labels).verdict);
    auto hc = halved_cube(4);
    CHECK(connected_medians_partial_halved_cube(hc.graph, *hc.labels).verdict);

    auto j = johnson_graph(4, 2);
    auto swapped = *j.labels;
    swapped.labels[0] = {0, 1};
    swapped.labels[1] = {0, 1};
    CHECK(kind_of([&] { connected_medians_partial_johnson(j.graph, swapped); }) == ErrorKind::EmbeddingUnverified);

    // Triangle-free partial halved cubes: the halved-cube verdict matches p = 1.
    auto h = hypercube(3);
    LabeledEmbedding doubled{EmbeddingTarget::HalvedCube, 0, {}};
    for (const auto& l : h.labels->labels) {
        std::vector<int> twice;
        for (int i : l) {
            twice.push_back(2 * i);
            twice.push_back(2 * i + 1);
        }
        doubled.labels.push_back(twice);
    }
    auto verdict = connected_medians_partial_halved_cube(h.graph, doubled);
    CHECK(verdict.verdict);
    CHECK(compute_p(h.graph).p == 1);
}

TEST_CASE("class implications bound p")
{
    auto corpus = named_corpus();
    for (int n = 3; n <= 6; ++n)
        for (auto& g : all_connected_graphs(n))
            corpus.push_back(g);
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i)
        corpus.push_back(random_interval_graph(12, rng));
    int chordal = 0, cb = 0, ar = 0, thick_pc = 0;
    for (const auto& g : corpus) {
        CAPTURE(g.edges());
        const int p = compute_p(g).p;
        bool is_cb = has_convex_balls(g).verdict;
        CHECK(is_cb == (satisfies_INC(g).verdict && satisfies_TPC(g).verdict));
        if (is_chordal(g).verdict) {
            ++chordal;
            CHECK(is_bridged(g).verdict);
        }
        if (is_bridged(g).verdict) {
            CHECK(is_weakly_bridged(g).verdict);
            CHECK(is_cb);
        }
        if (is_weakly_bridged(g).verdict)
            CHECK(p <= 2);
        if (is_cb) {
            ++cb;
            CHECK(p <= 2);
        }
        if (is_bipartite(g).verdict && is_bipartite_absolute_retract(g).verdict) {
            ++ar;
            CHECK(p <= 2);
        }
        if (is_thick(g).verdict && satisfies_PC(g).verdict) {
            ++thick_pc;
            CHECK(p == 1);
        }
        if (is_weakly_modular(g).verdict && satisfies_INC(g).verdict) {
            bool abc = true;
            for (Vertex u = 0; u < g.order(); ++u)
                for (Vertex v = u + 1; v < g.order(); ++v) {
                    if (g.dist(u, v) == 3)
                        abc = abc && check_condition_a(g, u, v);
                    if (g.dist(u, v) == 4)
                        abc = abc && (check_condition_b(g, u, v) || check_condition_c(g, u, v));
                }
            if (abc)
                CHECK(p <= 2);
        }
        if (detect_beta_configuration(g))
            CHECK(p >= 2);
    }
    CHECK(chordal > 20);
    CHECK(cb > 20);
    CHECK(ar > 5);
    CHECK(thick_pc > 3);
}

TEST_CASE("metric triangles of convex-ball graphs")
{
    std::vector<Graph> corpus{cycle_graph(5), wheel_graph(5), gated_amalgam(cycle_graph(5), cycle_graph(5), {0}, {0}),
        gated_amalgam(cycle_graph(5), wheel_graph(5), {0}, {5}),
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}, {2, 5}})};
    for (const auto& g : corpus) {
        REQUIRE(has_convex_balls(g).verdict);
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b)
                for (Vertex c = b + 1; c < g.order(); ++c) {
                    if (!is_metric_triangle(g, a, b, c))
                        continue;
                    auto t = make_triangle(g, a, b, c);
                    std::multiset<int> sides{g.dist(a, b), g.dist(b, c), g.dist(a, c)};
                    if (t.size)
                        CHECK(is_strongly_equilateral(g, t));
                    else
                        CHECK(sides == std::multiset<int>{1, 2, 2});
                }
    }
}
