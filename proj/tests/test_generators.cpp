#include "oracles.hpp"
#include "support.hpp"

#include "medgraph/benzenoid.hpp"
#include "medgraph/classes.hpp"
#include "medgraph/generators.hpp"
#include "medgraph/metric.hpp"
#include "medgraph/recognition.hpp"

#include <doctest.h>

using namespace medgraph;

namespace {

bool isomorphic(const Graph& a, const Graph& b)
{
    auto f = find_isomorphism(a, b);
    if (!f)
        return false;
    for (auto [x, y] : a.edges())
        if (!b.adjacent((*f)[x], (*f)[y]))
            return false;
    return a.edge_count() == b.edge_count();
}

// Injective map preserving adjacency and non-adjacency, found by exhaustive permutation.
bool brute_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [x, y] : a.edges())
            ok = ok && b.adjacent(perm[x], perm[y]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t edges_of_family(const std::string& family, const std::vector<std::string>& params)
{
    return generate(family, params).graph.edge_count();
}

} // namespace

TEST_CASE("classical families")
{
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(6).diameter() == 3);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(star_graph(4).order() == 5);
    auto w = wheel_graph(5);
    CHECK(w.order() == 6);
    CHECK(w.degree(5) == 5);
    CHECK(wheel_minus_graph(5).edge_count() == 9);
    CHECK_FALSE(wheel_minus_graph(5).adjacent(5, 0));
    auto prop = propeller_graph();
    CHECK(prop.order() == 5);
    CHECK(prop.edge_count() == 7);
    auto oct = hyperoctahedron(3);
    CHECK(oct.edge_count() == 12);
    for (Vertex x = 0; x < 6; ++x)
        CHECK(oct.dist(x, x ^ 1) == 2);
    auto bn = b_graph(4);
    CHECK(bn.edge_count() == 12);
    CHECK(is_bipartite(bn).verdict);
    auto bh = b_hat_graph(4);
    CHECK(bh.order() == 10);
    CHECK(bh.adjacent(8, 9));
    CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("labeled families")
{
    auto h3 = hypercube(3);
    CHECK(h3.graph.order() == 8);
    CHECK(h3.graph.edge_count() == 12);
    CHECK(h3.graph.diameter() == 3);
    auto j = johnson_graph(4, 2);
    CHECK(j.graph.order() == 6);
    CHECK(j.graph.edge_count() == 12);
    CHECK(brute_isomorphic(j.graph, hyperoctahedron(3)));
    auto hc4 = halved_cube(4);
    CHECK(hc4.graph.order() == 8);
    CHECK(brute_isomorphic(hc4.graph, hyperoctahedron(4)));

    for (const auto& gen : {hypercube(2), hypercube(4), halved_cube(3), halved_cube(6), johnson_graph(6, 3),
             johnson_graph(5, 1)}) {
        REQUIRE(gen.labels);
        CHECK(verify_labeled_embedding(gen.graph, *gen.labels).verdict);
    }
    for (int n = 2; n <= 6; ++n)
        CHECK(isomorphic(halved_cube(n).graph, power_graph(hypercube(n - 1).graph, 2)));

    CHECK(kind_of([] { hypercube(13); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { johnson_graph(30, 15); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("cartesian products")
{
    auto k2 = complete_graph(2);
    CHECK(brute_isomorphic(cartesian_product(k2, k2), cycle_graph(4)));
    auto cube = cartesian_product(cartesian_product(k2, k2), k2);
    CHECK(isomorphic(cube, hypercube(3).graph));

    std::mt19937_64 rng(51);
    for (int i = 0; i < 10; ++i) {
        auto a = oracle::random_graph(3 + i % 3, 0.3, rng), b = oracle::random_graph(2 + i % 4, 0.3, rng);
        auto p = cartesian_product(a, b);
        auto d = oracle::floyd(p);
        const int n2 = b.order();
        for (Vertex x = 0; x < p.order(); ++x)
            for (Vertex y = 0; y < p.order(); ++y)
                CHECK(d[x][y] == a.dist(x / n2, y / n2) + b.dist(x % n2, y % n2));
    }
    CHECK(compute_p(cartesian_product(cycle_graph(7), k2)).p == 3);
}

TEST_CASE("gated amalgams")
{
    auto c6 = cycle_graph(6);
    auto g = gated_amalgam(c6, c6, {0, 1}, {0, 1});
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 11);
    CHECK(compute_p(g).p == 2);

    auto c5 = cycle_graph(5);
    auto v = gated_amalgam(c5, c5, {0}, {0});
    CHECK(v.order() == 9);
    CHECK(v.dist(2, 7) == 4);

    auto k3 = complete_graph(3);
    CHECK(kind_of([&] { gated_amalgam(k3, k3, {0, 1}, {0, 1}); }) == ErrorKind::NotGated);
    CHECK(kind_of([&] { gated_amalgam(c5, c5, {0, 1}, {0, 1}); }) == ErrorKind::NotGated);
    CHECK(kind_of([&] { gated_amalgam(c6, c6, {0, 1}, {0, 2}); }) == ErrorKind::NotInducedIso);

    // The gated template separates the halves: distances add through the gate.
    auto d = oracle::floyd(g);
    std::set<Vertex> tmpl{0, 1};
    CHECK(oracle::gated(d, tmpl));
}

TEST_CASE("projective plane incidence graphs")
{
    for (int q : {2, 3, 5}) {
        auto pg = projective_incidence_graph(q);
        const int n = q * q + q + 1;
        CHECK(pg.points == n);
        CHECK(pg.graph.order() == 2 * n + 2);
        CHECK(pg.graph.dist(pg.u, pg.v) == 3);
        for (Vertex x = 0; x < 2 * n; ++x)
            CHECK(pg.graph.degree(x) == q + 2);
        // Two points share exactly one line.
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                int lines = 0;
                for (Vertex l = n; l < 2 * n; ++l)
                    lines += pg.graph.adjacent(a, l) && pg.graph.adjacent(b, l);
                CHECK(lines == 1);
            }
    }
    CHECK(kind_of([] { projective_incidence_graph(4); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { projective_incidence_graph(67); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("configurations")
{
    auto b = beta_configuration(Attach::U, Attach::U, Attach::U);
    const auto& g = b.graph;
    CHECK(g.order() == 8);
    CHECK(g.dist(b.u, b.v) == 2);
    CHECK(interior_interval(g, b.u, b.v) == VertexSet(8, {b.s, b.t, b.w}));
    CHECK(g.adjacent(b.a, b.s));
    CHECK(g.adjacent(b.a, b.u));
    CHECK_FALSE(g.adjacent(b.a, b.t));
    CHECK(compute_p(g).p == 2);
    auto full = beta_configuration(Attach::U, Attach::U, Attach::U, {"ab", "ac", "bc"});
    CHECK(full.graph.edge_count() == g.edge_count() + 3);
    CHECK(compute_p(full.graph).p >= 2);
    CHECK(kind_of([] { beta_configuration(Attach::U, Attach::U, Attach::U, {"xy"}); }) == ErrorKind::ParameterOutOfRange);

    for (int type = 1; type <= 3; ++type) {
        auto a = alpha_configuration(type);
        CHECK(a.type == type);
        CHECK(a.graph.dist(a.u, a.v) == 2);
    }
    CHECK(kind_of([] { alpha_configuration(4); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("random families")
{
    std::mt19937_64 rng(53);
    for (int k = 1; k <= 3; ++k) {
        auto t = random_k_tree(12, k, rng);
        CHECK(t.order() == 12);
        CHECK(t.edge_count() == static_cast<std::size_t>(k * (k + 1) / 2 + (12 - k - 1) * k));
        CHECK(is_chordal(t).verdict);
    }
    for (int i = 0; i < 5; ++i) {
        auto g = random_interval_graph(10, rng);
        CHECK(g.order() == 10);
        CHECK(is_chordal(g).verdict);
    }
    auto r = random_connected_graph(9, 0.2, rng);
    CHECK(r.order() == 9);
}

TEST_CASE("enumeration counts")
{
    const std::vector<std::size_t> graphs{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(all_connected_graphs(n).size() == graphs[n - 1]);
    const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        CHECK(all_trees(n).size() == trees[n - 1]);

    // No two enumerated graphs are isomorphic, by exhaustive permutation.
    auto five = all_connected_graphs(5);
    for (std::size_t i = 0; i < five.size(); ++i)
        for (std::size_t j = i + 1; j < five.size(); ++j)
            CHECK_FALSE(brute_isomorphic(five[i], five[j]));
}

TEST_CASE("isomorphism search")
{
    std::mt19937_64 rng(55);
    for (int i = 0; i < 30; ++i) {
        auto g = oracle::random_graph(6, 0.3, rng);
        std::vector<Vertex> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> e;
        for (auto [a, b] : g.edges())
            e.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
        Graph h(6, e);
        CHECK(isomorphic(g, h));
        auto other = oracle::random_graph(6, 0.3, rng);
        CHECK(find_isomorphism(g, other).has_value() == brute_isomorphic(g, other));
    }
    CHECK(tree_from_pruefer({}).order() == 2);
    CHECK(isomorphic(tree_from_pruefer({0, 0, 0}), star_graph(4)));
}

TEST_CASE("family dispatch")
{
    CHECK(edges_of_family("grid", {"3", "4"}) == 17);
    CHECK(edges_of_family("prism", {"5"}) == 15);
    CHECK(edges_of_family("torus", {"3", "4"}) == 24);
    CHECK(edges_of_family("projective", {"2"}) == 35);
    CHECK(edges_of_family("tree", {"1", "1"}) == 3);
    CHECK(generate("johnson", {"5", "2"}).labels.has_value());
    CHECK(generate("beta", {"uuv", "ab,bc"}).graph.order() == 8);
    for (const auto& name : family_names())
        CHECK_FALSE(name.empty());
    CHECK(kind_of([] { generate("nope", {}); }) == ErrorKind::UnknownFamily);
    CHECK(kind_of([] { generate("cycle", {}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { generate("cycle", {"x"}); }) == ErrorKind::ParseError);
}

TEST_CASE("benzenoid basics")
{
    auto hex = benzenoid(benzenoid_preset("hexagon"));
    CHECK(brute_isomorphic(hex.graph, cycle_graph(6)));
    for (int i = 0; i < 3; ++i) {
        CHECK(std::count(hex.edge_class.begin(), hex.edge_class.end(), i) == 2);
        CHECK(hex.trees[i].order() == 2);
    }
    CHECK(hex.hexagons.size() == 1);

    auto naph = benzenoid(benzenoid_preset("naphthalene"));
    CHECK(naph.graph.order() == 10);
    CHECK(naph.graph.edge_count() == 11);
    auto anth = benzenoid(benzenoid_preset("anthracene"));
    CHECK(anth.graph.order() == 14);
    CHECK(anth.graph.edge_count() == 16);

    BenzenoidSpec ring;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}})
        ring.hexagons.emplace_back(a, b);
    CHECK(kind_of([&] { benzenoid(ring); }) == ErrorKind::HoleDetected);
    CHECK(kind_of([] { benzenoid({{{0, 0}, {3, 0}}}); }) == ErrorKind::DisconnectedHexagons);
    CHECK(kind_of([] { benzenoid({{}}); }) == ErrorKind::DisconnectedHexagons);
    ring.hexagons.emplace_back(0, 0);
    CHECK(benzenoid(ring).graph.order() == 24);
}

TEST_CASE("benzenoid embedding and parallelism")
{
    std::vector<BenzenoidGraph> all;
    for (const auto& name : benzenoid_preset_names())
        all.push_back(benzenoid(benzenoid_preset(name)));
    all.push_back(benzenoid({{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, -1}}}));

    std::mt19937_64 rng(57);
    for (const auto& b : all) {
        const auto& g = b.graph;
        auto d = oracle::floyd(g);
        CHECK(embedding_is_isometric(b));
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = 0; y < g.order(); ++y) {
                int sum = 0;
                for (int i = 0; i < 3; ++i)
                    sum += b.trees[i].dist(b.phi[x][i], b.phi[y][i]);
                CHECK(sum == d[x][y]);
            }
        REQUIRE(b.edge_class.size() == g.edge_count());

        // A class edge changes exactly one tree coordinate.
        auto edges = g.edges();
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto [x, y] = edges[k];
            for (int i = 0; i < 3; ++i)
                CHECK((b.phi[x][i] != b.phi[y][i]) == (i == b.edge_class[k]));
        }

        // Geodesics cross each parallelism class at most once.
        auto classes = parallelism_classes(b);
        std::size_t total = 0;
        for (const auto& cls : classes)
            total += cls.size();
        CHECK(total == g.edge_count());
        std::map<Edge, int> class_id;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto e : classes[c])
                class_id[e] = static_cast<int>(c);
        for (int trial = 0; trial < 60; ++trial) {
            Vertex x = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
            Vertex y = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
            std::vector<Vertex> path{x};
            while (path.back() != y) {
                std::vector<Vertex> next;
                for (Vertex z : g.neighbors(path.back()))
                    if (d[z][y] + 1 == d[path.back()][y])
                        next.push_back(z);
                path.push_back(next[rng() % next.size()]);
            }
            std::set<int> seen;
            for (std::size_t k = 1; k < path.size(); ++k) {
                Edge e{std::min(path[k - 1], path[k]), std::max(path[k - 1], path[k])};
                CHECK(seen.insert(class_id.at(e)).second);
            }
        }
        // Each hexagon meets a class in zero or two edges.
        for (const auto& h : b.hexagons) {
            std::map<int, int> hits;
            for (std::size_t k = 0; k < h.size(); ++k) {
                Vertex x = h[k], y = h[(k + 1) % h.size()];
                ++hits[class_id.at({std::min(x, y), std::max(x, y)})];
            }
            for (auto [c, count] : hits)
                CHECK(count == 2);
        }

        for (const auto& h : b.hexagons)
            CHECK(oracle::gated(d, {h.begin(), h.end()}));
        for (const auto& h : b.incomplete_hexagons) {
            CHECK(h.size() == 4);
            std::set<int> cls;
            for (std::size_t k = 1; k < h.size(); ++k)
                cls.insert(b.class_of(h[k - 1], h[k]));
            CHECK(cls.size() == 3);
            CHECK(oracle::gated(d, {h.begin(), h.end()}));
        }
        CHECK(compute_p(g).p <= 2);
    }
    CHECK(benzenoid(benzenoid_preset("anthracene")).incomplete_hexagons.empty());
    CHECK(benzenoid(benzenoid_preset("bent-chain")).incomplete_hexagons.size() == 1);
}
