#include "medgraph/suites.hpp"

#include "medgraph/benzenoid.hpp"
#include "medgraph/classes.hpp"
#include "medgraph/error.hpp"
#include "medgraph/functions.hpp"
#include "medgraph/generators.hpp"
#include "medgraph/metric.hpp"
#include "medgraph/recognition.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace medgraph {

namespace {

std::string set_text(const VertexSet& s)
{
    std::string out = "{";
    for (Vertex x : s.members())
        out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

void add(SuiteResult& r, std::string name, bool pass, std::string detail = {})
{
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

// Median set from a fresh BFS matrix and a direct weighted sum.
VertexSet direct_median_set(const Graph& g, const Profile& pi)
{
    const auto d = all_pairs_distances(g);
    std::vector<Rational> f(g.order());
    for (Vertex x = 0; x < g.order(); ++x)
        for (const auto& [y, w] : pi.weights())
            f[x] += w * d(x, y);
    return argmin_set(f);
}

RecognizerOptions recognizer(const SuiteOptions& opt)
{
    RecognizerOptions r;
    r.jobs = opt.jobs;
    return r;
}

void suite_cycles(SuiteResult& r, const SuiteOptions&)
{
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 4}, {3, 5}}) {
        const int n = 2 * k + m;
        auto g = cycle_graph(n);
        const Vertex u = 0, v = m, x = m + k;
        Profile pi({{u, k + 1}, {v, k + 1}, {x, 1}});
        auto med = median_set(g, pi);
        auto direct = direct_median_set(g, pi);
        VertexSet want(n, {u, v});
        std::ostringstream detail;
        detail << "C" << n << " Med=" << set_text(med) << " d(u,x)=" << g.dist(u, x) << " d(v,x)=" << g.dist(v, x);
        bool ok = g.dist(u, x) == k && g.dist(v, x) == k && g.dist(u, v) == m && med == want && direct == want
            && !is_p_connected(g, med, m - 1);
        add(r, "k=" + std::to_string(k) + ",m=" + std::to_string(m), ok, detail.str());
    }
}

void suite_p_c7(SuiteResult& r, const SuiteOptions& opt)
{
    auto g = cycle_graph(7);
    auto rep = compute_p(g, recognizer(opt));
    add(r, "p(C7)=3", rep.p == 3 && g.diameter() == 3 && rep.witness_below.has_value(),
        "p=" + std::to_string(rep.p) + " diameter=" + std::to_string(g.diameter()));
    if (rep.witness_below) {
        const auto& w = *rep.witness_below;
        auto pi = disconnecting_profile(g, w.u, w.v, witness_profile(w));
        add(r, "p=2 witness disconnects", direct_median_set(g, pi) == VertexSet(7, {w.u, w.v}) && g.dist(w.u, w.v) == 3,
            "pair (" + std::to_string(w.u) + "," + std::to_string(w.v) + ")");
    }
}

void suite_fano(SuiteResult& r, const SuiteOptions& opt)
{
    for (int q : {2, 3}) {
        auto pg = projective_incidence_graph(q);
        const Graph& g = pg.graph;
        std::map<Vertex, Rational> ones;
        for (Vertex x = 0; x < g.order(); ++x)
            ones[x] = 1;
        Profile pi(ones);
        auto f = median_function(g, pi);
        const int low = 3 * q * q + 3 * q + 6, high = 5 * q * q + 3 * q + 4;
        bool values = f[pg.u] == low && f[pg.v] == low;
        for (Vertex x = 0; x < g.order(); ++x)
            if (x != pg.u && x != pg.v)
                values = values && f[x] == high;
        add(r, "F values q=" + std::to_string(q), values,
            "F(u)=" + to_string(f[pg.u]) + " F(v)=" + to_string(f[pg.v]) + " expected " + std::to_string(low) + "/"
                + std::to_string(high));
        auto med = median_set(g, pi);
        add(r, "Med={u,v} q=" + std::to_string(q),
            med == VertexSet(g.order(), {pg.u, pg.v}) && direct_median_set(g, pi) == med && g.dist(pg.u, pg.v) == 3,
            "Med=" + set_text(med));
        add(r, "modular q=" + std::to_string(q), is_modular(g).verdict);
    }
    auto g2 = projective_incidence_graph(2).graph;
    auto rep = compute_p(g2, recognizer(opt));
    add(r, "p(G2)>=3", rep.p >= 3, "p=" + std::to_string(rep.p));
}

void suite_median_graphs(SuiteResult& r, const SuiteOptions& opt)
{
    int trees = 0, bad = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : all_trees(n)) {
            ++trees;
            if (compute_p(t, recognizer(opt)).p != 1)
                ++bad;
        }
    std::mt19937_64 rng(opt.seed);
    for (int n = 9; n <= 10; ++n)
        for (int i = 0; i < 40; ++i) {
            std::vector<int> code(n - 2);
            for (auto& c : code)
                c = std::uniform_int_distribution<int>(0, n - 1)(rng);
            ++trees;
            if (compute_p(tree_from_pruefer(code), recognizer(opt)).p != 1)
                ++bad;
        }
    add(r, "trees p=1", bad == 0, std::to_string(trees) + " trees, " + std::to_string(bad) + " with p != 1");
    for (int n = 2; n <= 4; ++n) {
        auto p = compute_p(hypercube(n).graph, recognizer(opt)).p;
        add(r, "p(H" + std::to_string(n) + ")=1", p == 1, "p=" + std::to_string(p));
    }
}

std::vector<Graph> chordal_corpus(std::uint64_t seed)
{
    std::vector<Graph> out;
    std::mt19937_64 rng(seed);
    for (int k = 1; k <= 3; ++k)
        for (int n : {8, 11, 14})
            out.push_back(random_k_tree(n, k, rng));
    for (int n : {6, 8, 10, 12, 14, 16})
        out.push_back(random_interval_graph(n, rng));
    const std::vector<std::vector<std::string>> extras{{}, {"ab"}, {"ab", "bc"}, {"ab", "ac", "bc"}};
    for (int mask = 0; mask < 8; ++mask)
        for (const auto& e : extras) {
            auto at = [&](int bit) { return (mask >> bit) & 1 ? Attach::V : Attach::U; };
            auto g = beta_configuration(at(0), at(1), at(2), e).graph;
            if (is_chordal(g).verdict)
                out.push_back(g);
        }
    return out;
}

std::vector<Graph> cb_corpus()
{
    auto c5 = cycle_graph(5);
    return {
        c5,
        wheel_graph(5),
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}}, "C5+leaf"),
        Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}}, "C5+2leaves"),
        gated_amalgam(c5, c5, {0}, {0}).with_name("C5.C5"),
        gated_amalgam(c5, wheel_graph(5), {0}, {5}).with_name("C5.W5"),
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}, {2, 5}}, "C5+apex012"),
    };
}

void suite_chordal(SuiteResult& r, const SuiteOptions& opt)
{
    auto chordal = chordal_corpus(opt.seed);
    int not_chordal = 0, over = 0;
    for (const auto& g : chordal) {
        not_chordal += !is_chordal(g).verdict || !is_bridged(g).verdict;
        over += compute_p(g, recognizer(opt)).p > 2;
    }
    add(r, "chordal corpus size>=20", chordal.size() >= 20, std::to_string(chordal.size()) + " graphs");
    add(r, "chordal corpus is chordal and bridged", not_chordal == 0, std::to_string(not_chordal) + " misfits");
    add(r, "chordal p<=2", over == 0, std::to_string(over) + " graphs with p > 2");

    auto cb = cb_corpus();
    int misfit = 0;
    over = 0;
    for (const auto& g : cb) {
        misfit += !has_convex_balls(g).verdict || is_bridged(g).verdict;
        over += compute_p(g, recognizer(opt)).p > 2;
    }
    add(r, "CB non-bridged corpus size>=5", cb.size() >= 5, std::to_string(cb.size()) + " graphs");
    add(r, "CB corpus has convex balls, not bridged", misfit == 0, std::to_string(misfit) + " misfits");
    add(r, "CB p<=2", over == 0, std::to_string(over) + " graphs with p > 2");
}

void suite_beta(SuiteResult& r, const SuiteOptions& opt)
{
    auto b = beta_configuration(Attach::U, Attach::U, Attach::U);
    const Graph& g = b.graph;
    Profile pi({{b.a, 1}, {b.b, 1}, {b.c, 1}, {b.v, 1}});
    auto med = median_set(g, pi);
    auto local = local_median_set_p(g, pi, 1);
    add(r, "lMed1 != Med", !(local == med) && med == direct_median_set(g, pi),
        "Med=" + set_text(med) + " lMed1=" + set_text(local));
    add(r, "chordal", is_chordal(g).verdict);
    auto p = compute_p(g, recognizer(opt)).p;
    add(r, "p=2", p == 2, "p=" + std::to_string(p));
    auto w = detect_beta_configuration(g);
    add(r, "beta detected", w.has_value());
}

void suite_products(SuiteResult& r, const SuiteOptions& opt)
{
    auto c6 = cycle_graph(6), c7 = cycle_graph(7), k2 = complete_graph(2);
    auto p = [&](const Graph& g) { return compute_p(g, recognizer(opt)).p; };
    struct Case {
        std::string name;
        Graph g;
        int want;
        int factors;
    };
    std::vector<Case> cases{
        {"p(C7xK2)=3", cartesian_product(c7, k2), 3, std::max(p(c7), p(k2))},
        {"p(C6xC6)=2", cartesian_product(c6, c6), 2, p(c6)},
        {"p(C6 amalgam C6 along an edge)=2", gated_amalgam(c6, c6, {0, 1}, {0, 1}), 2, p(c6)},
    };
    for (const auto& c : cases) {
        int got = p(c.g);
        add(r, c.name, got == c.want && got == c.factors,
            "p=" + std::to_string(got) + " max over factors=" + std::to_string(c.factors));
    }
}

void suite_johnson(SuiteResult& r, const SuiteOptions& opt)
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}}) {
        auto gen = johnson_graph(n, k);
        auto name = "J(" + std::to_string(n) + "," + std::to_string(k) + ")";
        int p = compute_p(gen.graph, recognizer(opt)).p;
        add(r, name + " meshed, p=1", is_meshed(gen.graph).verdict && p == 1, "p=" + std::to_string(p));
        add(r, name + " labeled verdict", connected_medians_partial_johnson(gen.graph, *gen.labels).verdict);
    }
    for (int n : {4, 5}) {
        auto g = halved_cube(n).graph;
        int p = compute_p(g, recognizer(opt)).p;
        add(r, "halfH" + std::to_string(n) + " thick, PC, p=1",
            is_thick(g).verdict && satisfies_PC(g).verdict && p == 1, "p=" + std::to_string(p));
    }
    for (int n = 3; n <= 6; ++n) {
        auto half = halved_cube(n).graph;
        auto square = power_graph(hypercube(n - 1).graph, 2);
        auto f = find_isomorphism(half, square);
        bool ok = f.has_value();
        if (ok)
            for (Vertex x = 0; x < half.order(); ++x)
                for (Vertex y = x + 1; y < half.order(); ++y)
                    ok = ok && half.adjacent(x, y) == square.adjacent((*f)[x], (*f)[y]);
        add(r, "halfH" + std::to_string(n) + " ~ H" + std::to_string(n - 1) + "^2", ok);
    }
}

void suite_benzenoids(SuiteResult& r, const SuiteOptions& opt)
{
    for (const auto& name : benzenoid_preset_names()) {
        auto b = benzenoid(benzenoid_preset(name));
        add(r, name + " embedding isometric", embedding_is_isometric(b));
        bool gated = true;
        for (const auto& group : {b.hexagons, b.incomplete_hexagons})
            for (const auto& h : group)
                gated = gated && is_gated_set(b.graph, VertexSet(b.graph.order(), h)).gated;
        add(r, name + " hexagons gated", gated,
            std::to_string(b.hexagons.size()) + " hexagons, " + std::to_string(b.incomplete_hexagons.size())
                + " incomplete");
        int p = compute_p(b.graph, recognizer(opt)).p;
        add(r, name + " p<=2", p <= 2, "p=" + std::to_string(p));
    }
}

void suite_lp_oracle(SuiteResult& r, const SuiteOptions& opt)
{
    int graphs = 0, oracle_hits = 0, disagreements = 0, feasible_pairs = 0, bad_profiles = 0, unverified = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : all_connected_graphs(n)) {
            ++graphs;
            for (int p : {1, 2}) {
                auto verdict = check_Gp_connected_medians(g, p, recognizer(opt));
                OracleOptions oo;
                oo.max_weight = 2;
                auto cx = brute_force_oracle(g, p, oo);
                if (cx) {
                    ++oracle_hits;
                    disagreements += verdict.connected;
                }
                for (const auto& pv : verdict.pairs) {
                    unverified += !verify_feasibility_result(g, pv);
                    if (pv.satisfies || pv.empty_interior)
                        continue;
                    ++feasible_pairs;
                    auto pi = disconnecting_profile(g, pv.u, pv.v, witness_profile(pv));
                    auto med = direct_median_set(g, pi);
                    bool ok = med == VertexSet(n, {pv.u, pv.v}) && g.dist(pv.u, pv.v) > p;
                    for (const auto& [x, w] : pi.weights())
                        ok = ok && w.get_den() == 1;
                    bad_profiles += !ok;
                }
            }
        }
    add(r, "exhaustive corpus", graphs == 996, std::to_string(graphs) + " connected graphs on <= 7 vertices");
    add(r, "oracle counterexample => LP false", disagreements == 0,
        std::to_string(oracle_hits) + " oracle hits, " + std::to_string(disagreements) + " disagreements");
    add(r, "feasible pair => integer profile with Med={u,v}", bad_profiles == 0,
        std::to_string(feasible_pairs) + " feasible pairs, " + std::to_string(bad_profiles) + " bad profiles");
    add(r, "every LP answer re-verified", unverified == 0, std::to_string(unverified) + " unverified");
}

// Kind 0: median function; 1: perturbed distance; 2: small random values.
VertexFunction random_function(const Graph& g, std::mt19937_64& rng, int& kind)
{
    const int n = g.order();
    VertexFunction f(n);
    kind = std::min(2, std::uniform_int_distribution<int>(0, 3)(rng));
    switch (kind) {
    case 0: { // median function of a random profile
        std::map<Vertex, Rational> w;
        for (Vertex x = 0; x < n; ++x)
            if (std::bernoulli_distribution(0.5)(rng))
                w[x] = fraction(std::uniform_int_distribution<int>(1, 4)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
        if (w.empty())
            w[0] = 1;
        return median_function(g, Profile(w));
    }
    case 1: { // distance to a random vertex, perturbed
        Vertex c = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
        for (Vertex x = 0; x < n; ++x)
            f[x] = g.dist(c, x) + fraction(std::uniform_int_distribution<int>(0, 1)(rng), 3);
        return f;
    }
    default: // small random rationals
        for (auto& x : f)
            x = fraction(std::uniform_int_distribution<int>(0, 3)(rng), std::uniform_int_distribution<int>(1, 2)(rng));
        return f;
    }
}

void suite_local_global(SuiteResult& r, const SuiteOptions& opt)
{
    std::mt19937_64 rng(opt.seed);
    int trials = 0, local_pass = 0, mismatch = 0, not_unimodal = 0, not_isometric = 0, no_geodesic = 0;
    std::pair<int, int> by_kind[3]{}; // (tried, passed)
    while (trials < 500) {
        int p = std::uniform_int_distribution<int>(1, 2)(rng);
        int n = std::uniform_int_distribution<int>(2 * p + 1, 9)(rng);
        auto g = random_connected_graph(n, std::uniform_real_distribution<double>(0.05, 0.5)(rng), rng);
        if (g.diameter() <= p)
            continue;
        int kind = 0;
        auto f = random_function(g, rng, kind);
        ++trials;
        ++by_kind[kind].first;
        bool local = is_p_weakly_peakless(g, f, p);
        bool global = is_p_weakly_peakless_all_pairs(g, f, p);
        mismatch += local != global;
        if (!local)
            continue;
        ++local_pass;
        ++by_kind[kind].second;
        not_unimodal += !is_unimodal_on_power(g, f, p);
        for (const auto& alpha : f)
            if (!is_p_isometric(g, level_set(f, alpha), p)) {
                ++not_isometric;
                break;
            }
        try {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    find_peakless_p_geodesic(g, f, u, v, p);
        }
        catch (const Error&) {
            ++no_geodesic;
        }
    }
    add(r, "local <=> all pairs", mismatch == 0,
        std::to_string(trials) + " functions, " + std::to_string(local_pass) + " locally p-weakly peakless, "
            + std::to_string(mismatch) + " mismatches; passed/tried by kind (median, distance, random): "
            + std::to_string(by_kind[0].second) + "/" + std::to_string(by_kind[0].first) + ", "
            + std::to_string(by_kind[1].second) + "/" + std::to_string(by_kind[1].first) + ", "
            + std::to_string(by_kind[2].second) + "/" + std::to_string(by_kind[2].first));
    add(r, "passing functions unimodal on G^p", not_unimodal == 0, std::to_string(not_unimodal) + " failures");
    add(r, "passing functions have p-isometric level sets", not_isometric == 0,
        std::to_string(not_isometric) + " failures");
    add(r, "passing functions have peakless p-geodesics", no_geodesic == 0, std::to_string(no_geodesic) + " failures");
    add(r, "some functions pass", local_pass >= 25, std::to_string(local_pass) + " passing");
}

void suite_classes(SuiteResult& r, const SuiteOptions& opt)
{
    std::vector<Graph> corpus;
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : all_connected_graphs(n))
            corpus.push_back(g);
    for (const auto& g : cb_corpus())
        corpus.push_back(g);
    for (const auto& g : chordal_corpus(opt.seed))
        corpus.push_back(g);
    for (auto g : {johnson_graph(5, 2).graph, halved_cube(5).graph, hypercube(3).graph, b_hat_graph(4), b_graph(4),
             cartesian_product(cycle_graph(6), complete_graph(2)), cycle_graph(8), hyperoctahedron(3)})
        corpus.push_back(g);

    int wb = 0, wb_bad = 0, cb = 0, cb_bad = 0, cb_eq_bad = 0, bar = 0, bar_bad = 0, tp = 0, tp_bad = 0, abc = 0,
        abc_bad = 0, mabc = 0, mabc_bad = 0, tri_bad = 0;
    for (const auto& g : corpus) {
        const int p = compute_p(g, recognizer(opt)).p;
        if (is_weakly_bridged(g).verdict) {
            ++wb;
            wb_bad += p > 2;
        }
        bool balls = has_convex_balls(g).verdict;
        cb_eq_bad += balls != (satisfies_INC(g).verdict && satisfies_TPC(g).verdict);
        if (balls) {
            ++cb;
            cb_bad += p > 2;
            const int n = g.order();
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = x + 1; y < n; ++y)
                    for (Vertex z = y + 1; z < n; ++z)
                        for (const auto& t : enumerate_quasi_medians(g, x, y, z)) {
                            int a = g.dist(t.v1, t.v2), b = g.dist(t.v2, t.v3), c = g.dist(t.v1, t.v3);
                            std::vector<int> sides{a, b, c};
                            std::sort(sides.begin(), sides.end());
                            bool ok = sides == std::vector<int>{1, 2, 2}
                                || (a == b && b == c && is_strongly_equilateral(g, t));
                            tri_bad += !ok;
                        }
        }
        if (is_bipartite(g).verdict && is_bipartite_absolute_retract(g).verdict) {
            ++bar;
            bar_bad += p > 2;
        }
        if (is_thick(g).verdict && satisfies_PC(g).verdict) {
            ++tp;
            tp_bad += p != 1;
        }
        bool conditions = true;
        for (Vertex u = 0; u < g.order() && conditions; ++u)
            for (Vertex v = u + 1; v < g.order() && conditions; ++v) {
                if (g.dist(u, v) == 3)
                    conditions = check_condition_a(g, u, v);
                else if (g.dist(u, v) == 4)
                    conditions = check_condition_b(g, u, v) || check_condition_c(g, u, v);
            }
        if (conditions && is_weakly_modular(g).verdict && satisfies_INC(g).verdict) {
            ++abc;
            abc_bad += p > 2;
        }
        if (conditions && is_modular(g).verdict) {
            ++mabc;
            mabc_bad += p > 2;
        }
    }
    auto line = [](int total, int bad) { return std::to_string(total) + " graphs, " + std::to_string(bad) + " violations"; };
    add(r, "weakly bridged => p<=2", wb_bad == 0, line(wb, wb_bad));
    add(r, "convex balls => p<=2", cb_bad == 0, line(cb, cb_bad));
    add(r, "convex balls <=> INC and TPC", cb_eq_bad == 0, std::to_string(cb_eq_bad) + " disagreements");
    add(r, "CB metric triangles strongly equilateral or (1,2,2)", tri_bad == 0, std::to_string(tri_bad) + " bad");
    add(r, "bipartite absolute retract => p<=2", bar_bad == 0, line(bar, bar_bad));
    add(r, "thick and PC => p=1", tp_bad == 0, line(tp, tp_bad));
    add(r, "weakly modular, INC, (a), (b)|(c) => p<=2", abc_bad == 0, line(abc, abc_bad));
    add(r, "modular, (a), (b)|(c) => p<=2", mabc_bad == 0, line(mabc, mabc_bad));
    add(r, "corpus exercised every implication", wb > 0 && cb > 0 && bar > 0 && tp > 0 && abc > 0 && mabc > 0);
}

const std::vector<std::pair<std::string, std::function<void(SuiteResult&, const SuiteOptions&)>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<void(SuiteResult&, const SuiteOptions&)>>> r{
        {"cycles", suite_cycles},
        {"p-c7", suite_p_c7},
        {"fano", suite_fano},
        {"median-graphs", suite_median_graphs},
        {"chordal", suite_chordal},
        {"beta", suite_beta},
        {"products", suite_products},
        {"johnson", suite_johnson},
        {"benzenoids", suite_benzenoids},
        {"lp-oracle", suite_lp_oracle},
        {"local-global", suite_local_global},
        {"classes", suite_classes},
    };
    return r;
}

} // namespace

bool SuiteResult::pass() const
{
    if (checks.empty())
        return false;
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt)
{
    for (const auto& [key, run] : registry())
        if (key == name) {
            SuiteResult r;
            r.suite = name;
            auto start = std::chrono::steady_clock::now();
            try {
                run(r, opt);
            }
            catch (const std::exception& e) {
                add(r, "unexpected exception", false, e.what());
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
    throw Error(ErrorKind::UnknownSuite, name);
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [key, run] : registry())
        out.push_back(key);
    return out;
}

} // namespace medgraph
