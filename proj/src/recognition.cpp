#include "medgraph/recognition.hpp"

#include "medgraph/error.hpp"
#include "medgraph/metric.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace medgraph {

namespace {

std::vector<Edge> pairs_in_range(const Graph& g, int lo, int hi)
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            int d = g.dist(u, v);
            if (d >= lo && d <= hi)
                out.emplace_back(u, v);
        }
    return out;
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& work)
{
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                work(i);
        });
}

Rational entry(const Graph& g, Vertex u, Vertex v, Vertex w, Vertex x)
{
    return g.dist(v, w) * g.dist(u, x) + g.dist(u, w) * g.dist(v, x) - g.dist(u, v) * g.dist(w, x);
}

} // namespace

RationalMatrix build_Duv(const Graph& g, Vertex u, Vertex v)
{
    return build_Duv(g, u, v, g.vertex_set());
}

RationalMatrix build_Duv(const Graph& g, Vertex u, Vertex v, const VertexSet& columns)
{
    if (g.dist(u, v) < 2)
        throw Error(ErrorKind::AdjacentPair, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    RationalMatrix m;
    m.u = u;
    m.v = v;
    m.rows = interior_interval(g, u, v).members();
    if (m.rows.empty())
        throw Error(ErrorKind::EmptyInterior, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    m.cols = columns.members();
    m.entries.assign(m.rows.size(), RationalRow(m.cols.size()));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols.size(); ++j)
            m.entries[i][j] = entry(g, u, v, m.rows[i], m.cols[j]);
    return m;
}

PairVerdict analyze_pair(const Graph& g, Vertex u, Vertex v, bool restrict_to_J)
{
    PairVerdict pv;
    pv.u = u;
    pv.v = v;
    pv.d = g.dist(u, v);
    if (interior_interval(g, u, v).empty()) {
        pv.empty_interior = true;
        return pv;
    }
    auto m = restrict_to_J ? build_Duv(g, u, v, J_set(g, u, v)) : build_Duv(g, u, v);
    pv.rows = m.rows;
    pv.cols = m.cols;
    pv.result = lp_feasible_strict(m.entries);
    pv.satisfies = pv.result.status == Feasibility::Infeasible;
    return pv;
}

bool pair_satisfies_WC_for_all_profiles(const Graph& g, Vertex u, Vertex v, bool restrict_to_J)
{
    return analyze_pair(g, u, v, restrict_to_J).satisfies;
}

bool verify_feasibility_result(const Graph& g, const PairVerdict& pv)
{
    if (pv.empty_interior)
        return !pv.satisfies && interior_interval(g, pv.u, pv.v).empty();
    if (pv.rows != interior_interval(g, pv.u, pv.v).members())
        return false;
    const auto& r = pv.result;
    const Vertex u = pv.u, v = pv.v;
    if (r.status == Feasibility::Feasible) {
        if (r.witness.size() != pv.cols.size())
            return false;
        for (const auto& q : r.witness)
            if (q < 0)
                return false;
        // Row w of D·π equals d(v,w)F(u) + d(u,w)F(v) - d(u,v)F(w).
        std::vector<Rational> f(g.order(), 0);
        for (Vertex x = 0; x < g.order(); ++x)
            for (std::size_t j = 0; j < pv.cols.size(); ++j)
                f[x] += r.witness[j] * g.dist(pv.cols[j], x);
        for (Vertex w : pv.rows)
            if (g.dist(v, w) * f[u] + g.dist(u, w) * f[v] - g.dist(u, v) * f[w] >= 0)
                return false;
        return !pv.satisfies;
    }
    if (r.certificate.size() != pv.rows.size())
        return false;
    bool nonzero = false;
    for (const auto& y : r.certificate) {
        if (y < 0)
            return false;
        nonzero = nonzero || y != 0;
    }
    if (!nonzero)
        return false;
    for (Vertex x : pv.cols) {
        Rational s = 0;
        for (std::size_t i = 0; i < pv.rows.size(); ++i) {
            Vertex w = pv.rows[i];
            s += r.certificate[i]
                * (g.dist(v, w) * g.dist(u, x) + g.dist(u, w) * g.dist(v, x) - g.dist(u, v) * g.dist(w, x));
        }
        if (s < 0)
            return false;
    }
    return pv.satisfies;
}

Profile witness_profile(const PairVerdict& pv)
{
    std::map<Vertex, Rational> w;
    for (std::size_t j = 0; j < pv.cols.size() && j < pv.result.witness.size(); ++j)
        if (pv.result.witness[j] != 0)
            w[pv.cols[j]] = pv.result.witness[j];
    return Profile(w);
}

GpVerdict check_Gp_connected_medians(const Graph& g, int p, const RecognizerOptions& opt, bool stop_early)
{
    if (p < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "p=" + std::to_string(p));
    GpVerdict out;
    out.p = p;
    auto pairs = pairs_in_range(g, p + 1, 2 * p);
    if (stop_early && opt.jobs <= 1) {
        for (auto [u, v] : pairs) {
            out.pairs.push_back(analyze_pair(g, u, v, opt.restrict_to_J));
            if (!out.pairs.back().satisfies)
                break;
        }
    }
    else {
        out.pairs.resize(pairs.size());
        run_parallel(pairs.size(), opt.jobs, [&](std::size_t i) {
            out.pairs[i] = analyze_pair(g, pairs[i].first, pairs[i].second, opt.restrict_to_J);
        });
    }
    for (const auto& pv : out.pairs)
        if (!pv.satisfies) {
            out.connected = false;
            out.first_failure = pv;
            break;
        }
    return out;
}

bool has_Gp_connected_medians(const Graph& g, int p, const RecognizerOptions& opt)
{
    return check_Gp_connected_medians(g, p, opt, true).connected;
}

PValueReport compute_p(const Graph& g, const RecognizerOptions& opt)
{
    PValueReport report;
    for (int p = 1;; ++p) {
        report.levels.push_back(check_Gp_connected_medians(g, p, opt, true));
        if (report.levels.back().connected) {
            report.p = p;
            break;
        }
    }
    if (report.levels.size() > 1)
        report.witness_below = report.levels[report.levels.size() - 2].first_failure;
    return report;
}

Profile disconnecting_profile(const Graph& g, Vertex u, Vertex v, const Profile& witness)
{
    // Clear denominators first so that the result is an integer profile.
    mpz_class scale = 1;
    for (const auto& [x, q] : witness.weights())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    std::map<Vertex, Rational> pi;
    for (const auto& [x, q] : witness.weights())
        pi[x] = q * scale;
    Profile base(pi);
    Rational fu = median_value(g, base, u);
    Rational fv = median_value(g, base, v);
    if (fv < fu) {
        std::swap(u, v);
        std::swap(fu, fv);
    }
    const int k = g.dist(u, v);
    const Rational eps = fv - fu;
    const Rational mu = k * fv + 1;
    std::map<Vertex, Rational> plus;
    for (const auto& [x, q] : pi)
        plus[x] = k * q;
    plus[u] += mu;
    plus[v] += mu + eps;
    return Profile(plus);
}

std::optional<OracleCounterexample> brute_force_oracle(const Graph& g, int p, const OracleOptions& opt)
{
    if (opt.max_weight < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "maxWeight=" + std::to_string(opt.max_weight));
    const int n = g.order();
    for (auto [u, v] : pairs_in_range(g, p + 1, 2 * p)) {
        auto support = J_set(g, u, v).members();
        const std::size_t s = support.size();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < s; ++i) {
            total *= static_cast<std::uint64_t>(opt.max_weight + 1);
            if (total > opt.budget)
                throw Error(ErrorKind::BudgetExceeded,
                    "pair (" + std::to_string(u) + "," + std::to_string(v) + ") needs more than "
                        + std::to_string(opt.budget) + " profiles");
        }
        std::vector<int> w(s, 0);
        std::vector<long long> f(n, 0);
        std::vector<Vertex> med;
        for (;;) {
            // Odometer step with incremental update of F.
            std::size_t i = 0;
            while (i < s && w[i] == opt.max_weight) {
                for (Vertex x = 0; x < n; ++x)
                    f[x] -= static_cast<long long>(opt.max_weight) * g.dist(support[i], x);
                w[i] = 0;
                ++i;
            }
            if (i == s)
                break;
            ++w[i];
            for (Vertex x = 0; x < n; ++x)
                f[x] += g.dist(support[i], x);

            long long best = *std::min_element(f.begin(), f.end());
            med.clear();
            for (Vertex x = 0; x < n; ++x)
                if (f[x] == best)
                    med.push_back(x);
            bool bad = !is_p_connected(g, VertexSet(n, med), p);
            for (Vertex x = 0; x < n && !bad; ++x) {
                if (f[x] == best)
                    continue;
                bool local = true;
                for (Vertex y = 0; y < n && local; ++y) {
                    int d = g.dist(x, y);
                    if (d >= 1 && d <= p && f[y] < f[x])
                        local = false;
                }
                bad = local;
            }
            if (bad) {
                std::map<Vertex, Rational> weights;
                for (std::size_t j = 0; j < s; ++j)
                    if (w[j])
                        weights[support[j]] = w[j];
                return OracleCounterexample{u, v, Profile(weights)};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Solves the η system for fixed S and companion equalities; returns η on success.
std::optional<std::vector<Rational>> solve_eta(const Graph& g, const std::vector<Vertex>& s,
    const std::vector<std::pair<std::size_t, std::size_t>>& equal, const std::vector<Vertex>& jcirc)
{
    const std::size_t k = s.size();
    const std::size_t cols = k + jcirc.size();
    DenseMatrix a;
    std::vector<Rational> b;
    RationalRow total(cols, 0);
    for (std::size_t i = 0; i < k; ++i)
        total[i] = 1;
    a.push_back(total);
    b.push_back(1);
    for (auto [i, j] : equal) {
        RationalRow row(cols, 0);
        row[i] = 1;
        row[j] = -1;
        a.push_back(row);
        b.push_back(0);
    }
    for (std::size_t xi = 0; xi < jcirc.size(); ++xi) {
        RationalRow row(cols, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (g.adjacent(jcirc[xi], s[i]))
                row[i] = 1;
        row[k + xi] = -1;
        a.push_back(row);
        b.push_back(Rational(1, 2));
    }
    auto sol = solve_equality_system(a, b);
    if (!sol.feasible)
        return std::nullopt;
    return std::vector<Rational>(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(k));
}

bool companion_ok(const Graph& g, Vertex u, Vertex v, Vertex s, Vertex t, const std::vector<Vertex>& mset)
{
    for (Vertex x : mset)
        if (g.dist(s, x) + g.dist(t, x) > g.dist(u, x) + g.dist(v, x))
            return false;
    return true;
}

} // namespace

std::optional<AlphaBetaCertificate> alpha_beta_certificate(const Graph& g, Vertex u, Vertex v, int interior_cap)
{
    if (g.dist(u, v) != 2)
        throw Error(ErrorKind::WrongDistance, "alpha/beta certificate needs d(u,v)=2");
    auto inner = interior_interval(g, u, v).members();
    if (static_cast<int>(inner.size()) > interior_cap)
        throw Error(ErrorKind::InteriorTooLarge,
            std::to_string(inner.size()) + " interior vertices, cap " + std::to_string(interior_cap));
    auto mset = M_set(g, u, v).members();
    auto jcirc = Jcirc_set(g, u, v).members();
    const std::size_t r = inner.size();

    for (std::uint32_t mask = 1; mask < (1U << r); ++mask) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1U)
                s.push_back(inner[i]);
        // Companions at distance <= 1 impose nothing; otherwise each choice adds an equality.
        std::vector<Vertex> free_companion(s.size(), -1);
        std::vector<std::vector<std::size_t>> options(s.size());
        bool dead = false;
        for (std::size_t i = 0; i < s.size() && !dead; ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (!companion_ok(g, u, v, s[i], s[j], mset))
                    continue;
                if (g.dist(s[i], s[j]) <= 1) {
                    free_companion[i] = s[j];
                    break;
                }
                options[i].push_back(j);
            }
            dead = free_companion[i] < 0 && options[i].empty();
        }
        if (dead)
            continue;

        std::vector<std::size_t> constrained;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (free_companion[i] < 0)
                constrained.push_back(i);
        std::vector<std::size_t> choice(constrained.size(), 0);
        for (;;) {
            std::vector<std::pair<std::size_t, std::size_t>> equal;
            for (std::size_t c = 0; c < constrained.size(); ++c)
                equal.emplace_back(constrained[c], options[constrained[c]][choice[c]]);
            if (auto eta = solve_eta(g, s, equal, jcirc)) {
                AlphaBetaCertificate cert;
                cert.s = s;
                cert.eta = *eta;
                for (std::size_t i = 0; i < s.size(); ++i)
                    cert.companion[s[i]] = free_companion[i];
                for (auto [i, j] : equal)
                    cert.companion[s[i]] = s[j];
                return cert;
            }
            std::size_t c = 0;
            while (c < choice.size() && ++choice[c] == options[constrained[c]].size())
                choice[c++] = 0;
            if (c == choice.size())
                break;
        }
    }
    return std::nullopt;
}

bool check_alpha_beta_certificate(const Graph& g, Vertex u, Vertex v, const AlphaBetaCertificate& c)
{
    if (c.s.empty() || c.s.size() != c.eta.size())
        return false;
    auto inner = interior_interval(g, u, v);
    Rational total = 0;
    for (std::size_t i = 0; i < c.s.size(); ++i) {
        if (!inner.contains(c.s[i]) || c.eta[i] < 0)
            return false;
        total += c.eta[i];
    }
    if (total != 1)
        return false;
    auto mset = M_set(g, u, v).members();
    auto index_of = [&](Vertex x) {
        return static_cast<std::size_t>(std::find(c.s.begin(), c.s.end(), x) - c.s.begin());
    };
    for (std::size_t i = 0; i < c.s.size(); ++i) {
        auto it = c.companion.find(c.s[i]);
        if (it == c.companion.end())
            return false;
        std::size_t j = index_of(it->second);
        if (j == c.s.size() || !companion_ok(g, u, v, c.s[i], c.s[j], mset))
            return false;
        if (g.dist(c.s[i], c.s[j]) == 2 && c.eta[i] != c.eta[j])
            return false;
    }
    for (Vertex x : Jcirc_set(g, u, v).members()) {
        Rational near = 0;
        for (std::size_t i = 0; i < c.s.size(); ++i)
            if (g.adjacent(x, c.s[i]))
                near += c.eta[i];
        if (2 * near < total)
            return false;
    }
    return true;
}

} // namespace medgraph
