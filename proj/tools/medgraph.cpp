#include "medgraph/benzenoid.hpp"
#include "medgraph/classes.hpp"
#include "medgraph/error.hpp"
#include "medgraph/functions.hpp"
#include "medgraph/generators.hpp"
#include "medgraph/io.hpp"
#include "medgraph/metric.hpp"
#include "medgraph/recognition.hpp"
#include "medgraph/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace medgraph;
using json = nlohmann::ordered_json;

namespace {

json to_json(const VertexSet& s)
{
    return s.members();
}

json to_json(const Profile& pi)
{
    json out = json::object();
    for (const auto& [v, q] : pi.weights())
        out[std::to_string(v)] = to_string(q);
    return out;
}

json to_json(const ClassVerdict& c)
{
    json out{{"class", c.name}, {"verdict", c.verdict}};
    if (!c.witness.empty())
        out["witness"] = c.witness;
    if (!c.detail.empty())
        out["detail"] = c.detail;
    return out;
}

json pair_json(const Graph& g, const PairVerdict& pv)
{
    json out{{"u", pv.u}, {"v", pv.v}, {"d", pv.d}, {"interior", pv.rows}};
    if (!pv.satisfies && !pv.empty_interior) {
        auto witness = witness_profile(pv);
        out["lp_witness"] = to_json(witness);
        out["disconnecting_profile"] = to_json(disconnecting_profile(g, pv.u, pv.v, witness));
    }
    return out;
}

void render_text(std::ostream& out, const json& j, const std::string& indent = "")
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_text(out, value, indent + "  ");
        }
        else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << indent << key << ":\n";
            for (const auto& item : value) {
                out << indent << "  -\n";
                render_text(out, item, indent + "    ");
            }
        }
        else
            out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

struct Output {
    std::string format = "json";

    void emit(json report, std::chrono::steady_clock::time_point start) const
    {
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (format == "text")
            render_text(std::cout, report);
        else
            std::cout << report.dump(2) << '\n';
    }
};

int default_jobs()
{
    if (const char* env = std::getenv("MEDGRAPH_JOBS"))
        try {
            return std::max(1, std::stoi(env));
        }
        catch (const std::exception&) {
        }
    return 1;
}

void write_text_file(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    if (path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    body(out);
}

int cmd_gen(const Output& o, const std::string& family, const std::vector<std::string>& params,
    const std::string& out_path, const std::string& labels_path, const std::string& spec_path)
{
    auto start = std::chrono::steady_clock::now();
    Generated gen;
    json extra = json::object();
    if (family == "benzenoid") {
        BenzenoidSpec spec;
        if (!spec_path.empty()) {
            auto in = open_input(spec_path);
            spec = read_benzenoid_spec(in);
        }
        else if (params.size() == 1)
            spec = benzenoid_preset(params[0]);
        else
            throw Error(ErrorKind::ParameterOutOfRange, "benzenoid needs a preset name or --benzenoid-spec");
        auto b = benzenoid(spec);
        gen.graph = b.graph;
        extra["hexagons"] = b.hexagons;
        extra["incomplete_hexagons"] = b.incomplete_hexagons;
        extra["tree_orders"] = {b.trees[0].order(), b.trees[1].order(), b.trees[2].order()};
        extra["embedding_isometric"] = embedding_is_isometric(b);
    }
    else
        gen = generate(family, params);

    write_text_file(out_path, [&](std::ostream& out) { write_graph(out, gen.graph); });
    if (!labels_path.empty()) {
        if (!gen.labels)
            throw Error(ErrorKind::ParameterOutOfRange, family + " has no labels");
        write_text_file(labels_path, [&](std::ostream& out) { write_labels(out, gen.labels->labels); });
    }
    if (out_path != "-") {
        json report{{"verb", "gen"}, {"family", family}, {"params", params}, {"name", gen.graph.name()},
            {"n", gen.graph.order()}, {"m", gen.graph.edge_count()}, {"diameter", gen.graph.diameter()},
            {"output", out_path}};
        for (const auto& [k, v] : extra.items())
            report[k] = v;
        o.emit(report, start);
    }
    return 0;
}

int cmd_median(const Output& o, const std::string& graph_path, const std::string& profile_path, int p)
{
    auto start = std::chrono::steady_clock::now();
    auto g = read_graph_file(graph_path);
    auto in = open_input(profile_path);
    auto pi = read_profile(in);
    pi.validate(g);
    if (p < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "p must be positive");
    auto f = median_function(g, pi);
    auto med = argmin_set(f);
    auto local = local_minima_p(g, f, p);
    json values = json::array();
    for (const auto& x : f)
        values.push_back(to_string(x));
    json report{{"verb", "median"}, {"inputs", {{"graph", graph_path}, {"profile", profile_path}, {"p", p}}},
        {"n", g.order()}, {"min_value", to_string(f[med.members().front()])}, {"median_set", to_json(med)},
        {"local_median_set", to_json(local)}, {"local_equals_global", local == med},
        {"median_set_p_connected", is_p_connected(g, med, p)}, {"median_function", values}};
    o.emit(report, start);
    return 0;
}

int cmd_pvalue(const Output& o, const std::string& graph_path, bool restrict_j, int oracle_weight, int jobs)
{
    auto start = std::chrono::steady_clock::now();
    auto g = read_graph_file(graph_path);
    RecognizerOptions opt;
    opt.restrict_to_J = restrict_j;
    opt.jobs = jobs;
    auto rep = compute_p(g, opt);
    json levels = json::array();
    for (const auto& level : rep.levels) {
        int failing = 0;
        for (const auto& pv : level.pairs)
            failing += !pv.satisfies;
        levels.push_back({{"p", level.p}, {"connected", level.connected}, {"pairs_checked", level.pairs.size()},
            {"failing_pairs", failing}});
    }
    json report{{"verb", "pvalue"}, {"inputs", {{"graph", graph_path}, {"restrict_j", restrict_j}}},
        {"n", g.order()}, {"diameter", g.diameter()}, {"p", rep.p}, {"levels", levels}};
    if (rep.witness_below)
        report["witness_below"] = pair_json(g, *rep.witness_below);
    if (oracle_weight > 0) {
        OracleOptions oo;
        oo.max_weight = oracle_weight;
        json oracle{{"max_weight", oracle_weight}};
        try {
            auto at_p = brute_force_oracle(g, rep.p, oo);
            oracle["counterexample_at_p"] = at_p ? json{{"u", at_p->u}, {"v", at_p->v}, {"profile", to_json(at_p->profile)}}
                                                  : json(nullptr);
            if (rep.p > 1) {
                auto below = brute_force_oracle(g, rep.p - 1, oo);
                oracle["counterexample_below_p"] = below
                    ? json{{"u", below->u}, {"v", below->v}, {"profile", to_json(below->profile)}}
                    : json(nullptr);
            }
            oracle["agreement"] = !at_p.has_value();
        }
        catch (const Error& e) {
            oracle["error"] = e.what();
        }
        report["oracle"] = oracle;
    }
    o.emit(report, start);
    return 0;
}

int cmd_check(const Output& o, const std::string& cls, const std::string& graph_path, const std::string& labels_path,
    int m)
{
    auto start = std::chrono::steady_clock::now();
    auto g = read_graph_file(graph_path);
    json report{{"verb", "check"}, {"inputs", {{"class", cls}, {"graph", graph_path}}}};
    auto embedding = [&](EmbeddingTarget target) {
        if (labels_path.empty())
            throw Error(ErrorKind::LabelArity, cls + " needs --embedding");
        auto in = open_input(labels_path);
        LabeledEmbedding e;
        e.target = target;
        e.labels = read_labels(in, g.order());
        e.k = static_cast<int>(e.labels.front().size());
        return e;
    };
    const std::map<std::string, std::function<ClassVerdict(const Graph&)>> simple{
        {"meshed", is_meshed},
        {"weakly-modular", is_weakly_modular},
        {"modular", is_modular},
        {"chordal", is_chordal},
        {"bridged", is_bridged},
        {"weakly-bridged", is_weakly_bridged},
        {"cb", has_convex_balls},
        {"inc", satisfies_INC},
        {"tpc", satisfies_TPC},
        {"pc", satisfies_PC},
        {"thick", is_thick},
        {"bipartite", is_bipartite},
    };
    if (auto it = simple.find(cls); it != simple.end())
        report["result"] = to_json(it->second(g));
    else if (cls == "icm")
        report["result"] = to_json(satisfies_ICm(g, m));
    else if (cls == "bipartite-absolute-retract") {
        auto ar = absolute_retract_report(g);
        report["result"] = to_json(ar.interval_condition);
        report["extension_condition"] = to_json(ar.extension_condition);
        report["disagree"] = ar.disagree;
    }
    else if (cls == "beta") {
        auto w = detect_beta_configuration(g);
        json r{{"class", "beta-configuration"}, {"verdict", w.has_value()}};
        if (w)
            r["witness"] = {{"u", w->u}, {"v", w->v}, {"s", w->s}, {"t", w->t}, {"w", w->w}, {"a", w->a}, {"b", w->b},
                {"c", w->c}};
        report["result"] = r;
    }
    else if (cls == "alpha") {
        auto w = detect_alpha_configuration(g);
        json r{{"class", "alpha-configuration"}, {"verdict", w.has_value()}};
        if (w)
            r["witness"] = {{"type", w->type}, {"u", w->u}, {"v", w->v}, {"interior", w->interior}, {"a", w->a},
                {"b", w->b}};
        report["result"] = r;
    }
    else if (cls == "partial-johnson")
        report["result"] = to_json(connected_medians_partial_johnson(g, embedding(EmbeddingTarget::Johnson)));
    else if (cls == "partial-halved-cube")
        report["result"] = to_json(connected_medians_partial_halved_cube(g, embedding(EmbeddingTarget::HalvedCube)));
    else
        throw Error(ErrorKind::UnknownClass, cls);
    o.emit(report, start);
    return 0;
}

int cmd_verify(const Output& o, const std::string& suite, int jobs)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    SuiteOptions opt;
    opt.jobs = jobs;
    bool all_pass = true;
    json suites = json::array();
    for (const auto& name : names) {
        auto r = run_suite(name, opt);
        all_pass = all_pass && r.pass();
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"seconds", r.seconds}, {"checks", checks}});
    }
    o.emit({{"verb", "verify-paper"}, {"inputs", {{"suite", suite}}}, {"pass", all_pass}, {"suites", suites}}, start);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Medians in graph powers: generation, recognition and checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "Worker threads for per-pair work (MEDGRAPH_JOBS)")->check(CLI::PositiveNumber);

    std::string family, out_path = "-", labels_path, spec_path;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    gen->add_option("family", family, "Family name")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("-o,--output", out_path, "Graph file ('-' for stdout)");
    gen->add_option("--labels", labels_path, "Write vertex labels here");
    gen->add_option("--benzenoid-spec", spec_path, "Hexagon coordinate file");

    std::string graph_path, profile_path;
    int p = 1;
    auto* median = app.add_subcommand("median", "Median set and local medians of a profile");
    median->add_option("graph", graph_path)->required();
    median->add_option("profile", profile_path)->required();
    median->add_option("-p", p, "Power for local medians");

    bool restrict_j = false;
    int oracle = 0;
    auto* pvalue = app.add_subcommand("pvalue", "Smallest p with G^p-connected medians");
    pvalue->add_option("graph", graph_path)->required();
    pvalue->add_flag("--restrict-j", restrict_j, "Restrict LP columns to J(u,v)");
    pvalue->add_option("--oracle", oracle, "Cross-check with brute force up to this weight");

    std::string cls, embedding;
    int m = 2;
    auto* check = app.add_subcommand("check", "Class recognition");
    check->add_option("class", cls)->required();
    check->add_option("graph", graph_path)->required();
    check->add_option("--embedding", embedding, "Labels file");
    check->add_option("-m", m, "m for the icm class");

    std::string suite;
    auto* verify = app.add_subcommand("verify-paper", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return cmd_gen(out, family, params, out_path, labels_path, spec_path);
        if (*median)
            return cmd_median(out, graph_path, profile_path, p);
        if (*pvalue)
            return cmd_pvalue(out, graph_path, restrict_j, oracle, jobs);
        if (*check)
            return cmd_check(out, cls, graph_path, embedding, m);
        if (*verify)
            return cmd_verify(out, suite, jobs);
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
