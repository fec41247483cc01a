#include "medgraph/io.hpp"

#include "medgraph/error.hpp"

#include <fstream>
#include <istream>
#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace medgraph {

namespace {

struct LineReader {
    explicit LineReader(std::istream& stream) : in(stream) {}

    std::istream& in;
    int number = 0;
    std::string line;

    // Next nonblank, non-comment line.
    bool next()
    {
        while (std::getline(in, line)) {
            ++number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            line = line.substr(first);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(number) + ": " + what);
    }
};

long long to_integer(const LineReader& r, const std::string& token)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used == token.size())
            return v;
    }
    catch (const std::exception&) {
    }
    r.fail("expected an integer, got '" + token + "'");
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;)
        out.push_back(t);
    return out;
}

} // namespace

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return in;
}

Graph read_graph(std::istream& in)
{
    std::string name;
    if (in.peek() == '#') {
        std::string first;
        std::getline(in, first);
        auto start = first.find_first_not_of("# \t");
        if (start != std::string::npos)
            name = first.substr(start);
        while (!name.empty() && (name.back() == '\r' || name.back() == ' '))
            name.pop_back();
    }
    LineReader r(in);
    if (!r.next())
        r.fail("missing header 'n m'");
    auto head = tokens(r.line);
    if (head.size() != 2)
        r.fail("header must be 'n m'");
    long long n = to_integer(r, head[0]), m = to_integer(r, head[1]);
    if (n < 1 || n >= 65535 || m < 0)
        r.fail("header values out of range");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!r.next())
            r.fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        auto t = tokens(r.line);
        if (t.size() != 2)
            r.fail("edge line must be 'u v'");
        edges.emplace_back(static_cast<Vertex>(to_integer(r, t[0])), static_cast<Vertex>(to_integer(r, t[1])));
    }
    if (r.next())
        r.fail("trailing content after " + std::to_string(m) + " edges");
    return Graph(static_cast<int>(n), edges, name);
}

Graph read_graph_file(const std::string& path)
{
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g)
{
    if (!g.name().empty())
        out << "# " << g.name() << '\n';
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

Profile read_profile(std::istream& in)
{
    LineReader r(in);
    std::map<Vertex, Rational> w;
    while (r.next()) {
        auto t = tokens(r.line);
        if (t.size() != 2)
            r.fail("profile line must be 'vertex weight'");
        Vertex v = static_cast<Vertex>(to_integer(r, t[0]));
        Rational q;
        try {
            q = parse_rational(t[1]);
        }
        catch (const Error& e) {
            r.fail(e.what());
        }
        if (!w.emplace(v, q).second)
            r.fail("vertex " + t[0] + " listed twice");
    }
    return Profile(w);
}

void write_profile(std::ostream& out, const Profile& pi)
{
    for (const auto& [v, q] : pi.weights())
        out << v << ' ' << to_string(q) << '\n';
}

VertexFunction read_function(std::istream& in, int n)
{
    LineReader r(in);
    std::vector<std::optional<Rational>> values(n);
    std::optional<Rational> fallback;
    auto parse = [&](const std::string& s) {
        try {
            return parse_rational(s);
        }
        catch (const Error& e) {
            r.fail(e.what());
        }
    };
    while (r.next()) {
        auto t = tokens(r.line);
        if (t.size() != 2)
            r.fail("function line must be 'vertex value' or 'default value'");
        if (t[0] == "default") {
            fallback = parse(t[1]);
            continue;
        }
        auto v = to_integer(r, t[0]);
        if (v < 0 || v >= n)
            r.fail("vertex " + t[0] + " out of range");
        if (values[v])
            r.fail("vertex " + t[0] + " listed twice");
        values[v] = parse(t[1]);
    }
    VertexFunction f(n);
    for (int v = 0; v < n; ++v) {
        if (!values[v] && !fallback)
            throw Error(ErrorKind::ParseError, "function has no value for vertex " + std::to_string(v));
        f[v] = values[v] ? *values[v] : *fallback;
    }
    return f;
}

std::vector<std::vector<int>> read_labels(std::istream& in, int n)
{
    LineReader r(in);
    std::vector<std::optional<std::vector<int>>> labels(n);
    while (r.next()) {
        auto colon = r.line.find(':');
        if (colon == std::string::npos)
            r.fail("label line must be 'vertex: i1,i2,...'");
        auto v = to_integer(r, r.line.substr(0, colon));
        if (v < 0 || v >= n)
            r.fail("vertex out of range");
        if (labels[v])
            r.fail("vertex listed twice");
        std::vector<int> items;
        std::string rest = r.line.substr(colon + 1);
        for (char& c : rest)
            if (c == ',')
                c = ' ';
        for (const auto& t : tokens(rest))
            items.push_back(static_cast<int>(to_integer(r, t)));
        std::sort(items.begin(), items.end());
        if (std::adjacent_find(items.begin(), items.end()) != items.end())
            r.fail("repeated label element");
        labels[v] = items;
    }
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < n; ++v) {
        if (!labels[v])
            throw Error(ErrorKind::LabelArity, "no label for vertex " + std::to_string(v));
        out[v] = *labels[v];
    }
    return out;
}

void write_labels(std::ostream& out, const std::vector<std::vector<int>>& labels)
{
    for (std::size_t v = 0; v < labels.size(); ++v) {
        out << v << ':';
        for (std::size_t i = 0; i < labels[v].size(); ++i)
            out << (i ? "," : " ") << labels[v][i];
        out << '\n';
    }
}

BenzenoidSpec read_benzenoid_spec(std::istream& in)
{
    LineReader r(in);
    BenzenoidSpec spec;
    while (r.next()) {
        auto t = tokens(r.line);
        if (t.size() != 2)
            r.fail("hexagon line must be 'a b'");
        spec.hexagons.emplace_back(static_cast<int>(to_integer(r, t[0])), static_cast<int>(to_integer(r, t[1])));
    }
    if (spec.hexagons.empty())
        throw Error(ErrorKind::ParseError, "no hexagons listed");
    return spec;
}

} // namespace medgraph
