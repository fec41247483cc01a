#include "support.hpp"

#include "medgraph/generators.hpp"
#include "medgraph/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace medgraph;

namespace {

Graph parse(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

std::string emit(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

ErrorKind parse_kind(const std::string& text)
{
    return kind_of([&] { parse(text); });
}

} // namespace

TEST_CASE("graph round trip")
{
    const std::string canonical = "# C4\n4 4\n0 1\n0 3\n1 2\n2 3\n";
    CHECK(emit(parse(canonical)) == canonical);
    CHECK(parse(canonical).name() == "C4");

    auto shuffled = parse("4 4\n# comment\n3 2\n\n1 0\n  2 1\n3 0\n");
    CHECK(emit(shuffled) == "4 4\n0 1\n0 3\n1 2\n2 3\n");

    std::mt19937_64 rng(61);
    for (const auto& g : {hypercube(4).graph, projective_incidence_graph(3).graph, random_k_tree(20, 2, rng),
             johnson_graph(5, 2).graph.with_name("J(5,2)")}) {
        auto text = emit(g);
        CHECK(emit(parse(text)) == text);
        CHECK(parse(text).distances() == g.distances());
    }
}

TEST_CASE("graph parse errors")
{
    CHECK(parse_kind("") == ErrorKind::ParseError);
    CHECK(parse_kind("3\n") == ErrorKind::ParseError);
    CHECK(parse_kind("3 2\n0 1\n") == ErrorKind::ParseError);
    CHECK(parse_kind("3 2\n0 1\n1 x\n") == ErrorKind::ParseError);
    CHECK(parse_kind("3 1\n0 1 2\n") == ErrorKind::ParseError);
    CHECK(parse_kind("2 1\n0 1\n1 0\n") == ErrorKind::ParseError);
    CHECK(parse_kind("0 0\n") == ErrorKind::ParseError);
    CHECK(parse_kind("3 2\n0 1\n1 3\n") == ErrorKind::VertexOutOfRange);
    CHECK(parse_kind("2 2\n0 1\n1 1\n") == ErrorKind::LoopEdge);
    CHECK(parse_kind("4 2\n0 1\n2 3\n") == ErrorKind::Disconnected);

    try {
        parse("3 2\n0 1\n# note\n1 y\n");
        FAIL("accepted bad edge");
    }
    catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("profiles")
{
    std::istringstream in("# weights\n0 3\n3 3/1\n5 2/4\n6 0\n");
    auto pi = read_profile(in);
    CHECK(pi.weight(0) == 3);
    CHECK(pi.weight(3) == 3);
    CHECK(pi.weight(5) == fraction(1, 2));
    CHECK(pi.support() == std::vector<Vertex>{0, 3, 5});
    std::ostringstream out;
    write_profile(out, pi);
    CHECK(out.str() == "0 3\n3 3\n5 1/2\n");

    for (const char* bad : {"0 -1\n", "0 1/0\n", "0 1\n0 2\n", "0\n", "x 1\n", "0 1.5\n"}) {
        std::istringstream b(bad);
        auto kind = kind_of([&] { read_profile(b); });
        CHECK((kind == ErrorKind::ParseError || kind == ErrorKind::InvalidProfile));
    }
    std::istringstream empty("# nothing\n");
    CHECK(read_profile(empty).empty());
}

TEST_CASE("functions")
{
    std::istringstream full("0 1\n1 -2\n2 1/3\n");
    auto f = read_function(full, 3);
    CHECK(f == VertexFunction{Rational(1), Rational(-2), fraction(1, 3)});

    std::istringstream fallback("default 7\n1 0\n");
    CHECK(read_function(fallback, 3) == VertexFunction{Rational(7), Rational(0), Rational(7)});

    std::istringstream partial("0 1\n");
    CHECK(kind_of([&] { read_function(partial, 2); }) == ErrorKind::ParseError);
    std::istringstream range("4 1\ndefault 0\n");
    CHECK(kind_of([&] { read_function(range, 2); }) == ErrorKind::ParseError);
}

TEST_CASE("labels")
{
    std::istringstream in("1: 2,0\n0:\n2: 5, 1\n");
    auto labels = read_labels(in, 3);
    CHECK(labels == std::vector<std::vector<int>>{{}, {0, 2}, {1, 5}});
    std::ostringstream out;
    write_labels(out, labels);
    CHECK(out.str() == "0:\n1: 0,2\n2: 1,5\n");
    std::istringstream again(out.str());
    CHECK(read_labels(again, 3) == labels);

    std::istringstream missing("0: 1\n");
    CHECK(kind_of([&] { read_labels(missing, 2); }) == ErrorKind::LabelArity);
    std::istringstream repeated("0: 1,1\n");
    CHECK(kind_of([&] { read_labels(repeated, 1); }) == ErrorKind::ParseError);
    std::istringstream no_colon("0 1\n");
    CHECK(kind_of([&] { read_labels(no_colon, 1); }) == ErrorKind::ParseError);
}

TEST_CASE("benzenoid specs")
{
    std::istringstream in("# bent\n0 0\n1 0\n2 -1\n");
    auto spec = read_benzenoid_spec(in);
    CHECK(spec.hexagons == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, -1}});
    std::istringstream empty("# none\n");
    CHECK(kind_of([&] { read_benzenoid_spec(empty); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { open_input("/nonexistent/graph.txt"); }) == ErrorKind::ParseError);
}
