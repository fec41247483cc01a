#pragma once

#include "medgraph/benzenoid.hpp"
#include "medgraph/functions.hpp"
#include "medgraph/graph.hpp"

#include <fstream>
#include <iosfwd>
#include <string>
#include <vector>

namespace medgraph {

// "n m" then m lines "u v". Lines starting with '#' are comments; a leading "# name" names the graph.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Lines "vertex weight"; weights are integers or a/b.
Profile read_profile(std::istream& in);
void write_profile(std::ostream& out, const Profile& pi);

// Same syntax as profiles, signed values allowed; every vertex listed unless a "default <value>" line is present.
VertexFunction read_function(std::istream& in, int n);

// Lines "vertex: i1,i2,...".
std::vector<std::vector<int>> read_labels(std::istream& in, int n);
void write_labels(std::ostream& out, const std::vector<std::vector<int>>& labels);

// Lines "a b".
BenzenoidSpec read_benzenoid_spec(std::istream& in);

std::ifstream open_input(const std::string& path);

} // namespace medgraph
