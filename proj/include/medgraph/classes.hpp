#pragma once

#include "medgraph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace medgraph {

struct ClassVerdict {
    std::string name;
    bool verdict = true;
    std::vector<Vertex> witness; // violating tuple when verdict is false
    std::string detail;
};

ClassVerdict is_meshed(const Graph& g);
ClassVerdict triangle_condition(const Graph& g);
ClassVerdict quadrangle_condition(const Graph& g);
ClassVerdict is_weakly_modular(const Graph& g);
ClassVerdict is_modular(const Graph& g);
ClassVerdict is_chordal(const Graph& g);
ClassVerdict is_bridged(const Graph& g);
ClassVerdict is_weakly_bridged(const Graph& g);
ClassVerdict has_convex_balls(const Graph& g);
ClassVerdict satisfies_INC(const Graph& g);
ClassVerdict satisfies_TPC(const Graph& g);
ClassVerdict satisfies_PC(const Graph& g);
ClassVerdict satisfies_ICm(const Graph& g, int m);
ClassVerdict is_thick(const Graph& g);
ClassVerdict is_bipartite(const Graph& g);

// Maximum cardinality search order (first visited first).
std::vector<Vertex> mcs_order(const Graph& g);

// Induced cycle of the given length (>= 4), vertices in cyclic order.
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int length);

// Throws WrongDistance unless d(u,v)=3 for (a) and d(u,v)=4 for (b), (c).
bool check_condition_a(const Graph& g, Vertex u, Vertex v);
bool check_condition_b(const Graph& g, Vertex u, Vertex v);
bool check_condition_c(const Graph& g, Vertex u, Vertex v);

// Interval condition: for d(u,v) >= 3 the neighbors of v in I(u,v) share a neighbor x != v in I(u,v).
ClassVerdict is_bipartite_absolute_retract(const Graph& g);

// Modular and every induced B_n, n in [4, max_n], extends to the hat graph.
ClassVerdict bn_extension_condition(const Graph& g, int max_n = 5);

struct AbsoluteRetractReport {
    ClassVerdict interval_condition;
    ClassVerdict extension_condition;
    bool disagree = false;
};

AbsoluteRetractReport absolute_retract_report(const Graph& g);

struct BetaWitness {
    Vertex u, v;
    Vertex s, t, w;
    Vertex a, b, c; // a, b, c have s, t, w as personal neighbor
};

struct AlphaWitness {
    int type = 1;
    Vertex u, v;
    std::vector<Vertex> interior; // s, t[, w] in the roles of the definition
    std::vector<Vertex> a;        // a (Type 1), a1 a2 (Type 2), a1 a2 a3 (Type 3)
    Vertex b = -1;                // -1 for Type 3
};

std::optional<BetaWitness> detect_beta_configuration(const Graph& g);
std::optional<AlphaWitness> detect_alpha_configuration(const Graph& g);

enum class EmbeddingTarget { Hypercube, HalvedCube, Johnson };

struct LabeledEmbedding {
    EmbeddingTarget target = EmbeddingTarget::Hypercube;
    int k = 0; // Johnson only
    std::vector<std::vector<int>> labels; // sorted, one per vertex
};

// Throws LabelArity when labels are missing or of the wrong size/parity.
ClassVerdict verify_labeled_embedding(const Graph& g, const LabeledEmbedding& e);

// Throw EmbeddingUnverified when the embedding fails verification.
ClassVerdict connected_medians_partial_johnson(const Graph& g, const LabeledEmbedding& e);
ClassVerdict connected_medians_partial_halved_cube(const Graph& g, const LabeledEmbedding& e);

} // namespace medgraph
