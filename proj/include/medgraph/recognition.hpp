#pragma once

#include "medgraph/functions.hpp"
#include "medgraph/graph.hpp"
#include "medgraph/lp.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace medgraph {

struct RationalMatrix {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Vertex> rows; // I°(u,v)
    std::vector<Vertex> cols;
    DenseMatrix entries;
};

// Columns default to all vertices. Throws AdjacentPair or EmptyInterior.
RationalMatrix build_Duv(const Graph& g, Vertex u, Vertex v);
RationalMatrix build_Duv(const Graph& g, Vertex u, Vertex v, const VertexSet& columns);

struct PairVerdict {
    Vertex u = 0;
    Vertex v = 0;
    int d = 0;
    bool satisfies = false;     // every profile satisfies WC(u,v)
    bool empty_interior = false;
    std::vector<Vertex> rows;
    std::vector<Vertex> cols;
    FeasibilityResult result;
};

struct RecognizerOptions {
    bool restrict_to_J = false;
    int jobs = 1;
};

PairVerdict analyze_pair(const Graph& g, Vertex u, Vertex v, bool restrict_to_J = false);
bool pair_satisfies_WC_for_all_profiles(const Graph& g, Vertex u, Vertex v, bool restrict_to_J = false);

// Re-derives the matrix entries from distances and checks witness or certificate.
bool verify_feasibility_result(const Graph& g, const PairVerdict& pv);

// Profile on the columns carrying the LP witness.
Profile witness_profile(const PairVerdict& pv);

struct GpVerdict {
    int p = 1;
    bool connected = true;
    std::vector<PairVerdict> pairs; // every examined pair, canonical (u<v) order
    std::optional<PairVerdict> first_failure;
};

// With stop_early the scan ends at the first failing pair (single-threaded only).
GpVerdict check_Gp_connected_medians(const Graph& g, int p, const RecognizerOptions& opt = {}, bool stop_early = false);
bool has_Gp_connected_medians(const Graph& g, int p, const RecognizerOptions& opt = {});

struct PValueReport {
    int p = 1;
    std::vector<GpVerdict> levels; // one per scanned p, ascending
    std::optional<PairVerdict> witness_below; // failing pair at p-1, if p > 1
};

PValueReport compute_p(const Graph& g, const RecognizerOptions& opt = {});

// Integer profile with Med = {u, v}, built from an LP witness for a failing pair.
Profile disconnecting_profile(const Graph& g, Vertex u, Vertex v, const Profile& witness);

struct OracleCounterexample {
    Vertex u = 0;
    Vertex v = 0;
    Profile profile;
};

struct OracleOptions {
    int max_weight = 2;
    std::uint64_t budget = 50'000'000; // profiles per pair
};

// Throws BudgetExceeded when (maxWeight+1)^|J(u,v)| exceeds the budget for some pair.
std::optional<OracleCounterexample> brute_force_oracle(const Graph& g, int p, const OracleOptions& opt = {});

struct AlphaBetaCertificate {
    std::vector<Vertex> s;
    std::vector<Rational> eta;        // aligned with s, sums to 1
    std::map<Vertex, Vertex> companion;
};

std::optional<AlphaBetaCertificate> alpha_beta_certificate(const Graph& g, Vertex u, Vertex v, int interior_cap = 8);
bool check_alpha_beta_certificate(const Graph& g, Vertex u, Vertex v, const AlphaBetaCertificate& c);

} // namespace medgraph
