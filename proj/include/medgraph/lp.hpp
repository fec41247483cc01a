#pragma once

#include "medgraph/rational.hpp"

#include <vector>

namespace medgraph {

using RationalRow = std::vector<Rational>;
using DenseMatrix = std::vector<RationalRow>;

// Outcome of the phase-1 simplex on {A x = b, x >= 0}.
struct EqualityFeasibility {
    bool feasible = false;
    std::vector<Rational> x; // when feasible: A x = b, x >= 0
    std::vector<Rational> y; // when infeasible: yᵀA >= 0 and yᵀb < 0
    int pivots = 0;
};

// Exact phase-1 simplex with Bland's rule. Every returned vector is re-checked before returning.
EqualityFeasibility solve_equality_system(const DenseMatrix& a, const std::vector<Rational>& b);

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
    Feasibility status = Feasibility::Infeasible;
    std::vector<Rational> witness;     // π >= 0 with Mπ < 0 (Feasible)
    std::vector<Rational> certificate; // y >= 0, y != 0, yᵀM >= 0 (Infeasible)
    int pivots = 0;
};

// Decides whether some π >= 0 satisfies Mπ < 0 by solving Mπ <= -1, π >= 0.
FeasibilityResult lp_feasible_strict(const DenseMatrix& m);

// Checks a result against M by direct evaluation, without the simplex.
bool check_strict_result(const DenseMatrix& m, const FeasibilityResult& r);

} // namespace medgraph
