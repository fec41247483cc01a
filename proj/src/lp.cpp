#include "medgraph/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace medgraph {

namespace {

bool satisfies_equalities(const DenseMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x)
{
    for (const auto& v : x)
        if (v < 0)
            return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            lhs += a[i][j] * x[j];
        if (lhs != b[i])
            return false;
    }
    return true;
}

bool is_farkas(const DenseMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y, std::size_t cols)
{
    Rational yb = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        yb += y[i] * b[i];
    if (yb >= 0)
        return false;
    for (std::size_t j = 0; j < cols; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += y[i] * a[i][j];
        if (s < 0)
            return false;
    }
    return true;
}

} // namespace

EqualityFeasibility solve_equality_system(const DenseMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a.front().size() : 0;
    EqualityFeasibility out;
    if (m == 0) {
        out.feasible = true;
        out.x.assign(n, 0);
        return out;
    }

    // Tableau [A' | I | b'] with rows sign-flipped so that b' >= 0; the last row holds reduced costs.
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<int> sign(m, 1);
    DenseMatrix t(m + 1, RationalRow(width, 0));
    for (std::size_t i = 0; i < m; ++i) {
        sign[i] = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = sign[i] * a[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = sign[i] * b[i];
    }
    // Costs are 1 on artificials; reduced cost row = c - 1ᵀ(rows).
    for (std::size_t j = 0; j < width; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i)
            s += t[i][j];
        t[m][j] = (j >= n && j < rhs ? 1 : 0) - s;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // Phase 1 is bounded below by zero, so some row always qualifies.
        assert(leave < m);
        Rational pivot = t[leave][enter];
        for (auto& v : t[leave])
            v /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Rational factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
        ++out.pivots;
    }

    // Optimal value is -t[m][rhs].
    if (t[m][rhs] == 0) {
        out.feasible = true;
        out.x.assign(n, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n)
                out.x[basis[i]] = t[i][rhs];
        if (!satisfies_equalities(a, b, out.x))
            throw std::logic_error("simplex produced an invalid primal point");
    }
    else {
        // Duals of the flipped system: z_i = 1 - reduced cost of artificial i. Farkas vector y = -S z.
        out.y.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            Rational z = 1 - t[m][n + i];
            out.y[i] = -sign[i] * z;
        }
        if (!is_farkas(a, b, out.y, n))
            throw std::logic_error("simplex produced an invalid Farkas vector");
    }
    return out;
}

FeasibilityResult lp_feasible_strict(const DenseMatrix& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    // -Mπ - s = 1 with slack s >= 0.
    DenseMatrix a(rows, RationalRow(cols + rows, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = -m[i][j];
        a[i][cols + i] = -1;
    }
    std::vector<Rational> b(rows, 1);
    auto sol = solve_equality_system(a, b);

    FeasibilityResult r;
    r.pivots = sol.pivots;
    if (sol.feasible) {
        r.status = Feasibility::Feasible;
        r.witness.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(cols));
    }
    else {
        r.status = Feasibility::Infeasible;
        r.certificate.resize(rows);
        for (std::size_t i = 0; i < rows; ++i)
            r.certificate[i] = -sol.y[i];
    }
    return r;
}

bool check_strict_result(const DenseMatrix& m, const FeasibilityResult& r)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    if (r.status == Feasibility::Feasible) {
        if (r.witness.size() != cols)
            return false;
        for (const auto& v : r.witness)
            if (v < 0)
                return false;
        for (std::size_t i = 0; i < rows; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < cols; ++j)
                s += m[i][j] * r.witness[j];
            if (s >= 0)
                return false;
        }
        return true;
    }
    if (r.certificate.size() != rows)
        return false;
    bool nonzero = false;
    for (const auto& v : r.certificate) {
        if (v < 0)
            return false;
        nonzero = nonzero || v != 0;
    }
    if (!nonzero)
        return false;
    for (std::size_t j = 0; j < cols; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i)
            s += r.certificate[i] * m[i][j];
        if (s < 0)
            return false;
    }
    return true;
}

} // namespace medgraph
