#pragma once

#include <optional>
#include <vector>

#include "bilip/poly.hpp"
#include "bilip/rational.hpp"

namespace bilip {

// Dense matrix of polynomials, row-major.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> entries;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int arity) : rows(r), cols(c), entries(r * c, Poly(arity)) {}

    Poly& at(int r, int c) { return entries[r * cols + c]; }
    const Poly& at(int r, int c) const { return entries[r * cols + c]; }

    PolyMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    PolyMatrix with_column(int col, const std::vector<Poly>& v) const;
};

// Exact determinant by fraction-free (Bareiss) elimination. Falls back to
// cofactor expansion only for the trivial sizes 0 and 1.
Poly determinant(const PolyMatrix& m);

// Cofactor expansion along the first row; used as an independent oracle.
Poly determinant_cofactor(const PolyMatrix& m);

// Dense rational matrix helpers.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), entries(r * c, Rational(0)) {}
    Rational& at(int r, int c) { return entries[r * cols + c]; }
    const Rational& at(int r, int c) const { return entries[r * cols + c]; }
};

int rank(QMatrix m);

// One solution of A x = b if the system is consistent.
std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b);

// Exact feasibility of { x >= 0 : A x = b } by a two-phase simplex with
// Bland's rule. On success returns a feasible point; on failure a Farkas
// certificate y with y^T A <= 0 (componentwise) and y^T b > 0.
struct LpResult {
    bool feasible = false;
    std::vector<Rational> point;   // size = #columns when feasible
    std::vector<Rational> farkas;  // size = #rows when infeasible
};
LpResult lp_feasible(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace bilip
