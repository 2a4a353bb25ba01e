#include "bilip/matrix.hpp"

#include <algorithm>

#include "bilip/errors.hpp"

namespace bilip {

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
    int arity = entries.empty() ? 0 : entries[0].arity();
    PolyMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()), arity);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

PolyMatrix PolyMatrix::with_column(int col, const std::vector<Poly>& v) const {
    if (static_cast<int>(v.size()) != rows) throw internal_error("with_column: size mismatch");
    PolyMatrix m = *this;
    for (int i = 0; i < rows; ++i) m.at(i, col) = v[i];
    return m;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw input_error("determinant: matrix is not square");
    int n = m.rows;
    int arity = m.entries.empty() ? 0 : m.entries[0].arity();
    if (n == 0) return Poly(arity, Rational(1));
    if (n == 1) return m.at(0, 0);

    PolyMatrix w = m;
    Poly prev(arity, Rational(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Poly(arity);  // zero column below: singular
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                Poly q(arity);
                if (!try_divide_exact(num, prev, q))
                    throw internal_error("bareiss: exact division failed");
                w.at(i, j) = q;
            }
            w.at(i, k) = Poly(arity);
        }
        prev = w.at(k, k);
    }
    Poly det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Poly determinant_cofactor(const PolyMatrix& m) {
    if (m.rows != m.cols) throw input_error("determinant: matrix is not square");
    int n = m.rows;
    int arity = m.entries.empty() ? 0 : m.entries[0].arity();
    if (n == 0) return Poly(arity, Rational(1));
    if (n == 1) return m.at(0, 0);
    Poly acc(arity);
    std::vector<int> rows_rest;
    for (int i = 1; i < n; ++i) rows_rest.push_back(i);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<int> cols_rest;
        for (int c = 0; c < n; ++c)
            if (c != j) cols_rest.push_back(c);
        Poly minor = determinant_cofactor(m.submatrix(rows_rest, cols_rest));
        Poly contrib = m.at(0, j) * minor;
        acc += (j % 2 == 0) ? contrib : -contrib;
    }
    return acc;
}

int rank(QMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b) {
    if (static_cast<int>(b.size()) != a.rows) throw internal_error("solve_linear: size mismatch");
    std::vector<int> pivot_col(a.rows, -1);
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows; ++i)
            if (!is_zero(a.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
            std::swap(b[pivot], b[r]);
        }
        Rational inv = Rational(1) / a.at(r, c);
        for (int j = c; j < a.cols; ++j) a.at(r, j) *= inv;
        b[r] *= inv;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || is_zero(a.at(i, c))) continue;
            Rational f = a.at(i, c);
            for (int j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
            b[i] -= f * b[r];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < a.rows; ++i)
        if (!is_zero(b[i])) return std::nullopt;
    std::vector<Rational> x(a.cols, Rational(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

LpResult lp_feasible(const QMatrix& a_in, const std::vector<Rational>& b_in) {
    int m = a_in.rows, n = a_in.cols;
    if (static_cast<int>(b_in.size()) != m) throw internal_error("lp_feasible: size mismatch");

    // Tableau [A | I | b] with b >= 0; phase-1 objective: minimize sum of
    // artificials. Bland's rule guarantees termination.
    QMatrix t(m, n + m + 1);
    for (int i = 0; i < m; ++i) {
        int s = sgn(b_in[i]) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t.at(i, j) = Rational(s) * a_in.at(i, j);
        t.at(i, n + i) = Rational(1);
        t.at(i, n + m) = Rational(s) * b_in[i];
    }
    std::vector<int> basis(m);
    std::vector<Rational> zrow(n + m, Rational(0));
    Rational obj(0);
    for (int i = 0; i < m; ++i) {
        basis[i] = n + i;
        for (int j = 0; j < n + m; ++j) zrow[j] -= t.at(i, j);
        obj += t.at(i, n + m);
    }
    for (int i = 0; i < m; ++i) zrow[n + i] += 1;  // cost 1 on artificials

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (sgn(zrow[j]) < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (sgn(t.at(i, enter)) <= 0) continue;
            Rational ratio = t.at(i, n + m) / t.at(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw internal_error("lp_feasible: unbounded phase-1 objective");
        // pivot
        Rational inv = Rational(1) / t.at(leave, enter);
        for (int j = 0; j <= n + m; ++j) t.at(leave, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || is_zero(t.at(i, enter))) continue;
            Rational f = t.at(i, enter);
            for (int j = 0; j <= n + m; ++j) t.at(i, j) -= f * t.at(leave, j);
        }
        Rational zf = zrow[enter];
        if (!is_zero(zf)) {
            for (int j = 0; j < n + m; ++j) zrow[j] -= zf * t.at(leave, j);
            obj -= zf * t.at(leave, n + m);
        }
        basis[leave] = enter;
    }

    LpResult res;
    if (is_zero(obj)) {
        res.feasible = true;
        res.point.assign(n, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) res.point[basis[i]] = t.at(i, n + m);
        return res;
    }
    res.feasible = false;
    // Dual values from the artificial columns: zrow[n+i] = 1 - y_i in the
    // row-scaled system; undo the row sign flips.
    res.farkas.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational y = Rational(1) - zrow[n + i];
        res.farkas[i] = sgn(b_in[i]) < 0 ? -y : y;
    }
    // The certificate is exact; fail loudly if it does not check out.
    Rational yb(0);
    for (int i = 0; i < m; ++i) yb += res.farkas[i] * b_in[i];
    if (sgn(yb) <= 0) throw internal_error("lp_feasible: invalid Farkas certificate (y.b)");
    for (int j = 0; j < n; ++j) {
        Rational ya(0);
        for (int i = 0; i < m; ++i) ya += res.farkas[i] * a_in.at(i, j);
        if (sgn(ya) > 0) throw internal_error("lp_feasible: invalid Farkas certificate (y.A)");
    }
    return res;
}

}  // namespace bilip
