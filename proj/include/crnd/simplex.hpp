#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crnd/errors.hpp"
#include "crnd/rational.hpp"

namespace crnd {

// min c^T x  s.t.  A x >= b (sparse rows), 0 <= x <= 1.
struct LinearProgram {
    struct Row {
        std::vector<std::pair<int, Rat>> coeffs;  // (variable, coefficient)
        Rat rhs;
    };

    int num_vars = 0;
    std::vector<Rat> objective;
    std::vector<Row> rows;
};

struct VertexSolution {
    std::vector<Rat> x;
    Rat objective;
};

// Exact-rational two-phase primal simplex with Bland's rule (anti-cycling and
// a deterministic pivot order).  Standard form: per variable an upper-bound
// row x_j + u_j = 1; per constraint a surplus row a.x - s_i = b_i.  A basic
// feasible solution of that system is a vertex of the box-bounded polytope.
//
// Column order for Bland: x variables, upper slacks, surpluses, artificials.
// Throws InfeasibleError with the rows carrying nonzero phase-1 duals.
inline VertexSolution solve_vertex_lp(const LinearProgram& lp) {
    const int n = lp.num_vars;
    const int m = int(lp.rows.size());
    assert((int)lp.objective.size() == n);
    const int num_rows = n + m;
    const int col_u = n, col_s = n + n, col_art = n + n + m;

    // Dense tableau: columns [x | u | s | artificials], rhs kept separately.
    std::vector<std::vector<Rat>> tab(num_rows);
    std::vector<Rat> rhs(num_rows);
    std::vector<int> basis(num_rows, -1);
    std::vector<int> art_cols;

    for (int j = 0; j < n; ++j) {
        auto& row = tab[j];
        row.assign(col_art, Rat(0));
        row[j] = 1;
        row[col_u + j] = 1;
        rhs[j] = 1;
        basis[j] = col_u + j;
    }
    for (int i = 0; i < m; ++i) {
        auto& row = tab[n + i];
        row.assign(col_art, Rat(0));
        bool flip = lp.rows[i].rhs < 0;  // make rhs nonnegative
        for (const auto& [var, coef] : lp.rows[i].coeffs) {
            assert(var >= 0 && var < n);
            row[var] += flip ? -coef : coef;
        }
        row[col_s + i] = flip ? Rat(1) : Rat(-1);
        rhs[n + i] = flip ? -lp.rows[i].rhs : lp.rows[i].rhs;
        if (rhs[n + i] == 0) {
            // degenerate row: the surplus can start basic at value 0
            basis[n + i] = col_s + i;
            if (!flip) {
                for (auto& c : row) c = -c;
                rhs[n + i] = -rhs[n + i];
            }
        } else {
            basis[n + i] = -1;  // artificial assigned below
        }
    }
    for (int r = 0; r < num_rows; ++r) {
        if (basis[r] != -1) continue;
        int col = col_art + int(art_cols.size());
        art_cols.push_back(r);
        for (int r2 = 0; r2 < num_rows; ++r2) tab[r2].push_back(Rat(r2 == r ? 1 : 0));
        basis[r] = col;
    }
    const int num_cols = col_art + int(art_cols.size());

    // Reduced-cost row for a given objective vector over all columns.
    auto run_simplex = [&](std::vector<Rat> cost, bool exclude_artificials) -> void {
        std::vector<Rat> red(num_cols, Rat(0));
        for (int j = 0; j < num_cols; ++j) red[j] = cost[j];
        for (int r = 0; r < num_rows; ++r) {
            const Rat& cb = cost[basis[r]];
            if (cb == 0) continue;
            for (int j = 0; j < num_cols; ++j) red[j] -= cb * tab[r][j];
        }
        while (true) {
            int enter = -1;
            for (int j = 0; j < num_cols; ++j) {
                if (exclude_artificials && j >= col_art) continue;
                if (red[j] < 0) {
                    enter = j;
                    break;  // Bland: lowest index
                }
            }
            if (enter == -1) return;
            int leave_row = -1;
            Rat best_ratio = 0;
            for (int r = 0; r < num_rows; ++r) {
                if (tab[r][enter] <= 0) continue;
                Rat ratio = rhs[r] / tab[r][enter];
                if (leave_row == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave_row])) {
                    leave_row = r;
                    best_ratio = ratio;
                }
            }
            if (leave_row == -1) throw Error("simplex: unbounded (box bounds missing?)");
            // pivot
            Rat piv = tab[leave_row][enter];
            for (int j = 0; j < num_cols; ++j) tab[leave_row][j] /= piv;
            rhs[leave_row] /= piv;
            for (int r = 0; r < num_rows; ++r) {
                if (r == leave_row || tab[r][enter] == 0) continue;
                Rat factor = tab[r][enter];
                for (int j = 0; j < num_cols; ++j) tab[r][j] -= factor * tab[leave_row][j];
                rhs[r] -= factor * rhs[leave_row];
            }
            Rat factor = red[enter];
            for (int j = 0; j < num_cols; ++j) red[j] -= factor * tab[leave_row][j];
            basis[leave_row] = enter;
        }
    };

    if (!art_cols.empty()) {
        std::vector<Rat> cost1(num_cols, Rat(0));
        for (int a = 0; a < int(art_cols.size()); ++a) cost1[col_art + a] = 1;
        run_simplex(cost1, /*exclude_artificials=*/false);
        Rat infeas = 0;
        for (int r = 0; r < num_rows; ++r)
            if (basis[r] >= col_art) infeas += rhs[r];
        if (infeas > 0) {
            // Farkas-style certificate: constraint rows with nonzero phase-1
            // dual, read off the surplus columns' reduced costs.
            std::vector<Rat> red(num_cols, Rat(0));
            for (int j = 0; j < num_cols; ++j) red[j] = cost1[j];
            for (int r = 0; r < num_rows; ++r) {
                const Rat& cb = cost1[basis[r]];
                if (cb == 0) continue;
                for (int j = 0; j < num_cols; ++j) red[j] -= cb * tab[r][j];
            }
            std::vector<int> cert;
            for (int i = 0; i < m; ++i)
                if (red[col_s + i] != 0) cert.push_back(i);
            throw InfeasibleError("LP infeasible", std::move(cert));
        }
        // Drive leftover zero-valued artificials out of the basis.
        for (int r = 0; r < num_rows; ++r) {
            if (basis[r] < col_art) continue;
            int piv_col = -1;
            for (int j = 0; j < col_art; ++j)
                if (tab[r][j] != 0) {
                    piv_col = j;
                    break;
                }
            if (piv_col == -1) continue;  // redundant row, harmless to keep
            Rat piv = tab[r][piv_col];
            for (int j = 0; j < num_cols; ++j) tab[r][j] /= piv;
            rhs[r] /= piv;
            for (int r2 = 0; r2 < num_rows; ++r2) {
                if (r2 == r || tab[r2][piv_col] == 0) continue;
                Rat factor = tab[r2][piv_col];
                for (int j = 0; j < num_cols; ++j) tab[r2][j] -= factor * tab[r][j];
                rhs[r2] -= factor * rhs[r];
            }
            basis[r] = piv_col;
        }
    }

    std::vector<Rat> cost2(num_cols, Rat(0));
    for (int j = 0; j < n; ++j) cost2[j] = lp.objective[j];
    run_simplex(cost2, /*exclude_artificials=*/true);

    VertexSolution out;
    out.x.assign(n, Rat(0));
    for (int r = 0; r < num_rows; ++r)
        if (basis[r] < n) out.x[basis[r]] = rhs[r];
    out.objective = 0;
    for (int j = 0; j < n; ++j) out.objective += lp.objective[j] * out.x[j];
    return out;
}

// Exact rank of the tight constraints at x: tight problem rows plus tight box
// bounds.  Equals num_vars exactly when x is a vertex of the polytope.
inline int tight_system_rank(const LinearProgram& lp, const std::vector<Rat>& x) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : lp.rows) {
        Rat lhs = 0;
        for (const auto& [var, coef] : row.coeffs) lhs += coef * x[var];
        if (lhs == row.rhs) {
            std::vector<Rat> dense(lp.num_vars, Rat(0));
            for (const auto& [var, coef] : row.coeffs) dense[var] += coef;
            rows.push_back(std::move(dense));
        }
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        if (x[j] == 0 || x[j] == 1) {
            std::vector<Rat> dense(lp.num_vars, Rat(0));
            dense[j] = 1;
            rows.push_back(std::move(dense));
        }
    }
    int rank = 0;
    for (int col = 0; col < lp.num_vars && rank < (int)rows.size(); ++col) {
        int pivot = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < (int)rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / rows[rank][col];
            for (int c = col; c < lp.num_vars; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace crnd
