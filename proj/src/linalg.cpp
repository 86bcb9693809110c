#include "weylcones/linalg.hpp"

#include <vector>

namespace weylcones {

namespace {

// Row-echelon reduction in place; returns the pivot columns.
std::vector<int> eliminate(RatMatrix& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Rational inv_pivot = m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= inv_pivot;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
    RatMatrix work = m;
    return static_cast<int>(eliminate(work).size());
}

RatMatrix kernel_basis(const RatMatrix& m) {
    const Eigen::Index cols = m.cols();
    RatMatrix work = m;
    std::vector<int> pivots = eliminate(work);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    RatMatrix basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index out = 0;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        for (Eigen::Index i = 0; i < cols; ++i) basis(i, out) = 0;
        basis(free_col, out) = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            basis(pivots[pr], out) = -work(static_cast<Eigen::Index>(pr), free_col);
        ++out;
    }
    return basis;
}

int intersection_dim(const RatMatrix& u, const RatMatrix& v) {
    if (u.rows() != v.rows())
        throw std::invalid_argument("intersection_dim: ambient dimensions differ");
    RatMatrix stacked(u.rows(), u.cols() + v.cols());
    stacked << u, v;
    return static_cast<int>(u.cols() + v.cols()) - rank(stacked);
}

bool solve_linear(const RatMatrix& m, const RatVector& b, RatVector& x) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    std::vector<int> pivots = eliminate(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(m.cols()))
        return false;  // inconsistent
    x = RatVector::Zero(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
    return true;
}

namespace {

// --- exact phase-1 simplex ------------------------------------------------

struct Tableau {
    std::vector<Rational> a;  // (rows+1) x cols, cost row last, rhs last col
    int rows = 0, cols = 0;
    Rational piv, tmp;  // pivot scratch, reused to avoid temporaries
    Rational ratio, best_ratio;
    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    /// Reuses allocated entries instead of reconstructing them, so the
    /// per-call cost is value resets rather than heap traffic.
    void reset(int nrows, int ncols) {
        rows = nrows;
        cols = ncols;
        const std::size_t needed = static_cast<std::size_t>(nrows + 1) * ncols;
        if (a.size() < needed) a.resize(needed);
        for (std::size_t i = 0; i < needed; ++i) a[i] = 0;
    }
};

thread_local Tableau tl_tab;
thread_local std::vector<int> tl_basis;

/**
 * Phase 1 for {x >= 0 : A x = b}, b >= 0 componentwise. Rows whose
 * initial basis column is -1 get an implicit artificial variable; the
 * artificial columns are never materialized since Bland's rule never
 * re-enters them. Returns true iff the artificial objective reaches zero.
 * The tableau in tl_tab must be prefilled with A|b by the caller.
 */
bool phase1(int nrows, int ncols, std::vector<int>& basis) {
    Tableau& t = tl_tab;
    const int cost = nrows;
    const int rhs = ncols - 1;
    for (int j = 0; j < ncols; ++j) t.at(cost, j) = 0;
    for (int i = 0; i < nrows; ++i) {
        if (basis[i] >= 0) continue;  // a real column is basic, cost 0
        basis[i] = ncols + i;         // implicit artificial id, never re-enters
        for (int j = 0; j < ncols; ++j) t.at(cost, j) -= t.at(i, j);
    }

    while (true) {
        int enter = -1;
        for (int j = 0; j < rhs; ++j)
            if (t.at(cost, j) < 0) { enter = j; break; }  // Bland: lowest index
        if (enter < 0) break;
        int leave = -1;
        for (int i = 0; i < nrows; ++i) {
            if (t.at(i, enter) <= 0) continue;
            t.ratio = t.at(i, rhs);
            t.ratio /= t.at(i, enter);
            if (leave < 0 || t.ratio < t.best_ratio ||
                (t.ratio == t.best_ratio && basis[i] < basis[leave])) {
                leave = i;
                t.best_ratio = t.ratio;
            }
        }
        if (leave < 0) return false;  // unbounded cannot occur in phase 1
        t.piv = t.at(leave, enter);
        for (int j = 0; j < ncols; ++j) {
            if (t.at(leave, j) == 0) continue;
            t.at(leave, j) /= t.piv;
        }
        for (int i = 0; i <= nrows; ++i) {
            if (i == leave) continue;
            Rational& factor = t.at(i, enter);
            if (factor == 0) continue;
            for (int j = 0; j < ncols; ++j) {
                if (j == enter) continue;
                const Rational& src = t.at(leave, j);
                if (src == 0) continue;
                t.tmp = src;
                t.tmp *= factor;
                t.at(i, j) -= t.tmp;
            }
            factor = 0;
        }
        basis[leave] = enter;
    }
    return t.at(cost, rhs) == 0;  // objective is -(sum of artificials)
}

/**
 * Feasibility of eq*x = 0, le*x <= 0, lt*x <= -1 with x free, via the
 * standard split x = xp - xn and slack variables on inequality rows.
 */
bool simplex_feasible(const RatMatrix& eq, const RatMatrix& le, const RatMatrix& lt) {
    const int m = static_cast<int>(eq.cols() ? eq.cols() : (le.cols() ? le.cols() : lt.cols()));
    const int p = static_cast<int>(eq.rows());
    const int q = static_cast<int>(le.rows());
    const int r = static_cast<int>(lt.rows());
    const int nrows = p + q + r;
    const int ncols = 2 * m + q + r + 1;  // rhs last

    Tableau& t = tl_tab;
    t.reset(nrows, ncols);
    std::vector<int>& basis = tl_basis;
    basis.assign(nrows, -1);

    auto fill_vars = [&](int row, const RatMatrix& src, int i, bool negate) {
        for (int j = 0; j < m; ++j) {
            Rational v = src(i, j);
            if (negate) v = -v;
            t.at(row, m + j) = -v;
            t.at(row, j) = std::move(v);
        }
    };

    int row = 0;
    for (int i = 0; i < p; ++i, ++row)  // eq rows: artificial basis, rhs 0
        fill_vars(row, eq, i, false);
    for (int i = 0; i < q; ++i, ++row) {  // le rows: slack basis, rhs 0
        fill_vars(row, le, i, false);
        t.at(row, 2 * m + i) = 1;
        basis[row] = 2 * m + i;
    }
    for (int i = 0; i < r; ++i, ++row) {  // lt rows negated: -lt*x - s = 1
        fill_vars(row, lt, i, true);
        t.at(row, 2 * m + q + i) = -1;
        t.at(row, ncols - 1) = 1;
    }
    return phase1(nrows, ncols, basis);
}

/**
 * Strict feasibility of lt*x < 0 through the dual: the system is feasible
 * iff zero is not a nontrivial nonnegative combination of the rows, which
 * phase 1 decides on {lambda >= 0 : lt^T lambda = 0, sum lambda = 1}.
 * Fewer rows than the primal split whenever lt is taller than wide.
 */
bool gordan_strict_feasible(const RatMatrix& lt) {
    const int m = static_cast<int>(lt.cols());
    const int n = static_cast<int>(lt.rows());
    const int nrows = m + 1;
    const int ncols = n + 1;

    Tableau& t = tl_tab;
    t.reset(nrows, ncols);
    std::vector<int>& basis = tl_basis;
    basis.assign(nrows, -1);

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) t.at(i, j) = lt(j, i);
    // rows of lt^T lambda = 0 need sign normalization for phase 1 (b = 0,
    // nothing to flip) -- they are fine as-is
    for (int j = 0; j < n; ++j) t.at(m, j) = 1;
    t.at(m, ncols - 1) = 1;
    return !phase1(nrows, ncols, basis);
}

// Strict feasibility of lt*x < 0 in one variable: all coefficients share a
// strict sign.
bool strict_feasible_1d(const RatMatrix& lt) {
    bool pos_ok = true, neg_ok = true;
    for (Eigen::Index i = 0; i < lt.rows(); ++i) {
        if (lt(i, 0) >= 0) pos_ok = false;  // x > 0 needs coefficient < 0
        if (lt(i, 0) <= 0) neg_ok = false;
        if (!pos_ok && !neg_ok) return false;
    }
    return pos_ok || neg_ok;
}

/**
 * Strict feasibility of lt*x < 0 in the plane. By Gordan's theorem the
 * system is infeasible iff zero is a nontrivial nonnegative combination of
 * the row normals; in the plane every such combination reduces to a zero
 * row, an antiparallel pair, or a positively spanning triple.
 */
bool strict_feasible_2d(const RatMatrix& lt) {
    const Eigen::Index n = lt.rows();
    for (Eigen::Index i = 0; i < n; ++i)
        if (lt(i, 0) == 0 && lt(i, 1) == 0) return false;
    auto cross = [&](Eigen::Index i, Eigen::Index j) {
        return lt(i, 0) * lt(j, 1) - lt(i, 1) * lt(j, 0);
    };
    auto dot = [&](Eigen::Index i, Eigen::Index j) {
        return lt(i, 0) * lt(j, 0) + lt(i, 1) * lt(j, 1);
    };
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (cross(i, j) == 0 && dot(i, j) < 0) return false;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Rational det = cross(i, j);
            if (det == 0) continue;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                // solve a*r_i + b*r_j = -r_k
                const Rational a = (-lt(k, 0) * lt(j, 1) + lt(k, 1) * lt(j, 0)) / det;
                const Rational b = (-lt(i, 0) * lt(k, 1) + lt(i, 1) * lt(k, 0)) / det;
                if (a >= 0 && b >= 0) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool feasible(const RatMatrix& eq, const RatMatrix& le, const RatMatrix& lt) {
    if (lt.rows() == 0) return true;  // x = 0 satisfies the rest
    if (eq.rows() == 0 && le.rows() == 0) {
        if (lt.cols() == 1) return strict_feasible_1d(lt);
        if (lt.cols() == 2) return strict_feasible_2d(lt);
        if (lt.rows() > lt.cols() + 1) return gordan_strict_feasible(lt);
    }
    return simplex_feasible(eq, le, lt);
}

bool feasible_strict(const RatMatrix& eq, const RatMatrix& strict) {
    return feasible(eq, RatMatrix(0, strict.cols()), RatMatrix(-strict));
}

bool cone_has_nonzero_point(const RatMatrix& rows) {
    const Eigen::Index m = rows.cols();
    if (rows.rows() == 0) return m > 0;
    if (m == 1) {
        bool pos_ok = true, neg_ok = true;
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            if (rows(i, 0) > 0) pos_ok = false;
            if (rows(i, 0) < 0) neg_ok = false;
        }
        return pos_ok || neg_ok;
    }
    if (m == 2) {
        // A nonzero cone in the plane contains a rotated constraint normal,
        // unless no constraint is active at all.
        bool all_zero = true;
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            if (rows(i, 0) == 0 && rows(i, 1) == 0) continue;
            all_zero = false;
            for (int s = 0; s < 2; ++s) {
                const Rational cx = s ? -rows(i, 1) : rows(i, 1);
                const Rational cy = s ? rows(i, 0) : -rows(i, 0);
                bool ok = true;
                for (Eigen::Index j = 0; j < rows.rows(); ++j)
                    if (rows(j, 0) * cx + rows(j, 1) * cy > 0) { ok = false; break; }
                if (ok) return true;
            }
        }
        return all_zero;
    }
    RatMatrix none(0, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (int s = 0; s < 2; ++s) {
            RatMatrix dir(1, m);
            for (Eigen::Index j = 0; j < m; ++j) dir(0, j) = 0;
            dir(0, i) = s ? 1 : -1;  // dir * x < 0 forces x_i nonzero
            if (simplex_feasible(none, rows, dir)) return true;
        }
    }
    return false;
}

}  // namespace weylcones
