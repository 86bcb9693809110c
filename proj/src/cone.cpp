#include "weylcones/cone.hpp"

#include <cmath>
#include <stdexcept>

namespace weylcones {

ConeH ConeH::from_inequalities(const RatMatrix& rows) {
    ConeH c;
    c.ambient_dim = static_cast<int>(rows.cols());
    c.eq = RatMatrix(0, rows.cols());
    c.le = rows;
    return c;
}

ConeH ConeH::whole_space(int dim) {
    ConeH c;
    c.ambient_dim = dim;
    c.eq = RatMatrix(0, dim);
    c.le = RatMatrix(0, dim);
    return c;
}

GeneratorCone GeneratorCone::from_columns(const RatMatrix& cols) {
    GeneratorCone g;
    g.ambient_dim = static_cast<int>(cols.rows());
    g.generators = cols;
    return g;
}

std::vector<int> implicit_equality_rows(const ConeH& c) {
    std::vector<int> result;
    for (Eigen::Index i = 0; i < c.le.rows(); ++i) {
        RatMatrix lt = c.le.row(i);
        if (!feasible(c.eq, c.le, lt)) result.push_back(static_cast<int>(i));
    }
    return result;
}

int cone_dim(const ConeH& c) {
    std::vector<int> forced = implicit_equality_rows(c);
    RatMatrix stacked(c.eq.rows() + static_cast<Eigen::Index>(forced.size()), c.ambient_dim);
    stacked.topRows(c.eq.rows()) = c.eq;
    for (std::size_t i = 0; i < forced.size(); ++i)
        stacked.row(c.eq.rows() + static_cast<Eigen::Index>(i)) = c.le.row(forced[i]);
    return c.ambient_dim - rank(stacked);
}

bool is_zero_cone(const ConeH& c) { return cone_dim(c) == 0; }

int lineality_dim(const ConeH& c) {
    RatMatrix stacked(c.eq.rows() + c.le.rows(), c.ambient_dim);
    stacked << c.eq, c.le;
    return c.ambient_dim - rank(stacked);
}

ConeH dual_of_generators(const GeneratorCone& g) {
    ConeH c;
    c.ambient_dim = g.ambient_dim;
    c.eq = RatMatrix(0, g.ambient_dim);
    c.le = g.generators.transpose();
    return c;
}

bool meets_subspace_nontrivially(const ConeH& c, const RatMatrix& u) {
    if (u.rows() != c.ambient_dim)
        throw std::invalid_argument("meets_subspace_nontrivially: dimension mismatch");
    if (u.cols() == 0) return false;
    RatMatrix le_u = c.le * u;
    if (c.eq.rows() == 0) return cone_has_nonzero_point(le_u);
    RatMatrix kernel = kernel_basis(RatMatrix(c.eq * u));
    if (kernel.cols() == 0) return false;
    return cone_has_nonzero_point(RatMatrix(le_u * kernel));
}

bool relint_meets_subspace(const ConeH& c, const RatMatrix& u) {
    if (u.rows() != c.ambient_dim)
        throw std::invalid_argument("relint_meets_subspace: dimension mismatch");
    std::vector<int> forced = implicit_equality_rows(c);
    std::vector<bool> is_forced(c.le.rows(), false);
    for (int i : forced) is_forced[i] = true;

    RatMatrix eq(c.eq.rows() + static_cast<Eigen::Index>(forced.size()), u.cols());
    eq.topRows(c.eq.rows()) = c.eq * u;
    for (std::size_t i = 0; i < forced.size(); ++i)
        eq.row(c.eq.rows() + static_cast<Eigen::Index>(i)) = c.le.row(forced[i]) * u;

    RatMatrix lt(c.le.rows() - static_cast<Eigen::Index>(forced.size()), u.cols());
    Eigen::Index out = 0;
    for (Eigen::Index i = 0; i < c.le.rows(); ++i)
        if (!is_forced[i]) lt.row(out++) = c.le.row(i) * u;

    return feasible(eq, RatMatrix(0, u.cols()), lt);
}

bool contains(const ConeH& c, const RatVector& p) {
    if (p.size() != c.ambient_dim) throw std::invalid_argument("contains: dimension mismatch");
    for (Eigen::Index i = 0; i < c.eq.rows(); ++i)
        if (c.eq.row(i).dot(p.transpose()) != 0) return false;
    for (Eigen::Index i = 0; i < c.le.rows(); ++i)
        if (c.le.row(i).dot(p.transpose()) > 0) return false;
    return true;
}

bool contains_in_interior(const ConeH& c, const RatVector& p) {
    if (p.size() != c.ambient_dim)
        throw std::invalid_argument("contains_in_interior: dimension mismatch");
    for (Eigen::Index i = 0; i < c.eq.rows(); ++i)
        if (c.eq.row(i).dot(p.transpose()) != 0) return false;
    for (Eigen::Index i = 0; i < c.le.rows(); ++i)
        if (c.le.row(i).dot(p.transpose()) >= 0) return false;
    return true;
}

// --- projection -------------------------------------------------------------

namespace {

std::vector<double> to_unit(const std::vector<double>& v) {
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = norm > 0 ? v[i] / norm : 0.0;
    return out;
}

std::vector<double> row_to_double(const RatMatrix& m, Eigen::Index i) {
    std::vector<double> out(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(j)] = to_double(m(i, j));
    return out;
}

// Modified Gram-Schmidt with one re-orthogonalization pass.
void orthonormalize(std::vector<double>& cols, int dim, int count) {
    for (int c = 0; c < count; ++c) {
        double* v = cols.data() + static_cast<std::size_t>(c) * dim;
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < c; ++prev) {
                const double* u = cols.data() + static_cast<std::size_t>(prev) * dim;
                double proj = 0;
                for (int i = 0; i < dim; ++i) proj += v[i] * u[i];
                for (int i = 0; i < dim; ++i) v[i] -= proj * u[i];
            }
        }
        double norm = 0;
        for (int i = 0; i < dim; ++i) norm += v[i] * v[i];
        norm = std::sqrt(norm);
        if (norm == 0) throw std::runtime_error("projection: degenerate face basis");
        for (int i = 0; i < dim; ++i) v[i] /= norm;
    }
}

// Invert the small SPD matrix N*N^T by Gauss-Jordan; returns (N N^T)^-1 N.
std::vector<double> normal_equation_solver(const std::vector<double>& n_rows, int rows, int dim) {
    std::vector<double> gram(static_cast<std::size_t>(rows) * rows, 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            double s = 0;
            for (int k = 0; k < dim; ++k)
                s += n_rows[static_cast<std::size_t>(i) * dim + k] *
                     n_rows[static_cast<std::size_t>(j) * dim + k];
            gram[static_cast<std::size_t>(i) * rows + j] = s;
        }
    std::vector<double> inv(static_cast<std::size_t>(rows) * rows, 0.0);
    for (int i = 0; i < rows; ++i) inv[static_cast<std::size_t>(i) * rows + i] = 1.0;
    for (int c = 0; c < rows; ++c) {
        int p = c;
        for (int i = c + 1; i < rows; ++i)
            if (std::fabs(gram[static_cast<std::size_t>(i) * rows + c]) >
                std::fabs(gram[static_cast<std::size_t>(p) * rows + c]))
                p = i;
        if (gram[static_cast<std::size_t>(p) * rows + c] == 0)
            throw std::runtime_error("projection: singular active set");
        for (int j = 0; j < rows; ++j) {
            std::swap(gram[static_cast<std::size_t>(p) * rows + j],
                      gram[static_cast<std::size_t>(c) * rows + j]);
            std::swap(inv[static_cast<std::size_t>(p) * rows + j],
                      inv[static_cast<std::size_t>(c) * rows + j]);
        }
        const double piv = gram[static_cast<std::size_t>(c) * rows + c];
        for (int j = 0; j < rows; ++j) {
            gram[static_cast<std::size_t>(c) * rows + j] /= piv;
            inv[static_cast<std::size_t>(c) * rows + j] /= piv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == c) continue;
            const double f = gram[static_cast<std::size_t>(i) * rows + c];
            if (f == 0) continue;
            for (int j = 0; j < rows; ++j) {
                gram[static_cast<std::size_t>(i) * rows + j] -=
                    f * gram[static_cast<std::size_t>(c) * rows + j];
                inv[static_cast<std::size_t>(i) * rows + j] -=
                    f * inv[static_cast<std::size_t>(c) * rows + j];
            }
        }
    }
    std::vector<double> solver(static_cast<std::size_t>(rows) * dim, 0.0);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < dim; ++k) {
            double s = 0;
            for (int j = 0; j < rows; ++j)
                s += inv[static_cast<std::size_t>(i) * rows + j] *
                     n_rows[static_cast<std::size_t>(j) * dim + k];
            solver[static_cast<std::size_t>(i) * dim + k] = s;
        }
    return solver;
}

}  // namespace

std::vector<std::vector<double>> float_kernel_basis(const RatMatrix& rows) {
    RatMatrix kernel = kernel_basis(rows);
    const int dim = static_cast<int>(kernel.rows());
    const int count = static_cast<int>(kernel.cols());
    std::vector<double> cols(static_cast<std::size_t>(dim) * count);
    for (int c = 0; c < count; ++c)
        for (int r = 0; r < dim; ++r)
            cols[static_cast<std::size_t>(c) * dim + r] = to_double(kernel(r, c));
    orthonormalize(cols, dim, count);
    std::vector<std::vector<double>> out(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c)
        out[static_cast<std::size_t>(c)] =
            std::vector<double>(cols.begin() + static_cast<std::ptrdiff_t>(c) * dim,
                                cols.begin() + static_cast<std::ptrdiff_t>(c + 1) * dim);
    return out;
}

ProjectionOracle::ProjectionOracle(const RatMatrix& cone_rows,
                                   const std::vector<ProjectionFace>& faces, double tolerance)
    : ProjectionOracle(ConeH::from_inequalities(cone_rows), faces, tolerance) {}

ProjectionOracle::ProjectionOracle(const ConeH& cone, const std::vector<ProjectionFace>& faces,
                                   double tolerance)
    : dim_(cone.ambient_dim), tol_(tolerance) {
    const RatMatrix& cone_rows = cone.le;
    const int neq = static_cast<int>(cone.eq.rows());
    for (Eigen::Index i = 0; i < cone_rows.rows(); ++i)
        rows_.push_back(to_unit(row_to_double(cone_rows, i)));

    for (const auto& face : faces) {
        RatMatrix active(static_cast<Eigen::Index>(face.active.size()) + neq, dim_);
        for (std::size_t i = 0; i < face.active.size(); ++i)
            active.row(static_cast<Eigen::Index>(i)) = cone_rows.row(face.active[i]);
        active.bottomRows(neq) = cone.eq;
        RatMatrix kernel = kernel_basis(active);
        if (static_cast<int>(kernel.cols()) != face.dim)
            throw std::invalid_argument("projection: face dimension does not match active set");

        if (face.dim == 1) {
            // orient the ray into the cone, exactly
            RatVector dir = kernel.col(0);
            bool flip = false;
            for (Eigen::Index i = 0; i < cone_rows.rows(); ++i) {
                const Rational v = cone_rows.row(i).dot(dir.transpose());
                if (v != 0) { flip = v > 0; break; }
            }
            if (flip) dir = -dir;
            for (Eigen::Index i = 0; i < cone_rows.rows(); ++i)
                if (cone_rows.row(i).dot(dir.transpose()) > 0)
                    throw std::invalid_argument("projection: listed 1-face is not a face");
            std::vector<double> ray(static_cast<std::size_t>(dim_));
            for (int i = 0; i < dim_; ++i) ray[static_cast<std::size_t>(i)] = to_double(dir(i));
            rays_.push_back(to_unit(ray));
        }
        if (face.dim == 0) continue;  // the apex is classified via the rays

        FaceData data;
        data.source_index = static_cast<int>(&face - faces.data());
        data.dim = face.dim;
        data.sign_constrained = static_cast<int>(face.active.size());
        data.basis.resize(static_cast<std::size_t>(dim_) * face.dim);
        for (int c = 0; c < face.dim; ++c)
            for (int r = 0; r < dim_; ++r)
                data.basis[static_cast<std::size_t>(c) * dim_ + r] = to_double(kernel(r, c));
        orthonormalize(data.basis, dim_, face.dim);

        const int na = static_cast<int>(face.active.size()) + neq;
        data.active_rows.resize(static_cast<std::size_t>(na) * dim_);
        for (int i = 0; i < na; ++i) {
            std::vector<double> row =
                i < data.sign_constrained
                    ? to_unit(row_to_double(cone_rows, face.active[i]))
                    : to_unit(row_to_double(cone.eq, i - data.sign_constrained));
            for (int j = 0; j < dim_; ++j)
                data.active_rows[static_cast<std::size_t>(i) * dim_ + j] = row[j];
        }
        if (na > 0) data.normal_solver = normal_equation_solver(data.active_rows, na, dim_);

        std::vector<bool> is_active(cone_rows.rows(), false);
        for (int i : face.active) is_active[i] = true;
        for (Eigen::Index i = 0; i < cone_rows.rows(); ++i)
            if (!is_active[i]) data.inactive.push_back(static_cast<int>(i));
        faces_.push_back(std::move(data));
    }
}

ProjectionOracle::Result ProjectionOracle::project(const std::vector<double>& p) const {
    Result best;
    int passes = 0;
    std::vector<double> q(static_cast<std::size_t>(dim_));
    std::vector<double> coeffs(static_cast<std::size_t>(dim_));
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const FaceData& face = faces_[f];
        // q = B B^T p
        std::fill(q.begin(), q.end(), 0.0);
        for (int c = 0; c < face.dim; ++c) {
            const double* b = face.basis.data() + static_cast<std::size_t>(c) * dim_;
            double dot = 0;
            for (int i = 0; i < dim_; ++i) dot += b[i] * p[static_cast<std::size_t>(i)];
            for (int i = 0; i < dim_; ++i) q[static_cast<std::size_t>(i)] += dot * b[i];
        }
        bool ok = true;
        for (int idx : face.inactive) {
            const auto& row = rows_[static_cast<std::size_t>(idx)];
            double v = 0;
            for (int i = 0; i < dim_; ++i) v += row[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(i)];
            if (v >= -tol_) { ok = false; break; }
        }
        if (!ok) continue;
        for (int i = 0; i < face.sign_constrained && ok; ++i) {
            double lam = 0;
            for (int k = 0; k < dim_; ++k)
                lam += face.normal_solver[static_cast<std::size_t>(i) * dim_ + k] *
                       (p[static_cast<std::size_t>(k)] - q[static_cast<std::size_t>(k)]);
            if (lam <= tol_) ok = false;
        }
        if (!ok) continue;
        ++passes;
        best.point = q;
        best.face_dim = face.dim;
        best.face_index = face.source_index;
    }
    // the apex: p lies in the polar cone iff it is nonpositive on every ray
    bool apex = !rays_.empty();
    for (const auto& ray : rays_) {
        double v = 0;
        for (int i = 0; i < dim_; ++i) v += ray[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
        if (v >= -tol_) { apex = false; break; }
    }
    if (apex) {
        ++passes;
        best.point.assign(static_cast<std::size_t>(dim_), 0.0);
        best.face_dim = 0;
        best.face_index = -1;
    }
    if (passes != 1) {
        best.face_dim = -1;
        best.face_index = -1;
        best.point.clear();
    }
    return best;
}

}  // namespace weylcones
