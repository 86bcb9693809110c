#ifndef WEYLCONES_CONE_HPP
#define WEYLCONES_CONE_HPP

#include <vector>

#include "weylcones/linalg.hpp"

namespace weylcones {

/**
 * Polyhedral cone in H-representation. Every row e of `eq` means
 * <e,v> = 0 and every row r of `le` means <r,v> <= 0, so the represented
 * set always contains the origin.
 */
struct ConeH {
    int ambient_dim = 0;
    RatMatrix eq;  // equality normals, one per row
    RatMatrix le;  // inequality normals, one per row

    static ConeH from_inequalities(const RatMatrix& rows);
    static ConeH whole_space(int dim);
};

/// Cone given as the positive hull of its generator columns.
struct GeneratorCone {
    int ambient_dim = 0;
    RatMatrix generators;  // one generator per column

    static GeneratorCone from_columns(const RatMatrix& cols);
};

/// dim(lin C): ambient kernel dimension after forcing the implicit
/// equalities detected by strict-feasibility probes.
int cone_dim(const ConeH& c);

bool is_zero_cone(const ConeH& c);

/// dim(C \cap -C), the kernel of all rows stacked.
int lineality_dim(const ConeH& c);

/// (pos{x_1..x_m})^o = {v : <x_i,v> <= 0 for all i}.
ConeH dual_of_generators(const GeneratorCone& g);

/// true iff C \cap span(u) != {0}; u is a column-basis of the subspace.
bool meets_subspace_nontrivially(const ConeH& c, const RatMatrix& u);

/// true iff relint(C) \cap span(u) is nonempty.
bool relint_meets_subspace(const ConeH& c, const RatMatrix& u);

bool contains(const ConeH& c, const RatVector& p);

/// Strict membership: all equality rows vanish, all inequality rows < 0.
bool contains_in_interior(const ConeH& c, const RatVector& p);

/// Row indices of `le` whose inequality is forced to equality on C.
std::vector<int> implicit_equality_rows(const ConeH& c);

/**
 * One face of a cone prepared for Euclidean projection: the parent cone's
 * rows split into the active set (equalities on the face) and the rest.
 * `dim` is the face dimension; the apex is represented with every row
 * active and dim 0.
 */
struct ProjectionFace {
    int dim = 0;
    std::vector<int> active;  // indices into the parent cone's rows
};

/**
 * Euclidean projection onto a pointed full-dimensional cone with a known,
 * complete face list. Built once per cone; project() classifies points by
 * the face whose relative interior receives the projection.
 */
class ProjectionOracle {
  public:
    /// `faces[i].active` indexes the inequality rows of `cone`; equality
    /// rows are implicitly active on every face (their KKT multipliers are
    /// free, so they never enter the sign test).
    ProjectionOracle(const ConeH& cone, const std::vector<ProjectionFace>& faces,
                     double tolerance = 1e-9);
    ProjectionOracle(const RatMatrix& cone_rows, const std::vector<ProjectionFace>& faces,
                     double tolerance = 1e-9);

    struct Result {
        std::vector<double> point;
        int face_dim = -1;   // -1 signals a tie / degenerate input
        int face_index = -1; // index into the face list passed at build time
    };

    Result project(const std::vector<double>& p) const;
    int ambient_dim() const { return dim_; }

  private:
    struct FaceData {
        int source_index = -1;
        int dim;
        int sign_constrained;            // leading rows of the active set
        std::vector<double> basis;       // orthonormal basis of lin F, column-major
        std::vector<double> active_rows; // row-major: active normals, then equality rows
        std::vector<double> normal_solver;  // (N N^T)^-1 N, row-major
        std::vector<int> inactive;
    };
    int dim_;
    double tol_;
    std::vector<std::vector<double>> rows_;   // unit-normalized inequality rows
    std::vector<FaceData> faces_;
    std::vector<std::vector<double>> rays_;   // unit directions of the 1-faces
};

/// Orthonormal float basis (columns) of the exact kernel of `rows`.
std::vector<std::vector<double>> float_kernel_basis(const RatMatrix& rows);

}  // namespace weylcones

#endif
