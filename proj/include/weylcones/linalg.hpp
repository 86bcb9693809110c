#ifndef WEYLCONES_LINALG_HPP
#define WEYLCONES_LINALG_HPP

#include "weylcones/matrix.hpp"

namespace weylcones {

/// Exact rank via rational Gaussian elimination.
int rank(const RatMatrix& m);

/**
 * Basis of the null space {x : m*x = 0}, returned as columns.
 * Returns a matrix with cols(m) rows and (cols(m) - rank(m)) columns;
 * zero columns means the kernel is trivial.
 */
RatMatrix kernel_basis(const RatMatrix& m);

/**
 * dim(span(u) \cap span(v)) for two column-bases of subspaces of the same
 * ambient dimension, computed as cols(u) + cols(v) - rank([u | v]).
 */
int intersection_dim(const RatMatrix& u, const RatMatrix& v);

/**
 * Exact feasibility of the homogeneous system
 *     eq * x = 0,  le * x <= 0,  lt * x < 0 (componentwise),
 * decided by a rational phase-1 simplex with Bland's rule. Strict rows are
 * normalized to "<= -1", which is equivalent by homogeneity. Any of the
 * three blocks may have zero rows; with no strict rows the system is
 * trivially satisfied by x = 0 and the function returns true.
 */
bool feasible(const RatMatrix& eq, const RatMatrix& le, const RatMatrix& lt);

/// true iff some x satisfies eq*x = 0 and strict*x > 0 componentwise.
bool feasible_strict(const RatMatrix& eq, const RatMatrix& strict);

/// true iff the cone {x : rows*x <= 0} contains a nonzero point.
bool cone_has_nonzero_point(const RatMatrix& rows);

/// Solves m*x = b exactly; returns false if the system is inconsistent.
bool solve_linear(const RatMatrix& m, const RatVector& b, RatVector& x);

}  // namespace weylcones

#endif
