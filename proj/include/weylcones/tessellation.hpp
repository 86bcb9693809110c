#ifndef WEYLCONES_TESSELLATION_HPP
#define WEYLCONES_TESSELLATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weylcones/combinatorics.hpp"
#include "weylcones/cone.hpp"
#include "weylcones/parallel.hpp"

namespace weylcones {

/// Combinatorial explosion guard for the enumeration routines.
struct Budget {
    int max_n_a = 8;
    int max_n_b = 6;
    long long max_candidates = 10'000'000;
    bool trust_general_position = false;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered tuple of exact points generating the arrangement.
struct PointConfig {
    Family family = Family::A;
    int d = 0;
    RatMatrix points;  // d rows, one column per point

    PointConfig() = default;
    PointConfig(Family family, int d, RatMatrix pts);
    int n() const { return static_cast<int>(points.cols()); }
    RatVector point(int i) const { return points.col(i); }
};

/// A cone candidate: permutation of the points plus signs (all +1 for A).
struct SignedOrdering {
    std::vector<int> perm;          // 0-based
    std::vector<std::int8_t> signs; // size n, entries +1/-1
};

/**
 * Canonical combinatorial representative of a tessellation face: ordered
 * groups of point indices (each sorted), per-point signs for family B, and
 * the indices forced to zero. Signs of zeroed points are normalized to +1.
 */
struct FaceRep {
    Family family = Family::A;
    std::vector<std::vector<int>> groups;
    std::vector<std::int8_t> signs;  // size n; identically +1 for family A
    std::vector<int> zeros;          // family B only, sorted

    int n() const;
    int dim(int d) const;  // d - (n - #groups)
    std::string key() const;
};

/// Number of tessellation cones containing the face: the product of the
/// group factorials, times z! 2^z over the zero block for family B.
Integer face_multiplicity(const FaceRep& rep);

/// Hyperplane normals of the arrangement, pairwise nonproportional.
RatMatrix build_arrangement(const PointConfig& cfg);

/// Chain-difference formulation of general position ((A1)/(B1)).
bool check_gp_chainwise(const PointConfig& cfg);

/// Lattice formulation ((A2)/(B2)): span of the points has dimension d and
/// is in general position to the reflection arrangement in R^n.
bool check_gp_lattice(const PointConfig& cfg);

/// true iff the d'-dimensional subspace spanned by the columns of u is in
/// general position with respect to the reflection arrangement in R^n.
bool subspace_in_general_position(Family family, int n, const RatMatrix& u);

/// Count of lattice subspaces of each dimension 0..n.
std::vector<Integer> lattice_subspace_counts(Family family, int n);

/// Inequality rows of the cone candidate (chain differences; family B also
/// gets the trailing row for the last point).
RatMatrix ordering_rows(const PointConfig& cfg, const SignedOrdering& ordering);

/// H-representation of the face named by a canonical representative.
ConeH face_cone(const PointConfig& cfg, const FaceRep& rep);

/// Strict-feasibility test: the representative names a face of dimension
/// exactly rep.dim(d), equivalently the cone it defines is nonzero.
bool is_nontrivial_face(const PointConfig& cfg, const FaceRep& rep);

std::vector<SignedOrdering> enumerate_cones(const PointConfig& cfg, const Budget& budget = {});

std::vector<FaceRep> enumerate_faces(const PointConfig& cfg, int k, const Budget& budget = {});

/// k-faces of the single cone named by `ordering`.
std::vector<FaceRep> cone_faces(const PointConfig& cfg, const SignedOrdering& ordering, int k);

/// Complete face data of one cone, prepared for the projection oracle.
struct ConeFaceSet {
    RatMatrix rows;
    std::vector<ProjectionFace> faces;  // dims 0..d
    std::vector<int> face_dims;
};
ConeFaceSet cone_projection_faces(const PointConfig& cfg, const SignedOrdering& ordering);

Integer incidence_sum_via_faces(const PointConfig& cfg, int k, const Budget& budget = {});
Integer incidence_sum_via_cones(const PointConfig& cfg, int k, const Budget& budget = {});

/// Brute-force count of (chamber, k-face) pairs of the reflection
/// arrangement in R^n whose face meets span(u) nontrivially.
Integer chamber_faces_meeting_subspace(Family family, int n, int k, const RatMatrix& u,
                                       const Budget& budget = {});

/// Cached enumeration over one configuration.
class Tessellation {
  public:
    explicit Tessellation(PointConfig cfg, Budget budget = {});

    const PointConfig& config() const { return cfg_; }
    const std::vector<SignedOrdering>& cones();
    const std::vector<FaceRep>& faces(int k);
    Integer incidence_via_faces(int k);
    Integer incidence_via_cones(int k);

  private:
    PointConfig cfg_;
    Budget budget_;
    bool cones_done_ = false;
    std::vector<SignedOrdering> cones_;
    std::map<int, std::vector<FaceRep>> faces_;
};

}  // namespace weylcones

#endif
