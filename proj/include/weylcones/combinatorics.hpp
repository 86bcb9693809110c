#ifndef WEYLCONES_COMBINATORICS_HPP
#define WEYLCONES_COMBINATORICS_HPP

#include "weylcones/rational.hpp"

namespace weylcones {

/// Hyperplane family behind a tessellation. Generic is the baseline of
/// hyperplanes in general position (Schlaefli / Cover-Efron).
enum class Family { A, B, Generic };

enum class StirlingKind {
    FirstA,   // [n,k], coefficients of t(t+1)...(t+n-1)
    FirstB,   // B[n,k], coefficients of (t+1)(t+3)...(t+2n-1)
    SecondA,  // {n,k}, set partitions into k nonempty blocks
    SecondB,  // B{n,k} = sum_r C(n,r) {r,k} 2^(r-k)
};

const char* family_name(Family f);
Family family_from_string(const std::string& s);

Integer factorial(int n);
Integer binomial(int n, int k);

/// Exact Stirling numbers; out-of-range k yields 0 by convention.
Integer stirling(StirlingKind kind, int n, long k);

/// Number of cones in the tessellation: C(n,d), D^A(n,d) or D^B(n,d).
Integer region_count(Family family, int n, int d);

/// Total number of k-faces of the tessellation (families A and B only).
Integer total_face_count(Family family, int n, int d, int k);

/// Total over all k-faces of the number of cones containing each face.
Integer incidence_count(Family family, int n, int d, int k);

/// Pairs (chamber, k-face of it) of the reflection arrangement in R^n whose
/// face meets a d-dimensional subspace in general position nontrivially.
Integer chamber_face_intersection_count(Family family, int n, int k, int d);

// Expectations for the random cone drawn uniformly from the tessellation.
Rational expected_face_count(Family family, int n, int d, int k);
Rational expected_size_functional(Family family, int n, int d, int k, int j);
Rational expected_quermass(Family family, int n, int d, int j);
Rational expected_intrinsic_volume(Family family, int n, int d, int j);
Rational expected_angle_sum(Family family, int n, int d, int k);

// Expectations for the dual random cone (positive hull of successive
// differences, conditioned on being a proper cone).
Rational expected_dual_face_count(Family family, int n, int d, int k);
Rational expected_dual_quermass(Family family, int n, int d, int j);
Rational expected_dual_intrinsic_volume(Family family, int n, int d, int j);

/// Probability that the conditioned dual-cone construction is nondegenerate.
Rational acceptance_probability(Family family, int n, int d);

}  // namespace weylcones

#endif
