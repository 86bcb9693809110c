#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "weylcones/cone.hpp"
#include "weylcones/rng.hpp"

using namespace weylcones;

namespace {

ConeH quadrant() { return ConeH::from_inequalities(rat_matrix({{-1, 0}, {0, -1}})); }

std::vector<ProjectionFace> quadrant_faces() {
    return {
        ProjectionFace{2, {}},      // the cone itself
        ProjectionFace{1, {0}},     // ray along e2
        ProjectionFace{1, {1}},     // ray along e1
        ProjectionFace{0, {0, 1}},  // the apex
    };
}

}  // namespace

TEST_CASE("cone dimension") {
    CHECK(cone_dim(quadrant()) == 2);
    ConeH line = ConeH::from_inequalities(rat_matrix({{1, 0}, {-1, 0}}));
    CHECK(cone_dim(line) == 1);
    ConeH zero = ConeH::from_inequalities(rat_matrix({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(cone_dim(zero) == 0);
    CHECK(is_zero_cone(zero));
    CHECK_FALSE(is_zero_cone(quadrant()));
}

TEST_CASE("lineality dimension") {
    CHECK(lineality_dim(quadrant()) == 0);
    ConeH half_plane = ConeH::from_inequalities(rat_matrix({{1, 0}}));
    CHECK(lineality_dim(half_plane) == 1);
    CHECK(lineality_dim(ConeH::whole_space(3)) == 3);
    CHECK(cone_dim(half_plane) >= lineality_dim(half_plane));
}

TEST_CASE("dual of generators") {
    GeneratorCone g = GeneratorCone::from_columns(rat_matrix({{1, 0}, {0, 1}}));
    ConeH dual = dual_of_generators(g);
    CHECK(dual.le.rows() == 2);
    CHECK(contains(dual, rat_vector({-1, -1})));
    CHECK_FALSE(contains(dual, rat_vector({1, 0})));

    GeneratorCone empty = GeneratorCone::from_columns(RatMatrix(2, 0));
    ConeH all = dual_of_generators(empty);
    CHECK(cone_dim(all) == 2);

    GeneratorCone ray = GeneratorCone::from_columns(rat_matrix({{1}, {0}}));
    ConeH half = dual_of_generators(ray);
    CHECK(cone_dim(half) == 2);
    CHECK(lineality_dim(half) == 1);
}

TEST_CASE("subspace intersection predicates") {
    ConeH q = quadrant();
    CHECK(meets_subspace_nontrivially(q, rat_matrix({{1}, {1}})));
    CHECK_FALSE(meets_subspace_nontrivially(q, rat_matrix({{1}, {-1}})));
    CHECK(meets_subspace_nontrivially(q, rat_matrix({{1}, {0}})));  // boundary ray counts

    CHECK(relint_meets_subspace(q, rat_matrix({{1}, {1}})));
    CHECK_FALSE(relint_meets_subspace(q, rat_matrix({{1}, {0}})));
    ConeH half_plane = ConeH::from_inequalities(rat_matrix({{1, 0}}));
    CHECK_FALSE(relint_meets_subspace(half_plane, rat_matrix({{0}, {1}})));
    CHECK(relint_meets_subspace(half_plane, rat_matrix({{1}, {1}})));

    // relint implies nontrivial intersection
    CounterRng rng(5, 0);
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix u(2, 1);
        u(0, 0) = Rational(static_cast<long long>(rng.next_below(9)) - 4, 3);
        u(1, 0) = Rational(static_cast<long long>(rng.next_below(9)) - 4, 2);
        if (u(0, 0) == 0 && u(1, 0) == 0) continue;
        if (relint_meets_subspace(q, u)) CHECK(meets_subspace_nontrivially(q, u));
    }
}

TEST_CASE("membership") {
    ConeH q = quadrant();
    CHECK(contains(q, rat_vector({1, 2})));
    CHECK_FALSE(contains(q, rat_vector({-1, 2})));
    CHECK(contains(q, rat_vector({0, 0})));
    CHECK_THROWS_AS(contains(q, rat_vector({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("projection onto the quadrant") {
    ConeH q = quadrant();
    ProjectionOracle oracle(q.le, quadrant_faces());

    auto interior = oracle.project({1.0, 1.0});
    CHECK(interior.face_dim == 2);
    CHECK(interior.point[0] == doctest::Approx(1.0));
    CHECK(interior.point[1] == doctest::Approx(1.0));

    auto onto_ray = oracle.project({1.0, -1.0});
    CHECK(onto_ray.face_dim == 1);
    CHECK(onto_ray.point[0] == doctest::Approx(1.0));
    CHECK(onto_ray.point[1] == doctest::Approx(0.0));

    auto apex = oracle.project({-1.0, -1.0});
    CHECK(apex.face_dim == 0);
    CHECK(apex.point[0] == doctest::Approx(0.0));
}

TEST_CASE("projection optimality certificate") {
    ConeH q = quadrant();
    ProjectionOracle oracle(q.le, quadrant_faces());
    CounterRng rng(17, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> p = {4 * rng.gaussian(), 4 * rng.gaussian()};
        auto result = oracle.project(p);
        REQUIRE(result.face_dim >= 0);
        // the projection itself is feasible
        CHECK(result.point[0] >= -1e-12);
        CHECK(result.point[1] >= -1e-12);
        const double best = std::hypot(p[0] - result.point[0], p[1] - result.point[1]);
        for (int probe = 0; probe < 40; ++probe) {
            double qx = std::fabs(rng.gaussian()), qy = std::fabs(rng.gaussian());
            const double dist = std::hypot(p[0] - qx, p[1] - qy);
            CHECK(dist >= best - 1e-9);
        }
    }
}

TEST_CASE("double dualization returns the original cone") {
    // pos{x_i} in R^3, pointed and full-dimensional
    RatMatrix gens = rat_matrix({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    GeneratorCone g = GeneratorCone::from_columns(gens);
    ConeH dual = dual_of_generators(g);  // {v : <x_i, v> <= 0}

    // enumerate the rays of the dual by brute force over row pairs
    std::vector<RatVector> dual_rays;
    for (Eigen::Index a = 0; a < dual.le.rows(); ++a) {
        for (Eigen::Index b = a + 1; b < dual.le.rows(); ++b) {
            RatMatrix pair(2, 3);
            pair.row(0) = dual.le.row(a);
            pair.row(1) = dual.le.row(b);
            RatMatrix kernel = kernel_basis(pair);
            if (kernel.cols() != 1) continue;
            for (int sign : {1, -1}) {
                RatVector dir = sign * kernel.col(0);
                bool inside = true, strict_somewhere = false;
                for (Eigen::Index r = 0; r < dual.le.rows(); ++r) {
                    Rational v = dual.le.row(r).dot(dir.transpose());
                    if (v > 0) { inside = false; break; }
                    if (v < 0) strict_somewhere = true;
                }
                if (inside && strict_somewhere) dual_rays.push_back(dir);
            }
        }
    }
    REQUIRE(!dual_rays.empty());

    // dualize again: {w : <r, w> <= 0 for all dual rays r} must equal pos{x_i}
    RatMatrix ray_cols(3, static_cast<Eigen::Index>(dual_rays.size()));
    for (std::size_t i = 0; i < dual_rays.size(); ++i) ray_cols.col(static_cast<Eigen::Index>(i)) = dual_rays[i];
    ConeH double_dual = dual_of_generators(GeneratorCone::from_columns(ray_cols));

    // every generator satisfies the double dual
    for (Eigen::Index i = 0; i < gens.cols(); ++i)
        CHECK(contains(double_dual, RatVector(gens.col(i))));
    // sampled points agree with Farkas membership in pos{x_i}
    CounterRng rng(29, 0);
    for (int trial = 0; trial < 80; ++trial) {
        RatVector w(3);
        for (int c = 0; c < 3; ++c)
            w(c) = Rational(static_cast<long long>(rng.next_below(11)) - 5, 2);
        const bool in_double_dual = contains(double_dual, w);
        RatMatrix sep(1, 3);
        sep.row(0) = -w.transpose();
        const bool in_pos = !feasible(RatMatrix(0, 3), dual.le, sep);
        CHECK(in_double_dual == in_pos);
    }
}
