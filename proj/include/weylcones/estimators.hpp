#ifndef WEYLCONES_ESTIMATORS_HPP
#define WEYLCONES_ESTIMATORS_HPP

#include <string>
#include <vector>

#include "weylcones/rng.hpp"
#include "weylcones/tessellation.hpp"

namespace weylcones {

enum class Distribution { Gaussian, Sphere, SymmetrizedExponential };

Distribution distribution_from_string(const std::string& s);
const char* distribution_name(Distribution dist);

/// Monte Carlo result, optionally paired with its exact target.
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long trials = 0;
    long long resamples = 0;
    bool has_target = false;
    Rational target = 0;
    /// (mean - target) / std_error; meaningful when has_target and
    /// std_error > 0.
    double z_score() const;
};

/// i.i.d. points from an exchangeable, symmetric distribution, frozen to
/// exact dyadic rationals and re-verified to be in general position.
PointConfig sample_config(Distribution dist, Family family, int n, int d, RngSpec rng);

/// Uniform draw from the cones of the tessellation of cfg.
std::pair<SignedOrdering, ConeH> sample_weyl_cone(const PointConfig& cfg, RngSpec rng,
                                                  const Budget& budget = {});

/// Mean of (1/2) 1{C meets L nontrivially} over uniform (d-j)-dimensional
/// subspaces L; j = 0 and j = d are exact.
Estimate estimate_quermass(const ConeH& c, int j, long long trials, RngSpec rng);

struct IntrinsicVolumeEstimate {
    std::vector<Estimate> per_dim;  // j = 0..d
    std::vector<long long> counts;  // histogram cells, sum to trials
    long long trials = 0;
    long long resamples = 0;
};

/// Gaussian projection histogram over the face dimensions of one cone.
IntrinsicVolumeEstimate estimate_intrinsic_volumes(const ProjectionOracle& oracle, int d,
                                                   long long trials, RngSpec rng);

/// Frequency of uniform sphere samples inside lin(F) that land in F.
Estimate estimate_solid_angle(const ConeH& f, long long trials, RngSpec rng);

/// Sum over the face_dim-faces of one cone of estimated quermass U_j;
/// trials are split evenly across the faces.
Estimate estimate_size_functional(const PointConfig& cfg, const SignedOrdering& cone,
                                  int face_dim, int j, long long trials, RngSpec rng);

struct DualSample {
    GeneratorCone cone;
    PointConfig config;
    long long attempts = 0;  // total configurations drawn, including rejects
};

/// Rejection sampler for the conditioned positive hull of successive
/// differences; accepts when the hull is a proper cone.
DualSample sample_dual_cone(Family family, Distribution dist, int n, int d, RngSpec rng,
                            long long max_attempts = 1000000);

/// Face census of a generator cone by supporting-hyperplane probes;
/// entry k counts the k-dimensional faces.
std::vector<Integer> generator_cone_face_counts(const GeneratorCone& g);

struct ExperimentSpec {
    std::string quantity;  // fk | Ykj | Uj | vj | lambda | dual_fk | acceptance
    Family family = Family::A;
    int n = 0, d = 0;
    int k = -1, j = -1;
    Distribution dist = Distribution::Gaussian;
    long long trials = 0;
    long long cones = 200;  // cone draws for the per-cone quantities
    std::uint64_t seed = 0;
};

struct Report {
    ExperimentSpec spec;
    Estimate estimate;
};

Report run_experiment(const ExperimentSpec& spec);

}  // namespace weylcones

#endif
