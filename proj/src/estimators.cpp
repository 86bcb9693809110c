#include "weylcones/estimators.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace weylcones {

namespace {

constexpr long long kChunk = 4096;
// Stream strides: trials use consecutive streams, per-cone blocks are
// spaced far apart so nested estimators never collide.
constexpr std::uint64_t kFaceStride = 1ull << 20;
constexpr std::uint64_t kConeStride = 1ull << 40;

struct TrialValue {
    double value = 0.0;
    long long resamples = 0;
};

struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/**
 * Deterministic chunked reduction: trial t always draws from stream
 * (base.stream + t) and chunk partial sums are combined in chunk order, so
 * the result is independent of the worker count.
 */
template <typename Fn>
Estimate run_trials(long long trials, RngSpec base, Fn&& trial_fn) {
    const long long nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<double> chunk_sum(static_cast<std::size_t>(nchunks), 0.0);
    std::vector<double> chunk_sumsq(static_cast<std::size_t>(nchunks), 0.0);
    std::vector<long long> chunk_resamples(static_cast<std::size_t>(nchunks), 0);
    parallel_stripes(nchunks, [&](int, long long begin, long long end) {
        for (long long c = begin; c < end; ++c) {
            KahanSum s, sq;
            long long res = 0;
            const long long hi = std::min(trials, (c + 1) * kChunk);
            for (long long t = c * kChunk; t < hi; ++t) {
                CounterRng rng(base.seed, base.stream + static_cast<std::uint64_t>(t));
                TrialValue v = trial_fn(rng);
                s.add(v.value);
                sq.add(v.value * v.value);
                res += v.resamples;
            }
            chunk_sum[static_cast<std::size_t>(c)] = s.sum;
            chunk_sumsq[static_cast<std::size_t>(c)] = sq.sum;
            chunk_resamples[static_cast<std::size_t>(c)] = res;
        }
    });
    KahanSum total, total_sq;
    long long resamples = 0;
    for (long long c = 0; c < nchunks; ++c) {
        total.add(chunk_sum[static_cast<std::size_t>(c)]);
        total_sq.add(chunk_sumsq[static_cast<std::size_t>(c)]);
        resamples += chunk_resamples[static_cast<std::size_t>(c)];
    }
    Estimate est;
    est.trials = trials;
    est.resamples = resamples;
    est.mean = trials > 0 ? total.sum / static_cast<double>(trials) : 0.0;
    if (trials > 1) {
        double var = (total_sq.sum - static_cast<double>(trials) * est.mean * est.mean) /
                     static_cast<double>(trials - 1);
        est.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(trials));
    }
    return est;
}

RatMatrix rationalize_gaussian_matrix(CounterRng& rng, int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = rational_from_double(rng.gaussian());
    return m;
}

}  // namespace

double Estimate::z_score() const {
    if (!has_target || std_error <= 0) return std::numeric_limits<double>::quiet_NaN();
    return (mean - to_double(target)) / std_error;
}

Distribution distribution_from_string(const std::string& s) {
    if (s == "gaussian") return Distribution::Gaussian;
    if (s == "sphere") return Distribution::Sphere;
    if (s == "symm-exp" || s == "symmetrized-exponential") return Distribution::SymmetrizedExponential;
    throw std::invalid_argument("unknown distribution '" + s + "'");
}

const char* distribution_name(Distribution dist) {
    switch (dist) {
        case Distribution::Gaussian: return "gaussian";
        case Distribution::Sphere: return "sphere";
        case Distribution::SymmetrizedExponential: return "symm-exp";
    }
    return "?";
}

PointConfig sample_config(Distribution dist, Family family, int n, int d, RngSpec spec) {
    CounterRng rng(spec);
    for (int attempt = 0; attempt < 5; ++attempt) {
        RatMatrix points(d, n);
        for (int i = 0; i < n; ++i) {
            std::vector<double> coords(static_cast<std::size_t>(d));
            switch (dist) {
                case Distribution::Gaussian:
                    for (int c = 0; c < d; ++c) coords[static_cast<std::size_t>(c)] = rng.gaussian();
                    break;
                case Distribution::Sphere: {
                    double norm2 = 0;
                    for (int c = 0; c < d; ++c) {
                        coords[static_cast<std::size_t>(c)] = rng.gaussian();
                        norm2 += coords[static_cast<std::size_t>(c)] * coords[static_cast<std::size_t>(c)];
                    }
                    const double inv = 1.0 / std::sqrt(norm2);
                    for (int c = 0; c < d; ++c) coords[static_cast<std::size_t>(c)] *= inv;
                    break;
                }
                case Distribution::SymmetrizedExponential:
                    for (int c = 0; c < d; ++c) {
                        const double sgn = rng.uniform01() < 0.5 ? -1.0 : 1.0;
                        coords[static_cast<std::size_t>(c)] = sgn * rng.exponential();
                    }
                    break;
            }
            for (int c = 0; c < d; ++c) points(c, i) = rational_from_double(coords[static_cast<std::size_t>(c)]);
        }
        PointConfig cfg(family, d, std::move(points));
        if (check_gp_lattice(cfg)) return cfg;
    }
    throw DegenerateConfigError("sample_config: no general-position sample in 5 attempts");
}

std::pair<SignedOrdering, ConeH> sample_weyl_cone(const PointConfig& cfg, RngSpec spec,
                                                  const Budget& budget) {
    std::vector<SignedOrdering> cones = enumerate_cones(cfg, budget);
    CounterRng rng(spec);
    const SignedOrdering& pick = cones[static_cast<std::size_t>(
        rng.next_below(static_cast<std::uint64_t>(cones.size())))];
    ConeH cone = ConeH::from_inequalities(ordering_rows(cfg, pick));
    return {pick, cone};
}

Estimate estimate_quermass(const ConeH& c, int j, long long trials, RngSpec spec) {
    const int d = c.ambient_dim;
    if (j < 0 || j > d) throw std::invalid_argument("estimate_quermass: need 0 <= j <= d");
    if (j == 0 || j == d) {
        Estimate est;
        est.trials = trials;
        est.mean = j == 0 ? 0.5 : 0.0;  // L = R^d always meets; L = {0} never
        return est;
    }
    const int sub_dim = d - j;
    return run_trials(trials, spec, [&](CounterRng& rng) {
        TrialValue out;
        while (true) {
            RatMatrix u = rationalize_gaussian_matrix(rng, d, sub_dim);
            if (rank(u) != sub_dim) {
                ++out.resamples;
                continue;
            }
            out.value = meets_subspace_nontrivially(c, u) ? 0.5 : 0.0;
            return out;
        }
    });
}

IntrinsicVolumeEstimate estimate_intrinsic_volumes(const ProjectionOracle& oracle, int d,
                                                   long long trials, RngSpec spec) {
    const long long nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(nchunks));
    std::vector<long long> res(static_cast<std::size_t>(nchunks), 0);
    parallel_stripes(nchunks, [&](int, long long begin, long long end) {
        for (long long c = begin; c < end; ++c) {
            std::vector<long long> local(static_cast<std::size_t>(d) + 1, 0);
            const long long hi = std::min(trials, (c + 1) * kChunk);
            for (long long t = c * kChunk; t < hi; ++t) {
                CounterRng rng(spec.seed, spec.stream + static_cast<std::uint64_t>(t));
                std::vector<double> p(static_cast<std::size_t>(d));
                int dim = -1;
                for (int retry = 0; retry < 100; ++retry) {
                    for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = rng.gaussian();
                    dim = oracle.project(p).face_dim;
                    if (dim >= 0) break;
                    ++res[static_cast<std::size_t>(c)];
                }
                if (dim < 0)
                    throw std::runtime_error("estimate_intrinsic_volumes: persistent projection ties");
                ++local[static_cast<std::size_t>(dim)];
            }
            counts[static_cast<std::size_t>(c)] = std::move(local);
        }
    });
    IntrinsicVolumeEstimate out;
    out.trials = trials;
    out.counts.assign(static_cast<std::size_t>(d) + 1, 0);
    for (long long c = 0; c < nchunks; ++c) {
        if (counts[static_cast<std::size_t>(c)].empty()) continue;
        for (int jdim = 0; jdim <= d; ++jdim)
            out.counts[static_cast<std::size_t>(jdim)] +=
                counts[static_cast<std::size_t>(c)][static_cast<std::size_t>(jdim)];
        out.resamples += res[static_cast<std::size_t>(c)];
    }
    for (int jdim = 0; jdim <= d; ++jdim) {
        Estimate est;
        est.trials = trials;
        const double p = trials > 0
                             ? static_cast<double>(out.counts[static_cast<std::size_t>(jdim)]) /
                                   static_cast<double>(trials)
                             : 0.0;
        est.mean = p;
        if (trials > 1)
            est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials - 1));
        out.per_dim.push_back(est);
    }
    return out;
}

Estimate estimate_solid_angle(const ConeH& f, long long trials, RngSpec spec) {
    std::vector<int> forced = implicit_equality_rows(f);
    std::vector<bool> is_forced(static_cast<std::size_t>(f.le.rows()), false);
    for (int i : forced) is_forced[static_cast<std::size_t>(i)] = true;

    RatMatrix span_rows(f.eq.rows() + static_cast<Eigen::Index>(forced.size()), f.ambient_dim);
    span_rows.topRows(f.eq.rows()) = f.eq;
    for (std::size_t i = 0; i < forced.size(); ++i)
        span_rows.row(f.eq.rows() + static_cast<Eigen::Index>(i)) = f.le.row(forced[i]);
    std::vector<std::vector<double>> basis = float_kernel_basis(span_rows);
    const int k = static_cast<int>(basis.size());
    if (k == 0) throw std::invalid_argument("estimate_solid_angle: trivial cone");
    const int d = f.ambient_dim;

    std::vector<std::vector<double>> rows;
    for (Eigen::Index i = 0; i < f.le.rows(); ++i) {
        if (is_forced[static_cast<std::size_t>(i)]) continue;
        std::vector<double> row(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) row[static_cast<std::size_t>(c)] = to_double(f.le(i, c));
        rows.push_back(std::move(row));
    }

    return run_trials(trials, spec, [&](CounterRng& rng) {
        TrialValue out;
        std::vector<double> x(static_cast<std::size_t>(d), 0.0);
        for (int c = 0; c < k; ++c) {
            const double u = rng.gaussian();
            for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] += u * basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
        }
        bool inside = true;
        for (const auto& row : rows) {
            double v = 0;
            for (int i = 0; i < d; ++i) v += row[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            if (v > 0) { inside = false; break; }
        }
        out.value = inside ? 1.0 : 0.0;
        return out;
    });
}

Estimate estimate_size_functional(const PointConfig& cfg, const SignedOrdering& cone,
                                  int face_dim, int j, long long trials, RngSpec spec) {
    if (j < 0 || j >= face_dim || face_dim > cfg.d)
        throw std::invalid_argument("estimate_size_functional: need 0 <= j < face_dim <= d");
    std::vector<FaceRep> faces = cone_faces(cfg, cone, face_dim);
    Estimate est;
    if (faces.empty()) {
        est.trials = trials;
        return est;  // empty face set sums to zero exactly
    }
    const long long per_face = std::max<long long>(1, trials / static_cast<long long>(faces.size()));
    double var = 0.0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        ConeH fc = face_cone(cfg, faces[i]);
        Estimate part = estimate_quermass(fc, j, per_face,
                                          {spec.seed, spec.stream + i * kFaceStride});
        est.mean += part.mean;
        var += part.std_error * part.std_error;
        est.trials += part.trials;
        est.resamples += part.resamples;
    }
    est.std_error = std::sqrt(var);
    return est;
}

DualSample sample_dual_cone(Family family, Distribution dist, int n, int d, RngSpec spec,
                            long long max_attempts) {
    if (family == Family::Generic)
        throw std::invalid_argument("sample_dual_cone: Generic family unsupported");
    for (long long attempt = 0; attempt < max_attempts; ++attempt) {
        PointConfig cfg = sample_config(dist, family, n, d,
                                        {spec.seed, spec.stream + static_cast<std::uint64_t>(attempt)});
        const int m = family == Family::A ? n - 1 : n;
        RatMatrix gens(d, m);
        for (int i = 0; i + 1 < n; ++i) gens.col(i) = cfg.points.col(i) - cfg.points.col(i + 1);
        if (family == Family::B) gens.col(n - 1) = cfg.points.col(n - 1);
        GeneratorCone g = GeneratorCone::from_columns(gens);
        if (!is_zero_cone(dual_of_generators(g)))
            return DualSample{std::move(g), std::move(cfg), attempt + 1};
    }
    std::ostringstream os;
    os << "sample_dual_cone: no acceptance in " << max_attempts << " attempts for family "
       << family_name(family) << " n=" << n << " d=" << d
       << " (acceptance probability may be vanishing)";
    throw std::runtime_error(os.str());
}

std::vector<Integer> generator_cone_face_counts(const GeneratorCone& g) {
    const int d = g.ambient_dim;
    const int m = static_cast<int>(g.generators.cols());
    if (m > 20) throw std::invalid_argument("generator_cone_face_counts: too many generators");
    std::vector<Integer> counts(static_cast<std::size_t>(d) + 1, Integer(0));
    for (unsigned mask = 0; mask + 1 < (1u << m); ++mask) {
        int on = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) ++on;
        RatMatrix eq(on, d), strict(m - on, d);
        int a = 0, b = 0;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i))
                eq.row(a++) = g.generators.col(i).transpose();
            else
                strict.row(b++) = -g.generators.col(i).transpose();
        }
        if (!feasible_strict(eq, strict)) continue;
        counts[static_cast<std::size_t>(rank(eq))] += 1;
    }
    counts[static_cast<std::size_t>(rank(g.generators))] += 1;  // the cone itself
    return counts;
}

namespace {

void require_spec(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Report run_experiment(const ExperimentSpec& spec) {
    require_spec(spec.n >= 1 && spec.d >= 2, "experiment: need n >= 1 and d >= 2");
    require_spec(spec.trials > 0, "experiment: trials must be positive");
    require_spec(spec.family != Family::Generic, "experiment: Generic family has no sampler");

    Report report;
    report.spec = spec;
    Estimate est;

    if (spec.quantity == "fk") {
        require_spec(spec.k >= 1 && spec.k <= spec.d, "experiment fk: need 1 <= k <= d");
        est = run_trials(spec.trials, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();  // decorrelate nested streams
            PointConfig cfg = sample_config(spec.dist, spec.family, spec.n, spec.d,
                                            {spec.seed, base});
            auto [ordering, cone] = sample_weyl_cone(cfg, {spec.seed, base + 1});
            (void)cone;
            TrialValue v;
            v.value = static_cast<double>(cone_faces(cfg, ordering, spec.k).size());
            return v;
        });
        est.has_target = true;
        est.target = expected_face_count(spec.family, spec.n, spec.d, spec.k);
    } else if (spec.quantity == "Uj") {
        require_spec(spec.j >= 0 && spec.j <= spec.d - 1, "experiment Uj: need 0 <= j <= d-1");
        est = run_trials(spec.cones, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();
            PointConfig cfg = sample_config(spec.dist, spec.family, spec.n, spec.d,
                                            {spec.seed, base});
            auto [ordering, cone] = sample_weyl_cone(cfg, {spec.seed, base + 1});
            (void)ordering;
            Estimate part = estimate_quermass(cone, spec.j, spec.trials, {spec.seed, base + 2});
            return TrialValue{part.mean, part.resamples};
        });
        est.trials = spec.cones * spec.trials;
        est.has_target = true;
        est.target = expected_quermass(spec.family, spec.n, spec.d, spec.j);
    } else if (spec.quantity == "vj") {
        require_spec(spec.j >= 0 && spec.j <= spec.d, "experiment vj: need 0 <= j <= d");
        est = run_trials(spec.cones, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();
            PointConfig cfg = sample_config(spec.dist, spec.family, spec.n, spec.d,
                                            {spec.seed, base});
            auto [ordering, cone] = sample_weyl_cone(cfg, {spec.seed, base + 1});
            (void)cone;
            ConeFaceSet faces = cone_projection_faces(cfg, ordering);
            ProjectionOracle oracle(faces.rows, faces.faces);
            IntrinsicVolumeEstimate iv =
                estimate_intrinsic_volumes(oracle, spec.d, spec.trials, {spec.seed, base + 2});
            return TrialValue{iv.per_dim[static_cast<std::size_t>(spec.j)].mean, iv.resamples};
        });
        est.trials = spec.cones * spec.trials;
        est.has_target = true;
        est.target = expected_intrinsic_volume(spec.family, spec.n, spec.d, spec.j);
    } else if (spec.quantity == "lambda") {
        require_spec(spec.k >= 1 && spec.k <= spec.d, "experiment lambda: need 1 <= k <= d");
        est = run_trials(spec.cones, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();
            PointConfig cfg = sample_config(spec.dist, spec.family, spec.n, spec.d,
                                            {spec.seed, base});
            auto [ordering, cone] = sample_weyl_cone(cfg, {spec.seed, base + 1});
            (void)cone;
            TrialValue out;
            std::vector<FaceRep> faces = cone_faces(cfg, ordering, spec.k);
            std::uint64_t face_stream = base + 2;
            for (const FaceRep& rep : faces) {
                Estimate part = estimate_solid_angle(face_cone(cfg, rep), spec.trials,
                                                     {spec.seed, face_stream});
                face_stream += kFaceStride;
                out.value += part.mean;
                out.resamples += part.resamples;
            }
            return out;
        });
        est.trials = spec.cones * spec.trials;
        est.has_target = true;
        est.target = expected_angle_sum(spec.family, spec.n, spec.d, spec.k);
    } else if (spec.quantity == "Ykj") {
        require_spec(spec.j >= 1 && spec.j <= spec.k && spec.k <= spec.d,
                     "experiment Ykj: need 1 <= j <= k <= d");
        const int face_dim = spec.d - spec.k + spec.j;
        const int quermass_j = spec.d - spec.k;
        est = run_trials(spec.cones, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();
            PointConfig cfg = sample_config(spec.dist, spec.family, spec.n, spec.d,
                                            {spec.seed, base});
            auto [ordering, cone] = sample_weyl_cone(cfg, {spec.seed, base + 1});
            (void)cone;
            Estimate part = estimate_size_functional(cfg, ordering, face_dim, quermass_j,
                                                     spec.trials, {spec.seed, base + 2});
            return TrialValue{part.mean, part.resamples};
        });
        est.trials = spec.cones * spec.trials;
        est.has_target = true;
        est.target = expected_size_functional(spec.family, spec.n, spec.d, spec.k, spec.j);
    } else if (spec.quantity == "dual_fk") {
        require_spec(spec.k >= 0 && spec.k <= spec.d - 1, "experiment dual_fk: need 0 <= k <= d-1");
        est = run_trials(spec.trials, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();
            DualSample sample = sample_dual_cone(spec.family, spec.dist, spec.n, spec.d,
                                                 {spec.seed, base});
            std::vector<Integer> counts = generator_cone_face_counts(sample.cone);
            TrialValue v;
            v.value = counts[static_cast<std::size_t>(spec.k)].convert_to<double>();
            v.resamples = sample.attempts - 1;
            return v;
        });
        est.has_target = true;
        est.target = expected_dual_face_count(spec.family, spec.n, spec.d, spec.k);
    } else if (spec.quantity == "acceptance") {
        est = run_trials(spec.trials, {spec.seed, 0}, [&](CounterRng& rng) {
            const std::uint64_t base = rng.next_u64();
            PointConfig cfg = sample_config(spec.dist, spec.family, spec.n, spec.d,
                                            {spec.seed, base});
            const int m = spec.family == Family::A ? spec.n - 1 : spec.n;
            RatMatrix gens(spec.d, m);
            for (int i = 0; i + 1 < spec.n; ++i)
                gens.col(i) = cfg.points.col(i) - cfg.points.col(i + 1);
            if (spec.family == Family::B) gens.col(spec.n - 1) = cfg.points.col(spec.n - 1);
            GeneratorCone g = GeneratorCone::from_columns(gens);
            TrialValue v;
            v.value = is_zero_cone(dual_of_generators(g)) ? 0.0 : 1.0;
            return v;
        });
        est.has_target = true;
        est.target = acceptance_probability(spec.family, spec.n, spec.d);
    } else {
        throw std::invalid_argument("experiment: unknown quantity '" + spec.quantity + "'");
    }

    report.estimate = est;
    return report;
}

}  // namespace weylcones
