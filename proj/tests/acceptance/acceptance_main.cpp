// Acceptance suite: runs every exactness, statistical, and determinism
// criterion end to end and prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "weylcones/estimators.hpp"
#include "weylcones/io.hpp"
#include "weylcones/sphere_export.hpp"

using namespace weylcones;

namespace {

struct Cell {
    Family family;
    int n, d;
};

std::vector<Cell> criterion_grid() {
    std::vector<Cell> cells;
    for (int n = 3; n <= 7; ++n)
        for (int d = 2; d <= std::min(n - 1, 4); ++d) cells.push_back({Family::A, n, d});
    for (int n = 2; n <= 6; ++n)
        for (int d = 2; d <= std::min(n, 4); ++d) cells.push_back({Family::B, n, d});
    return cells;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool fail(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stdout, fmt, args);
    va_end(args);
    std::fputc('\n', stdout);
    return false;
}

bool check_z(const char* label, const Estimate& est, double limit = 4.0) {
    const double z = est.z_score();
    if (!est.has_target) return fail("    %s: missing target", label);
    if (est.std_error == 0.0) {
        const bool equal = est.mean == to_double(est.target);
        std::printf("    %s: mean=%.6f target=%s (deterministic)\n", label, est.mean,
                    rational_to_string(est.target).c_str());
        return equal || fail("    %s: deterministic value mismatch", label);
    }
    std::printf("    %s: mean=%.6f target=%s z=%+.2f\n", label, est.mean,
                rational_to_string(est.target).c_str(), z);
    return std::fabs(z) <= limit ||
           fail("    %s: |z| = %.2f exceeds %.1f", label, std::fabs(z), limit);
}

// ---------------------------------------------------------------------------

bool criterion_cone_counts(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const Cell& cell : criterion_grid()) {
        const Integer want = region_count(cell.family, cell.n, cell.d);
        for (std::uint64_t seed = 0; seed < 20 && ok; ++seed) {
            PointConfig cfg = sample_config(Distribution::Gaussian, cell.family, cell.n, cell.d,
                                            {seed * 101 + 7, 0});
            const std::size_t got = enumerate_cones(cfg).size();
            if (Integer(static_cast<long long>(got)) != want)
                ok = fail("    %s n=%d d=%d seed=%llu: %zu cones, expected %s",
                          family_name(cell.family), cell.n, cell.d,
                          static_cast<unsigned long long>(seed), got, want.str().c_str());
        }
        if (!ok) break;
    }
    *elapsed = seconds_since(start);
    return ok && (*elapsed < 300.0 || fail("    runtime %.1fs exceeds 5 minutes", *elapsed));
}

bool criterion_face_counts(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const Cell& cell : criterion_grid()) {
        for (std::uint64_t seed = 0; seed < 20 && ok; ++seed) {
            PointConfig cfg = sample_config(Distribution::Gaussian, cell.family, cell.n, cell.d,
                                            {seed * 211 + 13, 0});
            Tessellation tess(cfg);
            for (int k = 1; k <= cell.d && ok; ++k) {
                const Integer want = total_face_count(cell.family, cell.n, cell.d, k);
                const std::size_t got = tess.faces(k).size();
                if (Integer(static_cast<long long>(got)) != want)
                    ok = fail("    %s n=%d d=%d k=%d seed=%llu: %zu faces, expected %s",
                              family_name(cell.family), cell.n, cell.d, k,
                              static_cast<unsigned long long>(seed), got, want.str().c_str());
            }
        }
        if (!ok) break;
    }
    *elapsed = seconds_since(start);
    return ok && (*elapsed < 300.0 || fail("    runtime %.1fs exceeds 5 minutes", *elapsed));
}

bool criterion_incidence(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const Cell& cell : criterion_grid()) {
        for (std::uint64_t seed = 0; seed < 5 && ok; ++seed) {
            PointConfig cfg = sample_config(Distribution::Gaussian, cell.family, cell.n, cell.d,
                                            {seed * 307 + 29, 0});
            Tessellation tess(cfg);
            for (int k = 1; k <= cell.d && ok; ++k) {
                const Integer want = incidence_count(cell.family, cell.n, cell.d, k);
                const Integer via_faces = tess.incidence_via_faces(k);
                const Integer via_cones = tess.incidence_via_cones(k);
                if (via_faces != want || via_cones != want)
                    ok = fail("    %s n=%d d=%d k=%d: %s / %s, expected %s",
                              family_name(cell.family), cell.n, cell.d, k,
                              via_faces.str().c_str(), via_cones.str().c_str(),
                              want.str().c_str());
            }
        }
        if (!ok) break;
    }
    *elapsed = seconds_since(start);
    return ok;
}

bool criterion_chamber_subspace(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<std::pair<Family, int>> cases = {{Family::B, 2}, {Family::B, 3}, {Family::B, 4},
                                                 {Family::B, 5}, {Family::A, 3}, {Family::A, 4},
                                                 {Family::A, 5}, {Family::A, 6}};
    for (const auto& [family, n] : cases) {
        for (int d = 1; d <= n && ok; ++d) {
            for (int k = 1; k <= n && ok; ++k) {
                const Integer want = chamber_face_intersection_count(family, n, k, d);
                for (int rep = 0; rep < 10 && ok; ++rep) {
                    CounterRng rng(0xD00D + 1000 * n + 10 * d + k, static_cast<std::uint64_t>(rep));
                    RatMatrix u(n, d);
                    bool good = false;
                    for (int attempt = 0; attempt < 5 && !good; ++attempt) {
                        for (int i = 0; i < n; ++i)
                            for (int c = 0; c < d; ++c) u(i, c) = rational_from_double(rng.gaussian());
                        good = rank(u) == d && subspace_in_general_position(family, n, u);
                    }
                    if (!good) {
                        ok = fail("    %s n=%d: no general-position subspace", family_name(family), n);
                        break;
                    }
                    const Integer got = chamber_faces_meeting_subspace(family, n, k, u);
                    if (got != want)
                        ok = fail("    %s n=%d k=%d d=%d: brute %s, formula %s",
                                  family_name(family), n, k, d, got.str().c_str(),
                                  want.str().c_str());
                }
            }
        }
        if (!ok) break;
    }
    *elapsed = seconds_since(start);
    return ok && (*elapsed < 600.0 || fail("    runtime %.1fs exceeds 10 minutes", *elapsed));
}

bool criterion_gp_equivalence(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const std::vector<Cell> cells = {{Family::A, 4, 2}, {Family::A, 4, 3}, {Family::A, 5, 3},
                                     {Family::B, 2, 2}, {Family::B, 3, 2}, {Family::B, 3, 3},
                                     {Family::B, 4, 2}};
    const Distribution dists[] = {Distribution::Gaussian, Distribution::Sphere,
                                  Distribution::SymmetrizedExponential};
    for (const Cell& cell : cells) {
        for (std::uint64_t seed = 0; seed < 50 && ok; ++seed) {
            PointConfig cfg = sample_config(dists[seed % 3], cell.family, cell.n, cell.d,
                                            {seed * 401 + 31, 2});
            if (check_gp_chainwise(cfg) != check_gp_lattice(cfg))
                ok = fail("    %s n=%d d=%d seed=%llu: criteria disagree",
                          family_name(cell.family), cell.n, cell.d,
                          static_cast<unsigned long long>(seed));
        }
        if (!ok) break;
    }

    auto crafted = [&](Family family, int d,
                       std::initializer_list<std::initializer_list<Rational>> pts) {
        RatMatrix m(static_cast<Eigen::Index>(pts.size()), d);
        Eigen::Index i = 0;
        for (const auto& row : pts) {
            Eigen::Index j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return PointConfig(family, d, RatMatrix(m.transpose()));
    };
    if (ok) {
        // duplicate points, an antipodal pair, a collinear difference triple
        PointConfig dup = crafted(Family::A, 2, {{1, 0}, {1, 0}, {0, 1}});
        PointConfig anti = crafted(Family::B, 2, {{1, 0}, {-1, 0}});
        PointConfig collinear = crafted(Family::A, 2, {{1, 0}, {0, 1}, {2, -1}});
        PointConfig dup_b = crafted(Family::B, 2, {{1, 0}, {1, 0}, {0, 1}});
        for (const PointConfig* cfg : {&dup, &anti, &collinear, &dup_b}) {
            const bool chain = check_gp_chainwise(*cfg);
            const bool lattice = check_gp_lattice(*cfg);
            if (chain || lattice)
                ok = fail("    crafted degenerate not flagged (chainwise=%d lattice=%d)",
                          static_cast<int>(chain), static_cast<int>(lattice));
            if (chain != lattice) ok = fail("    crafted degenerate: criteria disagree");
        }
    }
    *elapsed = seconds_since(start);
    return ok;
}

bool criterion_distribution_free(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const Distribution dists[] = {Distribution::Gaussian, Distribution::Sphere,
                                  Distribution::SymmetrizedExponential};
    for (const Cell& cell : criterion_grid()) {
        for (std::uint64_t seed = 0; seed < 3 && ok; ++seed) {
            std::vector<std::size_t> cone_counts;
            std::vector<std::vector<std::size_t>> face_counts;
            for (Distribution dist : dists) {
                PointConfig cfg = sample_config(dist, cell.family, cell.n, cell.d,
                                                {seed * 503 + 43, 1});
                Tessellation tess(cfg);
                cone_counts.push_back(tess.cones().size());
                std::vector<std::size_t> per_k;
                for (int k = 1; k <= cell.d; ++k) per_k.push_back(tess.faces(k).size());
                face_counts.push_back(std::move(per_k));
            }
            if (cone_counts[0] != cone_counts[1] || cone_counts[1] != cone_counts[2] ||
                face_counts[0] != face_counts[1] || face_counts[1] != face_counts[2])
                ok = fail("    %s n=%d d=%d: counts differ across distributions",
                          family_name(cell.family), cell.n, cell.d);
        }
        if (!ok) break;
    }
    *elapsed = seconds_since(start);
    return ok;
}

bool criterion_monte_carlo(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const std::vector<Cell> cells = {{Family::A, 5, 3}, {Family::B, 3, 2}};

    for (const Cell& cell : cells) {
        std::printf("  cell %s n=%d d=%d\n", family_name(cell.family), cell.n, cell.d);
        // expected face counts, 2000 cone draws per k
        for (int k = 1; k <= cell.d && ok; ++k) {
            ExperimentSpec spec;
            spec.quantity = "fk";
            spec.family = cell.family;
            spec.n = cell.n;
            spec.d = cell.d;
            spec.k = k;
            spec.trials = 2000;
            spec.seed = 7000 + static_cast<std::uint64_t>(k);
            std::string label = "E f_" + std::to_string(k);
            ok = check_z(label.c_str(), run_experiment(spec).estimate) && ok;
        }
        // quermassintegrals, 1e5 subspace draws per cone, 200 cones
        for (int j = 1; j <= cell.d - 1 && ok; ++j) {
            ExperimentSpec spec;
            spec.quantity = "Uj";
            spec.family = cell.family;
            spec.n = cell.n;
            spec.d = cell.d;
            spec.j = j;
            spec.trials = 100000;
            spec.cones = 200;
            spec.seed = 7100 + static_cast<std::uint64_t>(j);
            std::string label = "E U_" + std::to_string(j);
            ok = check_z(label.c_str(), run_experiment(spec).estimate) && ok;
        }
        // intrinsic volumes, 2e4 gaussian draws per cone, 200 cones
        if (ok) {
            const int cones = 200;
            const long long trials = 20000;
            std::vector<double> means(static_cast<std::size_t>(cell.d) + 1, 0.0);
            std::vector<double> sq(static_cast<std::size_t>(cell.d) + 1, 0.0);
            for (int c = 0; c < cones; ++c) {
                const std::uint64_t base = 7200 + static_cast<std::uint64_t>(c) * (1ull << 40);
                PointConfig cfg = sample_config(Distribution::Gaussian, cell.family, cell.n,
                                                cell.d, {base, 0});
                auto [ordering, cone] = sample_weyl_cone(cfg, {base, 1});
                (void)cone;
                ConeFaceSet set = cone_projection_faces(cfg, ordering);
                ProjectionOracle oracle(ConeH::from_inequalities(set.rows), set.faces);
                IntrinsicVolumeEstimate iv =
                    estimate_intrinsic_volumes(oracle, cell.d, trials, {base, 2});
                for (int j = 0; j <= cell.d; ++j) {
                    means[static_cast<std::size_t>(j)] += iv.per_dim[static_cast<std::size_t>(j)].mean;
                    sq[static_cast<std::size_t>(j)] += iv.per_dim[static_cast<std::size_t>(j)].mean *
                                                        iv.per_dim[static_cast<std::size_t>(j)].mean;
                }
            }
            for (int j = 0; j <= cell.d && ok; ++j) {
                Estimate est;
                est.trials = cones * trials;
                est.mean = means[static_cast<std::size_t>(j)] / cones;
                const double var =
                    (sq[static_cast<std::size_t>(j)] - cones * est.mean * est.mean) / (cones - 1);
                est.std_error = std::sqrt(std::max(var, 0.0) / cones);
                est.has_target = true;
                est.target = expected_intrinsic_volume(cell.family, cell.n, cell.d, j);
                std::string label = "E v_" + std::to_string(j);
                if (est.std_error == 0.0 && est.mean == to_double(est.target)) {
                    std::printf("    %s: exact %.6f\n", label.c_str(), est.mean);
                    continue;
                }
                ok = check_z(label.c_str(), est) && ok;
            }
        }
        // angle sums, 1e4 sphere draws per face, 200 cones
        for (int k = 1; k <= cell.d && ok; ++k) {
            ExperimentSpec spec;
            spec.quantity = "lambda";
            spec.family = cell.family;
            spec.n = cell.n;
            spec.d = cell.d;
            spec.k = k;
            spec.trials = 10000;
            spec.cones = 200;
            spec.seed = 7300 + static_cast<std::uint64_t>(k);
            std::string label = "E Lambda_" + std::to_string(k);
            ok = check_z(label.c_str(), run_experiment(spec).estimate) && ok;
        }
        // a size functional with genuinely random faces
        if (ok) {
            ExperimentSpec spec;
            spec.quantity = "Ykj";
            spec.family = cell.family;
            spec.n = cell.n;
            spec.d = cell.d;
            spec.k = cell.d == 3 ? 2 : 1;
            spec.j = 1;
            spec.trials = 10000;
            spec.cones = 200;
            spec.seed = 7400;
            ok = check_z("E Y (size functional)", run_experiment(spec).estimate) && ok;
        }
    }

    // the headline reference values
    if (ok) {
        ExperimentSpec spec;
        spec.quantity = "Uj";
        spec.family = Family::A;
        spec.n = 4;
        spec.d = 3;
        spec.j = 1;
        spec.trials = 100000;
        spec.cones = 200;
        spec.seed = 7500;
        Report report = run_experiment(spec);
        ok = check_z("E U_1 (A, n=4, d=3) vs 1/4", report.estimate) && ok;
        ok = ok && report.estimate.target == Rational(1, 4);
        ExperimentSpec ykj;
        ykj.quantity = "Ykj";
        ykj.family = Family::A;
        ykj.n = 4;
        ykj.d = 3;
        ykj.k = 2;
        ykj.j = 1;
        ykj.trials = 10000;
        ykj.cones = 200;
        ykj.seed = 7600;
        Report ry = run_experiment(ykj);
        ok = check_z("E Y_{2,1} (A, n=4, d=3) vs 1/2", ry.estimate) && ok;
        ok = ok && ry.estimate.target == Rational(1, 2);
    }

    *elapsed = seconds_since(start);
    return ok && (*elapsed < 900.0 || fail("    runtime %.1fs exceeds 15 minutes", *elapsed));
}

bool criterion_dual_suite(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const std::vector<Cell> cells = {{Family::A, 4, 2}, {Family::B, 3, 2}};
    for (const Cell& cell : cells) {
        const Rational target = acceptance_probability(cell.family, cell.n, cell.d);
        long long attempts = 0;
        long long accepted = 0;
        std::uint64_t stream = 0;
        while (attempts < 4000) {
            PointConfig cfg = sample_config(Distribution::Gaussian, cell.family, cell.n, cell.d,
                                            {9900, stream++});
            const int m = cell.family == Family::A ? cell.n - 1 : cell.n;
            RatMatrix gens(cell.d, m);
            for (int i = 0; i + 1 < cell.n; ++i)
                gens.col(i) = cfg.points.col(i) - cfg.points.col(i + 1);
            if (cell.family == Family::B) gens.col(cell.n - 1) = cfg.points.col(cell.n - 1);
            GeneratorCone g = GeneratorCone::from_columns(gens);
            ++attempts;
            if (is_zero_cone(dual_of_generators(g))) continue;
            ++accepted;

            // exact duality of the face census on every accepted sample
            std::vector<Integer> dual_counts = generator_cone_face_counts(g);
            SignedOrdering id;
            id.perm.resize(cell.n);
            std::iota(id.perm.begin(), id.perm.end(), 0);
            id.signs.assign(cell.n, 1);
            for (int k = 0; k <= cell.d && ok; ++k) {
                Integer primal = (k == cell.d || k == 0)
                                     ? Integer(1)
                                     : Integer(static_cast<long long>(
                                           cone_faces(cfg, id, k).size()));
                if (dual_counts[static_cast<std::size_t>(cell.d - k)] != primal)
                    ok = fail("    %s n=%d: f_%d(dual) != f_%d(primal)",
                              family_name(cell.family), cell.n, cell.d - k, k);
            }
            if (!ok) break;
        }
        const double rate = static_cast<double>(accepted) / static_cast<double>(attempts);
        const double p = to_double(target);
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(attempts));
        std::printf("    %s n=%d d=%d: acceptance %.4f target %s (4se = %.4f)\n",
                    family_name(cell.family), cell.n, cell.d, rate,
                    rational_to_string(target).c_str(), 4 * se);
        if (std::fabs(rate - p) > 4 * se)
            ok = fail("    acceptance rate off by more than 4 binomial SE");
        if (!ok) break;
    }
    *elapsed = seconds_since(start);
    return ok;
}

bool criterion_fixed_cone(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    ConeH quadrant = ConeH::from_inequalities(rat_matrix({{-1, 0}, {0, -1}}));
    Estimate u1 = estimate_quermass(quadrant, 1, 100000, {4242, 0});
    u1.has_target = true;
    u1.target = Rational(1, 4);
    ok = check_z("quadrant U_1", u1) && ok;

    std::vector<ProjectionFace> faces = {ProjectionFace{2, {}}, ProjectionFace{1, {0}},
                                         ProjectionFace{1, {1}}, ProjectionFace{0, {0, 1}}};
    ProjectionOracle oracle(quadrant, faces);
    IntrinsicVolumeEstimate iv = estimate_intrinsic_volumes(oracle, 2, 100000, {4242, 1});
    const Rational targets[3] = {Rational(1, 4), Rational(1, 2), Rational(1, 4)};
    for (int j = 0; j <= 2 && ok; ++j) {
        Estimate est = iv.per_dim[static_cast<std::size_t>(j)];
        est.has_target = true;
        est.target = targets[j];
        std::string label = "quadrant v_" + std::to_string(j);
        ok = check_z(label.c_str(), est) && ok;
    }

    Estimate alpha = estimate_solid_angle(quadrant, 100000, {4242, 2});
    alpha.has_target = true;
    alpha.target = Rational(1, 4);
    ok = check_z("quadrant alpha", alpha) && ok;

    *elapsed = seconds_since(start);
    return ok;
}

bool criterion_determinism(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    ExperimentSpec spec;
    spec.quantity = "Uj";
    spec.family = Family::B;
    spec.n = 3;
    spec.d = 2;
    spec.j = 1;
    spec.trials = 2000;
    spec.cones = 40;
    spec.seed = 31337;

    set_thread_count(1);
    const std::string single = report_to_json(run_experiment(spec));
    set_thread_count(4);
    const std::string quad = report_to_json(run_experiment(spec));
    set_thread_count(3);
    const std::string triple = report_to_json(run_experiment(spec));
    set_thread_count(1);
    const std::string again = report_to_json(run_experiment(spec));

    if (single != quad || single != triple)
        ok = fail("    reports differ across thread counts");
    if (single != again) ok = fail("    reports differ across reruns");

    ExperimentSpec fk;
    fk.quantity = "fk";
    fk.family = Family::A;
    fk.n = 5;
    fk.d = 3;
    fk.k = 2;
    fk.trials = 200;
    fk.seed = 4711;
    set_thread_count(1);
    const std::string f1 = report_to_json(run_experiment(fk));
    set_thread_count(6);
    const std::string f6 = report_to_json(run_experiment(fk));
    set_thread_count(1);
    if (f1 != f6) ok = fail("    enumeration-backed reports differ across thread counts");

    *elapsed = seconds_since(start);
    return ok;
}

bool criterion_figure_data(double* elapsed) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    PointConfig b6 = sample_config(Distribution::Sphere, Family::B, 6, 3, {60601, 0});
    nlohmann::json b_doc = nlohmann::json::parse(export_sphere_json(b6));
    if (b_doc["great_circles"].size() != 36)
        ok = fail("    B n=6: %zu great circles, expected 36", b_doc["great_circles"].size());

    Budget wide;
    wide.max_n_a = 9;
    PointConfig a9 = sample_config(Distribution::Sphere, Family::A, 9, 3, {60602, 0});
    nlohmann::json a_doc = nlohmann::json::parse(export_sphere_json(a9, wide));
    if (a_doc["great_circles"].size() != 36)
        ok = fail("    A n=9: %zu great circles, expected 36", a_doc["great_circles"].size());
    if (a_doc["cones"].size() != region_count(Family::A, 9, 3).convert_to<std::size_t>())
        ok = fail("    A n=9: cone polygon count mismatch");

    *elapsed = seconds_since(start);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    threads = std::min(threads, 8);
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    set_thread_count(threads);
    std::printf("acceptance suite (%d worker threads)\n", threads);

    struct Entry {
        int number;
        const char* name;
        bool (*run)(double*);
    };
    const Entry entries[] = {
        {1, "exact cone counts across the grid (20 seeds per cell)", criterion_cone_counts},
        {2, "exact face counts across the grid (20 seeds per cell)", criterion_face_counts},
        {3, "incidence sums via multiplicities and via cones", criterion_incidence},
        {4, "chamber-subspace counts against the closed forms", criterion_chamber_subspace},
        {5, "general-position criteria agree (random + crafted)", criterion_gp_equivalence},
        {6, "distribution-free counts across the three samplers", criterion_distribution_free},
        {7, "Monte Carlo expectations within |z| <= 4", criterion_monte_carlo},
        {8, "dual-cone acceptance rate and per-sample duality", criterion_dual_suite},
        {9, "fixed-cone functionals on the quadrant", criterion_fixed_cone},
        {10, "byte-identical reports across threads and reruns", criterion_determinism},
        {11, "figure data: 36 great circles for B n=6 and A n=9", criterion_figure_data},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        if (only != 0 && entry.number != only) continue;
        double elapsed = 0.0;
        const bool pass = entry.run(&elapsed);
        std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", entry.number,
                    entry.name, elapsed);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
