#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "weylcones/estimators.hpp"
#include "weylcones/io.hpp"
#include "weylcones/sphere_export.hpp"

using namespace weylcones;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonFlags {
    std::string family = "A";
    int n = 0;
    int d = 0;
    int k = -1;
    int j = -1;
    std::string dist = "gaussian";
    long long trials = 10000;
    long long cones = 200;
    std::uint64_t seed = 0;
    int seeds = 5;
    int threads = 0;
    std::string format = "json";
    std::string out;
    std::string input;
    long long max_candidates = 10'000'000;
};

void apply_threads(const CommonFlags& flags) {
    int threads = flags.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("WEYL_CONES_THREADS")) threads = std::atoi(env);
    }
    set_thread_count(threads > 0 ? threads : 1);
}

Budget budget_from_flags(const CommonFlags& flags) {
    Budget b;
    b.max_candidates = flags.max_candidates;
    return b;
}

void write_output(const CommonFlags& flags, const std::string& text) {
    if (flags.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(flags.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + flags.out);
    os << text;
}

std::string decimal(const Rational& q) { return rational_to_decimal(q); }

int cmd_tables(const CommonFlags& flags) {
    const Family family = family_from_string(flags.family);
    const int n = flags.n, d = flags.d;
    std::vector<std::pair<std::string, Rational>> rows;
    rows.emplace_back("cones", Rational(region_count(family, n, d)));
    if (family != Family::Generic) {
        for (int k = 1; k <= d; ++k)
            rows.emplace_back("faces_k" + std::to_string(k), Rational(total_face_count(family, n, d, k)));
        for (int k = 1; k <= d; ++k)
            rows.emplace_back("incidence_k" + std::to_string(k), Rational(incidence_count(family, n, d, k)));
    }
    for (int k = 1; k <= d; ++k)
        rows.emplace_back("E_faces_k" + std::to_string(k), expected_face_count(family, n, d, k));
    if (family != Family::Generic) {
        for (int j = 0; j <= d - 1; ++j)
            rows.emplace_back("E_quermass_U" + std::to_string(j), expected_quermass(family, n, d, j));
        for (int j = 0; j <= d; ++j)
            rows.emplace_back("E_intrinsic_v" + std::to_string(j),
                              expected_intrinsic_volume(family, n, d, j));
        for (int k = 1; k <= d; ++k)
            rows.emplace_back("E_angle_sum_L" + std::to_string(k), expected_angle_sum(family, n, d, k));
        for (int k = 0; k <= d - 1; ++k)
            rows.emplace_back("E_dual_faces_k" + std::to_string(k),
                              expected_dual_face_count(family, n, d, k));
        for (int j = 1; j <= d; ++j)
            rows.emplace_back("E_dual_quermass_U" + std::to_string(j),
                              expected_dual_quermass(family, n, d, j));
        for (int j = 0; j <= d; ++j)
            rows.emplace_back("E_dual_intrinsic_v" + std::to_string(j),
                              expected_dual_intrinsic_volume(family, n, d, j));
        rows.emplace_back("acceptance_probability", acceptance_probability(family, n, d));
    }

    std::ostringstream os;
    if (flags.format == "csv") {
        os << "quantity,value,decimal\n";
        for (const auto& [name, value] : rows)
            os << name << ',' << rational_to_string(value) << ',' << decimal(value) << '\n';
    } else if (flags.format == "json") {
        os << "{\n  \"schema\": 1,\n  \"family\": \"" << family_name(family) << "\",\n  \"n\": " << n
           << ",\n  \"d\": " << d << ",\n  \"values\": {\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << "    \"" << rows[i].first << "\": {\"exact\": \"" << rational_to_string(rows[i].second)
               << "\", \"decimal\": \"" << decimal(rows[i].second) << "\"}"
               << (i + 1 < rows.size() ? ",\n" : "\n");
        os << "  }\n}\n";
    } else {  // plain text table
        for (const auto& [name, value] : rows)
            os << name << " = " << rational_to_string(value) << "  (" << decimal(value) << ")\n";
    }
    write_output(flags, os.str());
    return kExitOk;
}

int cmd_verify(const CommonFlags& flags) {
    const Family family = family_from_string(flags.family);
    const Distribution dist = distribution_from_string(flags.dist);
    const Budget budget = budget_from_flags(flags);
    const int n = flags.n, d = flags.d;

    for (int s = 0; s < flags.seeds; ++s) {
        const std::uint64_t seed = flags.seed + static_cast<std::uint64_t>(s);
        PointConfig cfg = sample_config(dist, family, n, d, {seed, 0});
        Tessellation tess(cfg, budget);
        const Integer want_cones = region_count(family, n, d);
        if (Integer(static_cast<long long>(tess.cones().size())) != want_cones) {
            std::cout << "MISMATCH cones: got " << tess.cones().size() << " expected " << want_cones
                      << "\nconfig: " << point_config_to_json(cfg) << "\n";
            return kExitMismatch;
        }
        for (int k = 1; k <= d; ++k) {
            const Integer want_faces = total_face_count(family, n, d, k);
            if (Integer(static_cast<long long>(tess.faces(k).size())) != want_faces) {
                std::cout << "MISMATCH faces k=" << k << ": got " << tess.faces(k).size()
                          << " expected " << want_faces << "\nconfig: " << point_config_to_json(cfg)
                          << "\n";
                return kExitMismatch;
            }
            const Integer want_incidence = incidence_count(family, n, d, k);
            const Integer via_faces = tess.incidence_via_faces(k);
            const Integer via_cones = tess.incidence_via_cones(k);
            if (via_faces != want_incidence || via_cones != want_incidence) {
                std::cout << "MISMATCH incidence k=" << k << ": " << via_faces << " / " << via_cones
                          << " expected " << want_incidence << "\nconfig: "
                          << point_config_to_json(cfg) << "\n";
                return kExitMismatch;
            }
        }
        std::cout << "seed " << seed << ": cones and faces match\n";
    }
    std::cout << "verify: all " << flags.seeds << " seeds match the closed forms\n";
    return kExitOk;
}

int cmd_gp_check(const CommonFlags& flags) {
    PointConfig cfg = [&] {
        if (!flags.input.empty()) {
            std::ifstream is(flags.input);
            if (!is) throw CLI::ValidationError("--input", "cannot open " + flags.input);
            std::stringstream buffer;
            buffer << is.rdbuf();
            return parse_point_config(buffer.str());
        }
        return sample_config(distribution_from_string(flags.dist), family_from_string(flags.family),
                             flags.n, flags.d, {flags.seed, 0});
    }();
    const bool chainwise = check_gp_chainwise(cfg);
    const bool lattice = check_gp_lattice(cfg);
    std::cout << "chainwise: " << (chainwise ? "true" : "false") << "\n"
              << "lattice:   " << (lattice ? "true" : "false") << "\n";
    if (chainwise != lattice) {
        std::cout << "MISMATCH: the two general-position criteria disagree\nconfig: "
                  << point_config_to_json(cfg) << "\n";
        return kExitMismatch;
    }
    std::cout << "general position: " << (chainwise ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_montecarlo(const CommonFlags& flags, const std::string& quantity) {
    ExperimentSpec spec;
    spec.quantity = quantity;
    spec.family = family_from_string(flags.family);
    spec.n = flags.n;
    spec.d = flags.d;
    spec.k = flags.k;
    spec.j = flags.j;
    spec.dist = distribution_from_string(flags.dist);
    spec.trials = flags.trials;
    spec.cones = flags.cones;
    spec.seed = flags.seed;
    Report report = run_experiment(spec);
    write_output(flags, flags.format == "csv" ? report_to_csv(report) : report_to_json(report));
    return kExitOk;
}

int cmd_chamber_intersect(const CommonFlags& flags) {
    const Family family = family_from_string(flags.family);
    const int n = flags.n, k = flags.k, d = flags.d;
    CounterRng rng(flags.seed, 0);
    RatMatrix u(n, d);
    for (int attempt = 0; attempt < 5; ++attempt) {
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < d; ++c) u(i, c) = rational_from_double(rng.gaussian());
        if (rank(u) == d && subspace_in_general_position(family, n, u)) break;
        if (attempt == 4) throw std::runtime_error("no general-position subspace in 5 attempts");
    }
    const Integer brute = chamber_faces_meeting_subspace(family, n, k, u, budget_from_flags(flags));
    const Integer formula = chamber_face_intersection_count(family, n, k, d);
    std::cout << "brute-force pairs: " << brute << "\nclosed form:       " << formula << "\n";
    if (brute != formula) {
        std::cout << "MISMATCH\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_export_sphere(const CommonFlags& flags) {
    const Family family = family_from_string(flags.family);
    PointConfig cfg = sample_config(distribution_from_string(flags.dist), family, flags.n, 3,
                                    {flags.seed, 0});
    write_output(flags, export_sphere_json(cfg, budget_from_flags(flags)));
    return kExitOk;
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_nd) {
    cmd->add_option("--family", flags.family, "A, B, or Generic");
    auto* n_opt = cmd->add_option("--n", flags.n, "number of points");
    auto* d_opt = cmd->add_option("--d", flags.d, "ambient dimension");
    if (needs_nd) {
        n_opt->required();
        d_opt->required();
    }
    cmd->add_option("--k", flags.k, "face dimension parameter");
    cmd->add_option("--j", flags.j, "quermass / intrinsic volume index");
    cmd->add_option("--dist", flags.dist, "gaussian | sphere | symm-exp");
    cmd->add_option("--trials", flags.trials, "Monte Carlo trials");
    cmd->add_option("--cones", flags.cones, "cone draws for per-cone quantities");
    cmd->add_option("--seed", flags.seed, "RNG seed");
    cmd->add_option("--seeds", flags.seeds, "number of seeds for verify");
    cmd->add_option("--threads", flags.threads, "worker threads (or WEYL_CONES_THREADS)");
    cmd->add_option("--format", flags.format, "json | csv | text");
    cmd->add_option("--out", flags.out, "output file (default stdout)");
    cmd->add_option("--input", flags.input, "input config JSON file");
    cmd->add_option("--max-candidates", flags.max_candidates, "enumeration candidate cap");
}

int validate_ranges(const std::string& subcommand, const CommonFlags& flags) {
    const Family family = family_from_string(flags.family);
    if (subcommand == "export-sphere") {
        if (flags.d != 0 && flags.d != 3) {
            std::cerr << "export-sphere requires d = 3\n";
            return kExitUsage;
        }
        return -1;
    }
    if (flags.n < 1 || flags.d < 2) {
        std::cerr << "need n >= 1 and d >= 2\n";
        return kExitUsage;
    }
    if (subcommand == "chamber-intersect") {
        if (flags.k < 1 || flags.k > flags.n || flags.d > flags.n) {
            std::cerr << "chamber-intersect: need 1 <= k <= n and d <= n\n";
            return kExitUsage;
        }
        return -1;
    }
    if (family == Family::A && flags.n < flags.d + 1) {
        std::cerr << "family A requires n >= d+1\n";
        return kExitUsage;
    }
    if (family == Family::B && flags.n < flags.d) {
        std::cerr << "family B requires n >= d\n";
        return kExitUsage;
    }
    return -1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and Monte Carlo estimation for conical tessellations"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string mc_quantity = "fk";

    CLI::App* tables = app.add_subcommand("tables", "print the closed-form counts and expectations");
    add_common(tables, flags, true);

    CLI::App* verify = app.add_subcommand("verify", "enumerate random configurations and compare");
    add_common(verify, flags, true);

    CLI::App* gp = app.add_subcommand("gp-check", "run both general-position criteria");
    add_common(gp, flags, false);

    CLI::App* mc = app.add_subcommand("montecarlo", "estimate an expectation and report the z-score");
    add_common(mc, flags, true);
    mc->add_option("--quantity", mc_quantity, "fk | Ykj | Uj | vj | lambda | dual_fk | acceptance");

    CLI::App* chamber = app.add_subcommand("chamber-intersect", "brute-force chamber-face counts");
    add_common(chamber, flags, true);

    CLI::App* sphere = app.add_subcommand("export-sphere", "emit d=3 great circles and cone polygons");
    add_common(sphere, flags, false);
    if (!sphere->get_option("--n")->count()) sphere->get_option("--n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        apply_threads(flags);
        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "gp-check" && flags.input.empty() && (flags.n < 1 || flags.d < 2)) {
            std::cerr << "gp-check needs --input or --family/--n/--d\n";
            return kExitUsage;
        }
        if (sub != "gp-check" || flags.input.empty()) {
            int rc = validate_ranges(sub, flags);
            if (rc >= 0) return rc;
        }
        if (sub == "tables") return cmd_tables(flags);
        if (sub == "verify") return cmd_verify(flags);
        if (sub == "gp-check") return cmd_gp_check(flags);
        if (sub == "montecarlo") return cmd_montecarlo(flags, mc_quantity);
        if (sub == "chamber-intersect") return cmd_chamber_intersect(flags);
        if (sub == "export-sphere") return cmd_export_sphere(flags);
        std::cerr << "unknown subcommand\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
