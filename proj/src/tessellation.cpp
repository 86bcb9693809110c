#include "weylcones/tessellation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylcones/parallel.hpp"

namespace weylcones {

namespace {

long long ll_factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<int> unrank_permutation(int n, long long idx) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        long long f = ll_factorial(n - 1 - i);
        long long q = idx / f;
        idx %= f;
        perm[i] = avail[static_cast<std::size_t>(q)];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(q));
    }
    return perm;
}

}  // namespace

PointConfig::PointConfig(Family fam, int dim, RatMatrix pts) : family(fam), d(dim), points(std::move(pts)) {
    if (d < 2) throw std::invalid_argument("PointConfig: need d >= 2");
    if (points.rows() != d) throw std::invalid_argument("PointConfig: points must have d coordinates");
    const int count = n();
    if (family == Family::A && count < d + 1)
        throw std::invalid_argument("PointConfig: family A needs n >= d+1");
    if (family == Family::B && count < d)
        throw std::invalid_argument("PointConfig: family B needs n >= d");
    if (family == Family::Generic)
        throw std::invalid_argument("PointConfig: Generic family has no point configuration");
}

int FaceRep::n() const {
    std::size_t total = zeros.size();
    for (const auto& g : groups) total += g.size();
    return static_cast<int>(total);
}

int FaceRep::dim(int d) const { return d - (n() - static_cast<int>(groups.size())); }

std::string FaceRep::key() const {
    std::ostringstream os;
    for (const auto& g : groups) {
        os << '|';
        for (int i : g) os << (family == Family::B && signs[i] < 0 ? '-' : '+') << i << ',';
    }
    os << 'z';
    for (int i : zeros) os << i << ',';
    return os.str();
}

Integer face_multiplicity(const FaceRep& rep) {
    Integer m = 1;
    for (const auto& g : rep.groups) m *= factorial(static_cast<int>(g.size()));
    if (rep.family == Family::B) {
        m *= factorial(static_cast<int>(rep.zeros.size()));
        m <<= static_cast<unsigned>(rep.zeros.size());
    }
    return m;
}

RatMatrix build_arrangement(const PointConfig& cfg) {
    const int n = cfg.n(), d = cfg.d;
    std::vector<RatVector> normals;
    auto add = [&](const RatVector& v) { normals.push_back(v); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add(cfg.points.col(i) - cfg.points.col(j));
    if (cfg.family == Family::B) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) add(cfg.points.col(i) + cfg.points.col(j));
        for (int i = 0; i < n; ++i) add(cfg.points.col(i));
    }
    RatMatrix rows(static_cast<Eigen::Index>(normals.size()), d);
    for (std::size_t i = 0; i < normals.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = normals[i].transpose();
    // the arrangement is well defined only if the normals span distinct hyperplanes
    for (std::size_t i = 0; i < normals.size(); ++i) {
        bool zero = true;
        for (int c = 0; c < d; ++c)
            if (normals[i](c) != 0) { zero = false; break; }
        if (zero) throw DegenerateConfigError("build_arrangement: zero normal (general position violated)");
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            RatMatrix pair(2, d);
            pair.row(0) = normals[i].transpose();
            pair.row(1) = normals[j].transpose();
            if (rank(pair) < 2)
                throw DegenerateConfigError(
                    "build_arrangement: proportional normals (general position violated)");
        }
    }
    return rows;
}

// --- general position -------------------------------------------------------

namespace {

bool all_subsets_full_rank(const RatMatrix& chain, int d) {
    const int m = static_cast<int>(chain.rows());
    if (m < d) return true;  // nothing of size d to test
    std::vector<int> comb(d);
    std::iota(comb.begin(), comb.end(), 0);
    RatMatrix sub(d, chain.cols());
    while (true) {
        for (int i = 0; i < d; ++i) sub.row(i) = chain.row(comb[i]);
        if (rank(sub) != d) return false;
        int i = d - 1;
        while (i >= 0 && comb[i] == m - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    return true;
}

/// Enumerates set partitions of {0..m-1} as restricted growth strings;
/// assign[i] is the block of element i, blocks numbered by first element.
void for_each_partition(int m, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> assign(m, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == m) {
            fn(assign, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            assign[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (m == 0)
        fn(assign, 0);
    else
        rec(0, 0);
}

/// Visits a basis (n x k columns) of every lattice subspace of dimension
/// >= 1 of the reflection arrangement; returns false to stop early.
bool for_each_lattice_subspace(Family family, int n,
                               const std::function<bool(const RatMatrix&, int)>& fn) {
    bool keep_going = true;
    if (family == Family::A) {
        for_each_partition(n, [&](const std::vector<int>& assign, int blocks) {
            if (!keep_going) return;
            RatMatrix basis = RatMatrix::Zero(n, blocks);
            for (int i = 0; i < n; ++i) basis(i, assign[i]) = 1;
            keep_going = fn(basis, blocks);
        });
        return keep_going;
    }
    // family B: choose the zero set, partition the rest, choose signs with
    // the first element of every block normalized to +1
    for (unsigned zero_mask = 0; zero_mask < (1u << n) && keep_going; ++zero_mask) {
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (!(zero_mask & (1u << i))) rest.push_back(i);
        const int m = static_cast<int>(rest.size());
        for_each_partition(m, [&](const std::vector<int>& assign, int blocks) {
            if (!keep_going || blocks == 0) return;
            std::vector<int> free_pos;  // positions whose sign may flip
            std::vector<bool> seen(blocks, false);
            for (int i = 0; i < m; ++i) {
                if (!seen[assign[i]])
                    seen[assign[i]] = true;
                else
                    free_pos.push_back(i);
            }
            const unsigned combos = 1u << free_pos.size();
            for (unsigned mask = 0; mask < combos && keep_going; ++mask) {
                RatMatrix basis = RatMatrix::Zero(n, blocks);
                for (int i = 0; i < m; ++i) basis(rest[i], assign[i]) = 1;
                for (std::size_t b = 0; b < free_pos.size(); ++b)
                    if (mask & (1u << b)) basis(rest[free_pos[b]], assign[free_pos[b]]) = -1;
                keep_going = fn(basis, blocks);
            }
        });
    }
    return keep_going;
}

}  // namespace

bool check_gp_chainwise(const PointConfig& cfg) {
    const int n = cfg.n(), d = cfg.d;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (cfg.family == Family::A) {
        RatMatrix chain(n - 1, d);
        do {
            if (perm[0] > perm[n - 1]) continue;  // reversal gives the negated chain
            for (int i = 0; i + 1 < n; ++i)
                chain.row(i) = (cfg.points.col(perm[i]) - cfg.points.col(perm[i + 1])).transpose();
            if (!all_subsets_full_rank(chain, d)) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    }
    RatMatrix chain(n, d);
    do {
        const unsigned combos = 1u << (n - 1);  // fix the first sign to +1
        for (unsigned mask = 0; mask < combos; ++mask) {
            std::vector<int> sign(n, 1);
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) sign[i] = -1;
            for (int i = 0; i + 1 < n; ++i)
                chain.row(i) = (sign[i] * cfg.points.col(perm[i]) -
                                sign[i + 1] * cfg.points.col(perm[i + 1]))
                                   .transpose();
            chain.row(n - 1) = (sign[n - 1] * cfg.points.col(perm[n - 1])).transpose();
            if (!all_subsets_full_rank(chain, d)) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

bool subspace_in_general_position(Family family, int n, const RatMatrix& u) {
    if (u.rows() != n) throw std::invalid_argument("subspace_in_general_position: bad ambient dim");
    const int du = static_cast<int>(u.cols());
    return for_each_lattice_subspace(family, n, [&](const RatMatrix& basis, int k) {
        const int expected = std::max(0, du - n + k);
        return intersection_dim(basis, u) == expected;
    });
}

bool check_gp_lattice(const PointConfig& cfg) {
    RatMatrix span = cfg.points.transpose();  // columns span L^perp in R^n
    if (rank(span) != cfg.d) return false;
    return subspace_in_general_position(cfg.family, cfg.n(), span);
}

std::vector<Integer> lattice_subspace_counts(Family family, int n) {
    std::vector<Integer> counts(static_cast<std::size_t>(n) + 1, Integer(0));
    for_each_lattice_subspace(family, n, [&](const RatMatrix&, int k) {
        counts[static_cast<std::size_t>(k)] += 1;
        return true;
    });
    if (family == Family::B) counts[0] = 1;  // the all-zero subspace
    return counts;
}

// --- cones and faces --------------------------------------------------------

RatMatrix ordering_rows(const PointConfig& cfg, const SignedOrdering& ordering) {
    const int n = cfg.n(), d = cfg.d;
    const bool with_tail = cfg.family == Family::B;
    RatMatrix rows(with_tail ? n : n - 1, d);
    for (int i = 0; i + 1 < n; ++i)
        rows.row(i) = (static_cast<int>(ordering.signs[i]) * cfg.points.col(ordering.perm[i]) -
                       static_cast<int>(ordering.signs[i + 1]) * cfg.points.col(ordering.perm[i + 1]))
                          .transpose();
    if (with_tail)
        rows.row(n - 1) =
            (static_cast<int>(ordering.signs[n - 1]) * cfg.points.col(ordering.perm[n - 1])).transpose();
    return rows;
}

namespace {

FaceRep rep_from_grouping(const PointConfig& cfg, const SignedOrdering& ordering,
                          const std::vector<int>& group_ends, int zero_from) {
    // group_ends: 1-based end positions of the nonzero groups; positions at
    // or beyond zero_from belong to the zero block.
    FaceRep rep;
    rep.family = cfg.family;
    rep.signs.assign(cfg.n(), 1);
    int begin = 0;
    for (int end : group_ends) {
        std::vector<int> group;
        for (int p = begin; p < end; ++p) {
            group.push_back(ordering.perm[p]);
            rep.signs[ordering.perm[p]] = ordering.signs[p];
        }
        std::sort(group.begin(), group.end());
        rep.groups.push_back(std::move(group));
        begin = end;
    }
    for (int p = zero_from; p < cfg.n(); ++p) rep.zeros.push_back(ordering.perm[p]);
    std::sort(rep.zeros.begin(), rep.zeros.end());
    return rep;
}

struct FaceSystem {
    RatMatrix eq;
    RatMatrix le;
};

FaceSystem face_system(const PointConfig& cfg, const FaceRep& rep) {
    const int d = cfg.d;
    std::vector<RatVector> eq_rows, le_rows;
    auto signed_point = [&](int i) {
        return RatVector(static_cast<int>(rep.signs[i]) * cfg.points.col(i));
    };
    for (const auto& g : rep.groups)
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            eq_rows.push_back(signed_point(g[i]) - signed_point(g[i + 1]));
    for (int z : rep.zeros) eq_rows.push_back(cfg.points.col(z));
    for (std::size_t t = 0; t + 1 < rep.groups.size(); ++t)
        le_rows.push_back(signed_point(rep.groups[t].front()) -
                          signed_point(rep.groups[t + 1].front()));
    if (cfg.family == Family::B && !rep.groups.empty())
        le_rows.push_back(signed_point(rep.groups.back().front()));

    FaceSystem sys;
    sys.eq = RatMatrix(static_cast<Eigen::Index>(eq_rows.size()), d);
    for (std::size_t i = 0; i < eq_rows.size(); ++i) sys.eq.row(static_cast<Eigen::Index>(i)) = eq_rows[i].transpose();
    sys.le = RatMatrix(static_cast<Eigen::Index>(le_rows.size()), d);
    for (std::size_t i = 0; i < le_rows.size(); ++i) sys.le.row(static_cast<Eigen::Index>(i)) = le_rows[i].transpose();
    return sys;
}

long long candidate_count(const PointConfig& cfg) {
    long long total = ll_factorial(cfg.n());
    if (cfg.family == Family::B) {
        if (cfg.n() >= 62) return std::numeric_limits<long long>::max();
        total *= (1ll << cfg.n());
    }
    return total;
}

void check_budget(const PointConfig& cfg, const Budget& budget) {
    const int cap = cfg.family == Family::A ? budget.max_n_a : budget.max_n_b;
    if (cfg.n() > cap) {
        std::ostringstream os;
        os << "enumeration budget exceeded: n=" << cfg.n() << " above the family cap " << cap;
        throw BudgetError(os.str());
    }
    if (candidate_count(cfg) > budget.max_candidates) {
        std::ostringstream os;
        os << "enumeration budget exceeded: " << candidate_count(cfg) << " candidate cones (cap "
           << budget.max_candidates << ")";
        throw BudgetError(os.str());
    }
}

void check_general_position(const PointConfig& cfg, const Budget& budget) {
    if (budget.trust_general_position) return;
    if (!check_gp_lattice(cfg))
        throw DegenerateConfigError("configuration is not in general position");
}

SignedOrdering ordering_from_index(const PointConfig& cfg, long long idx) {
    SignedOrdering ordering;
    const long long perms = ll_factorial(cfg.n());
    long long sign_idx = idx / perms;
    ordering.perm = unrank_permutation(cfg.n(), idx % perms);
    ordering.signs.assign(cfg.n(), 1);
    if (cfg.family == Family::B)
        for (int i = 0; i < cfg.n(); ++i)
            if (sign_idx & (1ll << i)) ordering.signs[i] = -1;
    return ordering;
}

}  // namespace

ConeH face_cone(const PointConfig& cfg, const FaceRep& rep) {
    FaceSystem sys = face_system(cfg, rep);
    ConeH cone;
    cone.ambient_dim = cfg.d;
    cone.eq = std::move(sys.eq);
    cone.le = std::move(sys.le);
    return cone;
}

bool is_nontrivial_face(const PointConfig& cfg, const FaceRep& rep) {
    FaceSystem sys = face_system(cfg, rep);
    if (sys.eq.rows() == 0) return feasible(RatMatrix(0, cfg.d), RatMatrix(0, cfg.d), sys.le);
    RatMatrix kernel = kernel_basis(sys.eq);
    if (kernel.cols() == 0) return false;
    return feasible(RatMatrix(0, kernel.cols()), RatMatrix(0, kernel.cols()),
                    RatMatrix(sys.le * kernel));
}

std::vector<SignedOrdering> enumerate_cones(const PointConfig& cfg, const Budget& budget) {
    check_budget(cfg, budget);
    check_general_position(cfg, budget);
    const long long total = candidate_count(cfg);
    const int threads = std::max(1, thread_count());
    std::vector<std::vector<SignedOrdering>> buckets(static_cast<std::size_t>(threads));
    parallel_stripes(total, [&](int stripe, long long begin, long long end) {
        auto& out = buckets[static_cast<std::size_t>(stripe)];
        for (long long idx = begin; idx < end; ++idx) {
            SignedOrdering ordering = ordering_from_index(cfg, idx);
            RatMatrix rows = ordering_rows(cfg, ordering);
            if (feasible(RatMatrix(0, cfg.d), RatMatrix(0, cfg.d), rows))
                out.push_back(std::move(ordering));
        }
    });
    std::vector<SignedOrdering> cones;
    for (auto& b : buckets)
        for (auto& o : b) cones.push_back(std::move(o));
    return cones;
}

std::vector<FaceRep> cone_faces(const PointConfig& cfg, const SignedOrdering& ordering, int k) {
    const int n = cfg.n(), d = cfg.d;
    if (k < 1 || k > d) throw std::invalid_argument("cone_faces: need 1 <= k <= d");
    std::vector<FaceRep> out;
    const int groups = n - d + k;
    if (cfg.family == Family::A) {
        if (groups < 1 || groups > n) return out;
        // choose group end positions 0 < e_1 < ... < e_{g-1} < n, last group ends at n
        std::vector<int> ends(groups - 1);
        std::iota(ends.begin(), ends.end(), 1);
        while (true) {
            std::vector<int> group_ends(ends);
            group_ends.push_back(n);
            FaceRep rep = rep_from_grouping(cfg, ordering, group_ends, n);
            if (is_nontrivial_face(cfg, rep)) out.push_back(std::move(rep));
            int i = groups - 2;
            while (i >= 0 && ends[i] == n - (groups - 1 - i)) --i;
            if (i < 0 || groups == 1) break;
            ++ends[i];
            for (int j = i + 1; j < groups - 1; ++j) ends[j] = ends[j - 1] + 1;
        }
        return out;
    }
    if (groups < 1 || groups > n) return out;
    // choose 1-based end positions l_1 < ... < l_m <= n; the suffix is zeroed
    std::vector<int> ends(groups);
    std::iota(ends.begin(), ends.end(), 1);
    while (true) {
        FaceRep rep = rep_from_grouping(cfg, ordering, ends, ends.back());
        if (is_nontrivial_face(cfg, rep)) out.push_back(std::move(rep));
        int i = groups - 1;
        while (i >= 0 && ends[i] == n - (groups - 1 - i)) --i;
        if (i < 0) break;
        ++ends[i];
        for (int j = i + 1; j < groups; ++j) ends[j] = ends[j - 1] + 1;
    }
    return out;
}

namespace {

std::vector<FaceRep> cones_to_face_reps(const PointConfig& cfg,
                                        const std::vector<SignedOrdering>& cones) {
    std::vector<FaceRep> reps;
    reps.reserve(cones.size());
    for (const auto& ordering : cones) {
        std::vector<int> ends(cfg.n());
        std::iota(ends.begin(), ends.end(), 1);
        reps.push_back(rep_from_grouping(cfg, ordering, ends, cfg.n()));
    }
    return reps;
}

/// One-step coarsenings: merge two adjacent groups, or absorb the last
/// group into the zero block (family B).
std::vector<FaceRep> coarsenings(const FaceRep& face) {
    std::vector<FaceRep> out;
    const std::size_t m = face.groups.size();
    for (std::size_t t = 0; t + 1 < m; ++t) {
        FaceRep merged = face;
        auto& left = merged.groups[t];
        left.insert(left.end(), merged.groups[t + 1].begin(), merged.groups[t + 1].end());
        std::sort(left.begin(), left.end());
        merged.groups.erase(merged.groups.begin() + static_cast<std::ptrdiff_t>(t) + 1);
        out.push_back(std::move(merged));
    }
    if (face.family == Family::B && m >= 1) {
        FaceRep absorbed = face;
        for (int i : absorbed.groups.back()) {
            absorbed.zeros.push_back(i);
            absorbed.signs[i] = 1;
        }
        std::sort(absorbed.zeros.begin(), absorbed.zeros.end());
        absorbed.groups.pop_back();
        out.push_back(std::move(absorbed));
    }
    return out;
}

std::vector<FaceRep> descend_level(const PointConfig& cfg, const std::vector<FaceRep>& upper) {
    std::map<std::string, FaceRep> candidates;
    for (const auto& face : upper)
        for (auto& cand : coarsenings(face)) {
            std::string key = cand.key();
            candidates.emplace(std::move(key), std::move(cand));
        }
    std::vector<FaceRep> ordered;
    ordered.reserve(candidates.size());
    for (auto& [key, rep] : candidates) ordered.push_back(std::move(rep));

    const long long total = static_cast<long long>(ordered.size());
    const int threads = std::max(1, thread_count());
    std::vector<std::vector<char>> verdict(static_cast<std::size_t>(threads));
    for (auto& v : verdict) v.assign(ordered.size(), 0);
    parallel_stripes(total, [&](int stripe, long long begin, long long end) {
        for (long long i = begin; i < end; ++i)
            verdict[static_cast<std::size_t>(stripe)][static_cast<std::size_t>(i)] =
                is_nontrivial_face(cfg, ordered[static_cast<std::size_t>(i)]) ? 1 : 0;
    });
    std::vector<FaceRep> faces;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        bool keep = false;
        for (const auto& v : verdict) keep = keep || v[i];
        if (keep) faces.push_back(std::move(ordered[i]));
    }
    return faces;
}

}  // namespace

std::vector<FaceRep> enumerate_faces(const PointConfig& cfg, int k, const Budget& budget) {
    Tessellation tess(cfg, budget);
    return tess.faces(k);
}

ConeFaceSet cone_projection_faces(const PointConfig& cfg, const SignedOrdering& ordering) {
    const int n = cfg.n(), d = cfg.d;
    ConeFaceSet set;
    set.rows = ordering_rows(cfg, ordering);
    const int nrows = static_cast<int>(set.rows.rows());

    // the cone itself
    set.faces.push_back(ProjectionFace{d, {}});
    set.face_dims.push_back(d);

    for (int k = d - 1; k >= 1; --k) {
        const int groups = n - d + k;
        if (groups < 1) continue;
        for (const FaceRep& rep : cone_faces(cfg, ordering, k)) {
            // recover the active rows of this cone on the face: gaps inside
            // groups, gaps inside the zero suffix, and the trailing row when
            // the suffix is nonempty
            std::vector<bool> in_zero(static_cast<std::size_t>(n), false);
            for (int z : rep.zeros) in_zero[static_cast<std::size_t>(z)] = true;
            std::vector<int> group_of(static_cast<std::size_t>(n), -1);
            for (std::size_t t = 0; t < rep.groups.size(); ++t)
                for (int i : rep.groups[t]) group_of[static_cast<std::size_t>(i)] = static_cast<int>(t);
            ProjectionFace face;
            face.dim = k;
            for (int i = 0; i + 1 < n; ++i) {
                const int a = ordering.perm[i], b = ordering.perm[i + 1];
                const bool same_group = group_of[a] >= 0 && group_of[a] == group_of[b];
                const bool both_zero = in_zero[a] && in_zero[b];
                if (same_group || both_zero) face.active.push_back(i);
            }
            if (cfg.family == Family::B && !rep.zeros.empty()) face.active.push_back(n - 1);
            set.faces.push_back(std::move(face));
            set.face_dims.push_back(k);
        }
    }

    ProjectionFace apex;
    apex.dim = 0;
    for (int i = 0; i < nrows; ++i) apex.active.push_back(i);
    set.faces.push_back(std::move(apex));
    set.face_dims.push_back(0);
    return set;
}

Integer incidence_sum_via_faces(const PointConfig& cfg, int k, const Budget& budget) {
    Tessellation tess(cfg, budget);
    return tess.incidence_via_faces(k);
}

Integer incidence_sum_via_cones(const PointConfig& cfg, int k, const Budget& budget) {
    Tessellation tess(cfg, budget);
    return tess.incidence_via_cones(k);
}

Integer chamber_faces_meeting_subspace(Family family, int n, int k, const RatMatrix& u,
                                       const Budget& budget) {
    if (k < 1 || k > n) throw std::invalid_argument("chamber_faces_meeting_subspace: bad k");
    if (u.rows() != n) throw std::invalid_argument("chamber_faces_meeting_subspace: bad subspace");
    if (family == Family::Generic)
        throw std::invalid_argument("chamber_faces_meeting_subspace: Generic unsupported");
    const int cap = family == Family::A ? budget.max_n_a : budget.max_n_b;
    if (n > cap) throw BudgetError("chamber_faces_meeting_subspace: n above the family cap");

    Integer total = 0;
    const int d = static_cast<int>(u.cols());

    // iterate ordered partitions (with signs and zero block for family B)
    auto visit_rep = [&](const std::vector<std::vector<int>>& blocks,
                         const std::vector<int>& sign, const std::vector<int>& zeros) {
        std::vector<RatVector> eq_rows, le_rows;
        auto unit = [&](int i, int s) {
            RatVector e = RatVector::Zero(n);
            e(i) = s;
            return e;
        };
        for (const auto& blk : blocks)
            for (std::size_t i = 0; i + 1 < blk.size(); ++i)
                eq_rows.push_back(unit(blk[i], sign[blk[i]]) - unit(blk[i + 1], sign[blk[i + 1]]));
        for (int z : zeros) eq_rows.push_back(unit(z, 1));
        for (std::size_t t = 0; t + 1 < blocks.size(); ++t)
            le_rows.push_back(unit(blocks[t].front(), sign[blocks[t].front()]) -
                              unit(blocks[t + 1].front(), sign[blocks[t + 1].front()]));
        if (family == Family::B && !blocks.empty())
            le_rows.push_back(unit(blocks.back().front(), sign[blocks.back().front()]));

        ConeH cone;
        cone.ambient_dim = n;
        cone.eq = RatMatrix(static_cast<Eigen::Index>(eq_rows.size()), n);
        for (std::size_t i = 0; i < eq_rows.size(); ++i)
            cone.eq.row(static_cast<Eigen::Index>(i)) = eq_rows[i].transpose();
        cone.le = RatMatrix(static_cast<Eigen::Index>(le_rows.size()), n);
        for (std::size_t i = 0; i < le_rows.size(); ++i)
            cone.le.row(static_cast<Eigen::Index>(i)) = le_rows[i].transpose();

        if (!meets_subspace_nontrivially(cone, u)) return;
        Integer mult = 1;
        for (const auto& blk : blocks) mult *= factorial(static_cast<int>(blk.size()));
        if (family == Family::B) {
            mult *= factorial(static_cast<int>(zeros.size()));
            mult <<= static_cast<unsigned>(zeros.size());
        }
        total += mult;
    };

    std::vector<int> plus(n, 1);
    if (family == Family::A) {
        for_each_partition(n, [&](const std::vector<int>& assign, int nblocks) {
            if (nblocks != k) return;
            std::vector<std::vector<int>> base(static_cast<std::size_t>(nblocks));
            for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(assign[i])].push_back(i);
            std::vector<int> order(nblocks);
            std::iota(order.begin(), order.end(), 0);
            do {
                std::vector<std::vector<int>> blocks;
                for (int b : order) blocks.push_back(base[static_cast<std::size_t>(b)]);
                visit_rep(blocks, plus, {});
            } while (std::next_permutation(order.begin(), order.end()));
        });
        return total;
    }

    for (unsigned zero_mask = 0; zero_mask < (1u << n); ++zero_mask) {
        std::vector<int> rest, zeros;
        for (int i = 0; i < n; ++i)
            (zero_mask & (1u << i) ? zeros : rest).push_back(i);
        const int m = static_cast<int>(rest.size());
        if (m < k) continue;
        for_each_partition(m, [&](const std::vector<int>& assign, int nblocks) {
            if (nblocks != k) return;
            std::vector<std::vector<int>> base(static_cast<std::size_t>(nblocks));
            for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(assign[i])].push_back(rest[i]);
            std::vector<int> order(nblocks);
            std::iota(order.begin(), order.end(), 0);
            do {
                std::vector<std::vector<int>> blocks;
                for (int b : order) blocks.push_back(base[static_cast<std::size_t>(b)]);
                const unsigned combos = 1u << m;
                for (unsigned mask = 0; mask < combos; ++mask) {
                    std::vector<int> sign(n, 1);
                    for (int i = 0; i < m; ++i)
                        if (mask & (1u << i)) sign[rest[i]] = -1;
                    visit_rep(blocks, sign, zeros);
                }
            } while (std::next_permutation(order.begin(), order.end()));
        });
    }
    return total;
}

// --- Tessellation cache -------------------------------------------------------

Tessellation::Tessellation(PointConfig cfg, Budget budget)
    : cfg_(std::move(cfg)), budget_(budget) {}

const std::vector<SignedOrdering>& Tessellation::cones() {
    if (!cones_done_) {
        cones_ = enumerate_cones(cfg_, budget_);
        cones_done_ = true;
    }
    return cones_;
}

const std::vector<FaceRep>& Tessellation::faces(int k) {
    if (k < 1 || k > cfg_.d) throw std::invalid_argument("Tessellation::faces: need 1 <= k <= d");
    auto it = faces_.find(k);
    if (it != faces_.end()) return it->second;
    if (k == cfg_.d) {
        faces_[k] = cones_to_face_reps(cfg_, cones());
        return faces_[k];
    }
    const std::vector<FaceRep>& upper = faces(k + 1);
    faces_[k] = descend_level(cfg_, upper);
    return faces_[k];
}

Integer Tessellation::incidence_via_faces(int k) {
    Integer total = 0;
    for (const FaceRep& rep : faces(k)) total += face_multiplicity(rep);
    return total;
}

Integer Tessellation::incidence_via_cones(int k) {
    Integer total = 0;
    for (const SignedOrdering& ordering : cones())
        total += static_cast<long long>(cone_faces(cfg_, ordering, k).size());
    return total;
}

}  // namespace weylcones
