#include "weylcones/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace weylcones {

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::Generic: return "Generic";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "Generic" || s == "generic" || s == "G" || s == "g") return Family::Generic;
    throw std::invalid_argument("unknown family '" + s + "'");
}

namespace {

// Triangular memo tables, grown on demand. Each row n holds entries for
// k = 0..n. Guarded by one mutex; all callers see fully built rows only.
struct Triangle {
    std::vector<std::vector<Integer>> rows;
};

std::mutex table_mutex;
Triangle first_a, first_b, second_a;

void grow_first_a(int n) {
    auto& rows = first_a.rows;
    if (rows.empty()) rows.push_back({Integer(1)});  // empty product
    while (static_cast<int>(rows.size()) <= n) {
        int m = static_cast<int>(rows.size());
        const auto& prev = rows.back();
        std::vector<Integer> cur(m + 1, Integer(0));
        // multiply by (t + m - 1)
        for (int k = 0; k <= m - 1; ++k) {
            cur[k] += prev[k] * (m - 1);
            cur[k + 1] += prev[k];
        }
        rows.push_back(std::move(cur));
    }
}

void grow_first_b(int n) {
    auto& rows = first_b.rows;
    if (rows.empty()) rows.push_back({Integer(1)});
    while (static_cast<int>(rows.size()) <= n) {
        int m = static_cast<int>(rows.size());
        const auto& prev = rows.back();
        std::vector<Integer> cur(m + 1, Integer(0));
        // multiply by (t + 2m - 1)
        for (int k = 0; k <= m - 1; ++k) {
            cur[k] += prev[k] * (2 * m - 1);
            cur[k + 1] += prev[k];
        }
        rows.push_back(std::move(cur));
    }
}

void grow_second_a(int n) {
    auto& rows = second_a.rows;
    if (rows.empty()) rows.push_back({Integer(1)});
    while (static_cast<int>(rows.size()) <= n) {
        int m = static_cast<int>(rows.size());
        const auto& prev = rows.back();
        std::vector<Integer> cur(m + 1, Integer(0));
        for (int k = 1; k <= m; ++k) {
            cur[k] = (k - 1 < static_cast<int>(prev.size()) ? prev[k - 1] : Integer(0));
            if (k < static_cast<int>(prev.size())) cur[k] += Integer(k) * prev[k];
        }
        rows.push_back(std::move(cur));
    }
}

Integer lookup(Triangle& tri, void (*grow)(int), int n, long k) {
    if (k < 0 || k > n) return 0;
    std::lock_guard<std::mutex> lock(table_mutex);
    grow(n);
    return tri.rows[n][static_cast<std::size_t>(k)];
}

Integer stirling_second_b(int n, long k) {
    if (k < 0 || k > n) return 0;
    Integer total = 0;
    for (long r = k; r <= n; ++r) {
        Integer term = binomial(n, static_cast<int>(r)) *
                       lookup(second_a, grow_second_a, static_cast<int>(r), k);
        total += term << static_cast<unsigned>(r - k);
    }
    return total;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Integer schlaefli_count(int n, int d) {
    Integer total = 0;
    for (int i = 0; i <= d - 1; ++i) total += binomial(n - 1, i);
    return 2 * total;
}

// D^A(n,d) or D^B(n,d): twice the alternating tail of the first-kind row.
Integer weyl_count(Family family, int n, int d) {
    Integer total = 0;
    for (long k = n - d + 1; k <= n; k += 2)
        total += stirling(family == Family::A ? StirlingKind::FirstA : StirlingKind::FirstB, n, k);
    return 2 * total;
}

}  // namespace

Integer factorial(int n) {
    require(n >= 0, "factorial: negative argument");
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;
    }
    return b;
}

Integer stirling(StirlingKind kind, int n, long k) {
    require(n >= 0, "stirling: n must be nonnegative");
    switch (kind) {
        case StirlingKind::FirstA:
            if (k < 1 || k > n) return 0;  // convention, including [0,0] = 0
            return lookup(first_a, grow_first_a, n, k);
        case StirlingKind::FirstB:
            return lookup(first_b, grow_first_b, n, k);
        case StirlingKind::SecondA:
            return lookup(second_a, grow_second_a, n, k);
        case StirlingKind::SecondB:
            return stirling_second_b(n, k);
    }
    return 0;
}

Integer region_count(Family family, int n, int d) {
    require(n >= 1 && d >= 1, "region_count: need n >= 1 and d >= 1");
    if (family == Family::Generic) return schlaefli_count(n, d);
    return weyl_count(family, n, d);
}

Integer total_face_count(Family family, int n, int d, int k) {
    require(k >= 1 && k <= d, "total_face_count: need 1 <= k <= d");
    if (family == Family::Generic)
        throw std::invalid_argument("total_face_count: Generic family unsupported");
    StirlingKind second = family == Family::A ? StirlingKind::SecondA : StirlingKind::SecondB;
    return stirling(second, n, n - d + k) * weyl_count(family, n - d + k, k);
}

Integer incidence_count(Family family, int n, int d, int k) {
    require(k >= 1 && k <= d, "incidence_count: need 1 <= k <= d");
    Integer orderings = factorial(n) / factorial(n - d + k);
    if (family == Family::A)
        return binomial(n - 1, d - k) * orderings * weyl_count(Family::A, n - d + k, k);
    if (family == Family::B)
        return (Integer(1) << static_cast<unsigned>(d - k)) * binomial(n, d - k) * orderings *
               weyl_count(Family::B, n - d + k, k);
    throw std::invalid_argument("incidence_count: Generic family unsupported");
}

Integer chamber_face_intersection_count(Family family, int n, int k, int d) {
    require(k >= 1 && k <= n && d >= 1 && d <= n, "chamber_face_intersection_count: bad range");
    Integer per = factorial(n) / factorial(k);
    if (family == Family::A) {
        // With the full ambient space every face meets nontrivially; the
        // Stirling-sum formula below covers only d <= n-1, which is the
        // whole range the point-span construction can produce.
        if (d == n) return factorial(n) * binomial(n - 1, k - 1);
        // Stated via the Stirling sum; the displayed closed form equals
        // (n!/k!) C(n-1,k-1) D^A(k, d-n+k).
        Integer tail = 0;
        for (long i = n - d + 1; i <= k; i += 2) tail += stirling(StirlingKind::FirstA, k, i);
        return 2 * per * binomial(n - 1, k - 1) * tail;
    }
    if (family == Family::B) {
        Integer tail = 0;
        for (long i = n - d + 1; i <= k; i += 2) tail += stirling(StirlingKind::FirstB, k, i);
        return 2 * (Integer(1) << static_cast<unsigned>(n - k)) * binomial(n, k) * per * tail;
    }
    throw std::invalid_argument("chamber_face_intersection_count: Generic family unsupported");
}

Rational expected_face_count(Family family, int n, int d, int k) {
    require(k >= 1 && k <= d, "expected_face_count: need 1 <= k <= d");
    if (family == Family::Generic) {
        return Rational((Integer(1) << static_cast<unsigned>(d - k)) * binomial(n, d - k) *
                            schlaefli_count(n - d + k, k),
                        schlaefli_count(n, d));
    }
    Integer orderings = factorial(n) / factorial(n - d + k);
    Integer num = family == Family::A
                      ? binomial(n - 1, d - k) * weyl_count(Family::A, n - d + k, k) * orderings
                      : (Integer(1) << static_cast<unsigned>(d - k)) * binomial(n, d - k) *
                            weyl_count(Family::B, n - d + k, k) * orderings;
    return Rational(num, weyl_count(family, n, d));
}

Rational expected_size_functional(Family family, int n, int d, int k, int j) {
    require(j >= 1 && j <= k && k <= d, "expected_size_functional: need 1 <= j <= k <= d");
    if (family == Family::Generic) {
        require(n > k - j, "expected_size_functional: Generic needs n > k - j");
        return Rational((Integer(1) << static_cast<unsigned>(k - j)) * binomial(n, k - j) *
                            schlaefli_count(n - k + j, j),
                        2 * schlaefli_count(n, d));
    }
    Integer orderings = factorial(n) / factorial(n - k + j);
    Integer num = family == Family::A
                      ? binomial(n - 1, k - j) * weyl_count(Family::A, n - k + j, j) * orderings
                      : (Integer(1) << static_cast<unsigned>(k - j)) * binomial(n, k - j) *
                            weyl_count(Family::B, n - k + j, j) * orderings;
    return Rational(num, 2 * weyl_count(family, n, d));
}

Rational expected_quermass(Family family, int n, int d, int j) {
    require(j >= 0 && j <= d - 1, "expected_quermass: need 0 <= j <= d-1");
    if (family == Family::Generic)
        throw std::invalid_argument("expected_quermass: Generic family unsupported");
    return Rational(weyl_count(family, n, d - j), 2 * weyl_count(family, n, d));
}

Rational expected_intrinsic_volume(Family family, int n, int d, int j) {
    require(j >= 0 && j <= d, "expected_intrinsic_volume: need 0 <= j <= d");
    if (family == Family::Generic)
        throw std::invalid_argument("expected_intrinsic_volume: Generic family unsupported");
    if (j == 0)
        return Rational(weyl_count(family, n, d) - weyl_count(family, n, d - 1),
                        2 * weyl_count(family, n, d));
    StirlingKind first = family == Family::A ? StirlingKind::FirstA : StirlingKind::FirstB;
    return Rational(stirling(first, n, n - d + j), weyl_count(family, n, d));
}

Rational expected_angle_sum(Family family, int n, int d, int k) {
    require(k >= 1 && k <= d, "expected_angle_sum: need 1 <= k <= d");
    if (family == Family::Generic)
        throw std::invalid_argument("expected_angle_sum: Generic family unsupported");
    Integer orderings = factorial(n) / factorial(n - d + k);
    Integer num = family == Family::A
                      ? binomial(n - 1, d - k) * orderings
                      : (Integer(1) << static_cast<unsigned>(d - k)) * binomial(n, d - k) * orderings;
    return Rational(num, weyl_count(family, n, d));
}

Rational expected_dual_face_count(Family family, int n, int d, int k) {
    require(k >= 0 && k <= d - 1, "expected_dual_face_count: need 0 <= k <= d-1");
    if (family == Family::Generic)
        throw std::invalid_argument("expected_dual_face_count: Generic family unsupported");
    Integer orderings = factorial(n) / factorial(n - k);
    Integer num = family == Family::A
                      ? binomial(n - 1, k) * weyl_count(Family::A, n - k, d - k) * orderings
                      : (Integer(1) << static_cast<unsigned>(k)) * binomial(n, k) *
                            weyl_count(Family::B, n - k, d - k) * orderings;
    return Rational(num, weyl_count(family, n, d));
}

Rational expected_dual_quermass(Family family, int n, int d, int j) {
    require(j >= 1 && j <= d, "expected_dual_quermass: need 1 <= j <= d");
    if (family == Family::Generic)
        throw std::invalid_argument("expected_dual_quermass: Generic family unsupported");
    return Rational(weyl_count(family, n, d) - weyl_count(family, n, j),
                    2 * weyl_count(family, n, d));
}

Rational expected_dual_intrinsic_volume(Family family, int n, int d, int j) {
    require(j >= 0 && j <= d, "expected_dual_intrinsic_volume: need 0 <= j <= d");
    if (family == Family::Generic)
        throw std::invalid_argument("expected_dual_intrinsic_volume: Generic family unsupported");
    if (j == d)
        return Rational(weyl_count(family, n, d) - weyl_count(family, n, d - 1),
                        2 * weyl_count(family, n, d));
    StirlingKind first = family == Family::A ? StirlingKind::FirstA : StirlingKind::FirstB;
    return Rational(stirling(first, n, n - j), weyl_count(family, n, d));
}

Rational acceptance_probability(Family family, int n, int d) {
    require(n >= 1 && d >= 1, "acceptance_probability: need n >= 1 and d >= 1");
    if (family == Family::A) return Rational(weyl_count(Family::A, n, d), factorial(n));
    if (family == Family::B)
        return Rational(weyl_count(Family::B, n, d),
                        (Integer(1) << static_cast<unsigned>(n)) * factorial(n));
    throw std::invalid_argument("acceptance_probability: Generic family unsupported");
}

}  // namespace weylcones
