#include "weylcones/sphere_export.hpp"

#include <cmath>

#include <json.hpp>

namespace weylcones {

using nlohmann::json;

namespace {

std::vector<double> unit(const std::vector<double>& v) {
    double n = 0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

std::vector<double> ray_direction(const PointConfig& cfg, const FaceRep& rep) {
    ConeH fc = face_cone(cfg, rep);
    RatMatrix kernel = kernel_basis(fc.eq);
    if (kernel.cols() != 1) throw std::runtime_error("export: ray with non-1-dimensional span");
    RatVector dir = kernel.col(0);
    for (Eigen::Index i = 0; i < fc.le.rows(); ++i) {
        const Rational v = fc.le.row(i).dot(dir.transpose());
        if (v != 0) {
            if (v > 0) dir = -dir;
            break;
        }
    }
    std::vector<double> out(3);
    for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = to_double(dir(i));
    return unit(out);
}

}  // namespace

std::string export_sphere_json(const PointConfig& cfg, const Budget& budget) {
    if (cfg.d != 3) throw std::invalid_argument("export_sphere_json: requires d = 3");
    RatMatrix normals = build_arrangement(cfg);

    json circles = json::array();
    for (Eigen::Index i = 0; i < normals.rows(); ++i) {
        std::vector<double> n(3);
        for (int c = 0; c < 3; ++c) n[static_cast<std::size_t>(c)] = to_double(normals(i, c));
        n = unit(n);
        // a frame of the plane orthogonal to n
        std::vector<double> helper = std::fabs(n[0]) < 0.9 ? std::vector<double>{1, 0, 0}
                                                           : std::vector<double>{0, 1, 0};
        std::vector<double> u(3), v(3);
        u[0] = n[1] * helper[2] - n[2] * helper[1];
        u[1] = n[2] * helper[0] - n[0] * helper[2];
        u[2] = n[0] * helper[1] - n[1] * helper[0];
        u = unit(u);
        v[0] = n[1] * u[2] - n[2] * u[1];
        v[1] = n[2] * u[0] - n[0] * u[2];
        v[2] = n[0] * u[1] - n[1] * u[0];
        circles.push_back({{"normal", n}, {"u", u}, {"v", v}});
    }

    Tessellation tess(cfg, budget);
    json cones = json::array();
    for (const SignedOrdering& ordering : tess.cones()) {
        std::vector<std::vector<double>> rays;
        for (const FaceRep& rep : cone_faces(cfg, ordering, 1)) rays.push_back(ray_direction(cfg, rep));
        // cyclic order around the cone's interior direction
        std::vector<double> center(3, 0.0);
        for (const auto& r : rays)
            for (int i = 0; i < 3; ++i) center[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
        center = unit(center);
        std::vector<double> axis_u = std::fabs(center[0]) < 0.9 ? std::vector<double>{1, 0, 0}
                                                                : std::vector<double>{0, 1, 0};
        std::vector<double> e1(3), e2(3);
        e1[0] = center[1] * axis_u[2] - center[2] * axis_u[1];
        e1[1] = center[2] * axis_u[0] - center[0] * axis_u[2];
        e1[2] = center[0] * axis_u[1] - center[1] * axis_u[0];
        e1 = unit(e1);
        e2[0] = center[1] * e1[2] - center[2] * e1[1];
        e2[1] = center[2] * e1[0] - center[0] * e1[2];
        e2[2] = center[0] * e1[1] - center[1] * e1[0];
        std::vector<std::pair<double, std::size_t>> order;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            double x = 0, y = 0;
            for (int i = 0; i < 3; ++i) {
                x += rays[r][static_cast<std::size_t>(i)] * e1[static_cast<std::size_t>(i)];
                y += rays[r][static_cast<std::size_t>(i)] * e2[static_cast<std::size_t>(i)];
            }
            order.emplace_back(std::atan2(y, x), r);
        }
        std::sort(order.begin(), order.end());
        json vertices = json::array();
        for (const auto& [angle, r] : order) vertices.push_back(rays[r]);

        json cone;
        json perm = json::array();
        for (int p : ordering.perm) perm.push_back(p + 1);
        cone["permutation"] = std::move(perm);
        if (cfg.family == Family::B) {
            json signs = json::array();
            for (auto s : ordering.signs) signs.push_back(static_cast<int>(s));
            cone["signs"] = std::move(signs);
        }
        cone["vertices"] = std::move(vertices);
        cones.push_back(std::move(cone));
    }

    json doc;
    doc["schema"] = 1;
    doc["family"] = family_name(cfg.family);
    doc["n"] = cfg.n();
    doc["d"] = 3;
    doc["hyperplane_count"] = static_cast<int>(normals.rows());
    doc["great_circles"] = std::move(circles);
    doc["cones"] = std::move(cones);
    return doc.dump(2) + "\n";
}

}  // namespace weylcones
