#include "weylcones/io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace weylcones {

using nlohmann::json;

namespace {

Rational coordinate_from_json(const json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(Integer(value.get<long long>()));
    if (value.is_number()) return rational_from_double(value.get<double>());
    throw std::invalid_argument("point coordinate must be a number or a rational string");
}

}  // namespace

PointConfig parse_point_config(const std::string& json_text) {
    json doc = json::parse(json_text);
    const Family family = family_from_string(doc.at("family").get<std::string>());
    const int d = doc.at("d").get<int>();
    const auto& pts = doc.at("points");
    if (!pts.is_array() || pts.empty())
        throw std::invalid_argument("config: points must be a nonempty array");
    const int n = static_cast<int>(pts.size());
    RatMatrix points(d, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = pts[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw std::invalid_argument("config: each point needs exactly d coordinates");
        for (int c = 0; c < d; ++c)
            points(c, i) = coordinate_from_json(row[static_cast<std::size_t>(c)]);
    }
    return PointConfig(family, d, std::move(points));
}

std::string point_config_to_json(const PointConfig& cfg) {
    json doc;
    doc["family"] = family_name(cfg.family);
    doc["d"] = cfg.d;
    json pts = json::array();
    for (int i = 0; i < cfg.n(); ++i) {
        json row = json::array();
        for (int c = 0; c < cfg.d; ++c) row.push_back(rational_to_string(cfg.points(c, i)));
        pts.push_back(std::move(row));
    }
    doc["points"] = std::move(pts);
    return doc.dump();
}

ExperimentSpec experiment_spec_from_json(const std::string& json_text) {
    json doc = json::parse(json_text);
    ExperimentSpec spec;
    spec.quantity = doc.at("quantity").get<std::string>();
    spec.family = family_from_string(doc.at("family").get<std::string>());
    spec.n = doc.at("n").get<int>();
    spec.d = doc.at("d").get<int>();
    if (doc.contains("k")) spec.k = doc["k"].get<int>();
    if (doc.contains("j")) spec.j = doc["j"].get<int>();
    if (doc.contains("dist")) spec.dist = distribution_from_string(doc["dist"].get<std::string>());
    spec.trials = doc.at("trials").get<long long>();
    if (doc.contains("cones")) spec.cones = doc["cones"].get<long long>();
    if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
    return spec;
}

std::string build_git_hash() {
#ifdef WEYLCONES_GIT_HASH
    return WEYLCONES_GIT_HASH;
#else
    return "unknown";
#endif
}

namespace {

json spec_to_json(const ExperimentSpec& spec) {
    json e;
    e["quantity"] = spec.quantity;
    e["family"] = family_name(spec.family);
    e["n"] = spec.n;
    e["d"] = spec.d;
    if (spec.k >= 0) e["k"] = spec.k;
    if (spec.j >= 0) e["j"] = spec.j;
    e["dist"] = distribution_name(spec.dist);
    e["trials"] = spec.trials;
    e["cones"] = spec.cones;
    e["seed"] = spec.seed;
    return e;
}

json estimate_to_json(const Estimate& est) {
    json r;
    r["mean"] = est.mean;
    r["stderr"] = est.std_error;
    r["trials"] = est.trials;
    r["resamples"] = est.resamples;
    if (est.has_target) {
        r["target"] = rational_to_string(est.target);
        r["target_decimal"] = rational_to_decimal(est.target);
        const double z = est.z_score();
        if (std::isfinite(z))
            r["z"] = z;
        else
            r["z"] = nullptr;
    }
    return r;
}

}  // namespace

std::string report_to_json(const Report& report) {
    json doc;
    doc["schema"] = 1;
    doc["experiment"] = spec_to_json(report.spec);
    doc["result"] = estimate_to_json(report.estimate);
    doc["provenance"] = {{"tool", "weylcones"}, {"git", build_git_hash()}};
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const Report& report) {
    std::ostringstream os;
    os << "quantity,family,n,d,k,j,dist,trials,cones,seed,mean,stderr,target,z\n";
    const Estimate& est = report.estimate;
    os << report.spec.quantity << ',' << family_name(report.spec.family) << ',' << report.spec.n
       << ',' << report.spec.d << ',' << report.spec.k << ',' << report.spec.j << ','
       << distribution_name(report.spec.dist) << ',' << report.spec.trials << ','
       << report.spec.cones << ',' << report.spec.seed << ',';
    os.precision(17);
    os << est.mean << ',' << est.std_error << ',';
    if (est.has_target) {
        os << rational_to_string(est.target) << ',';
        const double z = est.z_score();
        if (std::isfinite(z)) os << z;
    } else {
        os << ',';
    }
    os << "\n";
    return os.str();
}

}  // namespace weylcones
