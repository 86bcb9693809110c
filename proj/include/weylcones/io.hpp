#ifndef WEYLCONES_IO_HPP
#define WEYLCONES_IO_HPP

#include <string>

#include "weylcones/estimators.hpp"
#include "weylcones/tessellation.hpp"

namespace weylcones {

/// Schema: {"family":"A"|"B","d":int,"points":[[num or "p/q",...],...]}.
/// Plain numbers are frozen to exact dyadic rationals; strings are parsed
/// as exact fractions.
PointConfig parse_point_config(const std::string& json_text);
std::string point_config_to_json(const PointConfig& cfg);

ExperimentSpec experiment_spec_from_json(const std::string& json_text);

/// Deterministic serialization: identical experiments produce identical
/// bytes regardless of worker count.
std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);

std::string build_git_hash();

}  // namespace weylcones

#endif
