#ifndef WEYLCONES_SPHERE_EXPORT_HPP
#define WEYLCONES_SPHERE_EXPORT_HPP

#include <string>

#include "weylcones/tessellation.hpp"

namespace weylcones {

/**
 * Figure data for d = 3: every arrangement hyperplane as a great circle
 * (unit normal plus an orthonormal frame of the plane) and every cone of
 * the tessellation as the cyclically ordered unit directions of its rays.
 */
std::string export_sphere_json(const PointConfig& cfg, const Budget& budget = {});

}  // namespace weylcones

#endif
