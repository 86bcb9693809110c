#ifndef WEYLCONES_MATRIX_HPP
#define WEYLCONES_MATRIX_HPP

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <initializer_list>

#include "weylcones/rational.hpp"

namespace weylcones {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    RatMatrix m(static_cast<Eigen::Index>(rows.size()),
                rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline RatVector rat_vector(std::initializer_list<Rational> entries) {
    RatVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& e : entries) v(i++) = e;
    return v;
}

}  // namespace weylcones

#endif
