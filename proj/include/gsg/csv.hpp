#pragma once

#include <string>

#include "gsg/linalg.hpp"

namespace gsg::csv {

/// Shortest decimal text that parses back to the same double.
std::string format(double value);

/// Components joined with `sep`.
std::string join(const Eigen::Ref<const Vector>& v, char sep = ',');

}  // namespace gsg::csv
