#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/field.hpp"
#include "gsg/limits.hpp"

namespace gsg {

/// A test field with analytic derivatives and Lipschitz constants, plus the
/// regions it is studied on by default.
struct FieldEntry {
  std::string id;
  std::string formula;
  ScalarField field;
  RectDomain rect;
  BallDomain ball;
};

/// Seed used for the coefficients of the random affine and quadratic fields.
inline constexpr std::uint64_t kRegistrySeed = 20240917;

/// quad2, cubic2, affine2, affine3, quad3 and expsin2, in that order.
const std::vector<FieldEntry>& field_registry();

/// Throws UnknownId for an unregistered id.
const FieldEntry& find_field(std::string_view id);

/// One line per field: id, dimension, formula, default regions and the
/// Lipschitz constants on them.
void list_fields(std::ostream& out);

}  // namespace gsg
