#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gsg {

/// One computed-vs-expected comparison within a worked example.
struct ExampleCheck {
  std::string label;
  std::string computed;
  std::string expected;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ExampleReport {
  std::string id;
  std::vector<ExampleCheck> checks;
  double seconds = 0.0;

  bool passed() const;
};

/// rect-grid-matrix, rect-arbitrary-matrix, ball-grid-matrix,
/// rect-limit-quadratic, ball-limit-quadratic.
const std::vector<std::string>& example_ids();

/// Recomputes a worked example. Throws UnknownId for other ids.
ExampleReport reproduce(std::string_view id);

/// Expected CSV of the rect-grid-matrix example.
std::string_view rect_grid_example_csv();

/// "PASS id" / "FAIL id" followed by one indented line per check.
void print(std::ostream& out, const ExampleReport& report);

}  // namespace gsg
