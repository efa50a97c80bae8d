#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace freeimm {

/// Names of the built-in cases, in registry order.
const std::vector<std::string>& fixture_names();

/// Raw JSON text of a built-in case. Throws ValidationError on unknown names.
std::string_view fixture_text(std::string_view name);

}  // namespace freeimm
