#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alexbq/diagram.hpp"

namespace alexbq {

/// Named diagrams shipped with the library. Throws ValidationError listing
/// the known names when `name` is unknown.
Diagram catalog(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace alexbq
