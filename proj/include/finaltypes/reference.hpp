#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finaltypes/orders.hpp"

namespace finaltypes {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

/// Hand-checked cover edge sets for small diagrams, frozen as reference data
/// for selftest and regression tests. Available: pp for g in {3, 4, 5} and
/// ft for g = 6. Returned sorted by (source, target) text.
const EdgeList& pinned_hasse_edges(OrderKind kind, int g);
bool has_pinned_hasse_edges(OrderKind kind, int g);

}  // namespace finaltypes
