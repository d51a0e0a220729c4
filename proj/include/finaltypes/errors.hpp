#pragma once

#include <stdexcept>
#include <string>

namespace finaltypes {

/// Raised when an exhaustive operation is asked to walk more than
/// 2^kEnumerationCap objects. Distinct from invalid input: the request is
/// well-formed, just not answerable by enumeration at this scale.
struct ScaleCapError : std::runtime_error {
    explicit ScaleCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finaltypes
