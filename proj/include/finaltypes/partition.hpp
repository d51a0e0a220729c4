#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace finaltypes {

/// A partition: non-increasing positive parts d_1 >= d_2 >= ... >= d_n >= 1.
///
/// The empty partition (weight 0) is representable so that a delta
/// decomposition with f == g has a value; a partition standing alone as
/// "delta of g" always has at least one part.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws std::invalid_argument

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i) - 1]; }  // 1-based
    int size() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    /// Canonical text: parts joined by commas ("3,3"); empty partition -> "".
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Parses the comma form ("3,2,1") or, for an all-digit token that reads as a
/// valid partition digit-per-part, the compact form ("321"). A bare multi-digit
/// token whose digits do not form a partition is read as a single part ("12").
Partition parse_partition(std::string_view text);

}  // namespace finaltypes
