#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "finaltypes/partition.hpp"

namespace finaltypes {

/// Everything that walks all 2^g increment masks (enumeration, brute-force
/// counts, the ft oracle) refuses g above this.
inline constexpr int kEnumerationCap = 24;

/// A final type: v(0) = 0 and v(i) <= v(i+1) <= v(i) + 1, stored as the
/// value sequence v(1..g). The increment bitstring is a derived encoding.
class FinalType {
public:
    FinalType(int g, std::vector<int> values);  // throws std::invalid_argument
    explicit FinalType(std::vector<int> values);

    int g() const { return static_cast<int>(values_.size()); }
    int value(int i) const { return i == 0 ? 0 : values_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& values() const { return values_; }

    /// v^times(start); times-fold composition, iterate(0, j) == j.
    /// Requires 0 <= times <= g and 0 <= start <= g.
    int iterate(int times, int start) const;

    /// f(v) = v^g(g); also the largest f with v(i) == i for all i <= f.
    int stable_rank() const;

    /// bit i = v(i+1) - v(i), one bit per position.
    std::vector<uint8_t> to_increments() const;
    static FinalType from_increments(const std::vector<uint8_t>& bits);

    /// Increment bits packed LSB-first (bit 0 = v(1)); needs g <= kEnumerationCap.
    uint32_t to_mask() const;
    static FinalType from_mask(int g, uint32_t mask);

    /// Canonical text: "(0,0,1,2,3,4)".
    std::string str() const;

    auto operator<=>(const FinalType&) const = default;

private:
    std::vector<int> values_;
};

/// v(i) <= w(i) for every coordinate. Throws on length mismatch.
bool pointwise_le(const FinalType& v, const FinalType& w);

/// The pair (f(v), delta_v): delta_v(i) = v^{i-1}(g) - v^i(g), nonzero entries.
struct DeltaDecomposition {
    int g = 0;
    int f = 0;
    Partition delta;  // partition of g - f; empty iff f == g
};

DeltaDecomposition delta_of(const FinalType& v);

/// Parses "(0,0,1,2)" (parentheses optional).
FinalType parse_final_type(std::string_view text);

}  // namespace finaltypes
