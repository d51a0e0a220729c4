#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "finaltypes/final_type.hpp"
#include "finaltypes/partition.hpp"

namespace finaltypes {

/// One increment mask decoded onto the stack. The full-sweep kernels touch
/// 2^g of these per call, so no heap traffic and no FinalType construction
/// in the hot loop.
struct MaskView {
    int g = 0;
    std::array<uint8_t, kEnumerationCap + 1> value{};  // value[0] == 0

    void decode(int len, uint32_t mask) {
        g = len;
        uint8_t v = 0;
        value[0] = 0;
        for (int i = 1; i <= len; ++i) {
            v = static_cast<uint8_t>(v + ((mask >> (i - 1)) & 1u));
            value[i] = v;
        }
    }

    /// v^times(start); iterates stabilize after at most g steps.
    int iterate(int times, int start) const {
        int x = start;
        for (int i = 0; i < times && x != value[x]; ++i) {
            x = value[x];
        }
        return x;
    }

    int stable_rank() const { return iterate(g, g); }

    /// Nonzero successive differences v^{i-1}(g) - v^i(g); returns the count.
    int delta_parts(uint8_t* out) const {
        int n = 0;
        int prev = g;
        while (true) {
            const int next = value[prev];
            if (next == prev) {
                break;
            }
            out[n++] = static_cast<uint8_t>(prev - next);
            prev = next;
        }
        return n;
    }
};

/// Serial reference sweep. Kept as the baseline the parallel kernel is
/// tested and benchmarked against.
template <class Pred>
uint64_t count_masks_serial(int g, Pred&& pred) {
    const uint32_t end = uint32_t{1} << g;
    uint64_t count = 0;
    MaskView view;
    for (uint32_t mask = 0; mask < end; ++mask) {
        view.decode(g, mask);
        count += pred(view) ? 1 : 0;
    }
    return count;
}

/// OpenMP sweep over the mask range; result is order-independent.
template <class Pred>
uint64_t count_masks_parallel(int g, Pred&& pred) {
    const int64_t end = int64_t{1} << g;
    uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (int64_t mask = 0; mask < end; ++mask) {
        MaskView view;
        view.decode(g, static_cast<uint32_t>(mask));
        count += pred(view) ? 1 : 0;
    }
    return count;
}

// Named kernels. The unsuffixed entry points run the OpenMP sweep; the
// _serial twins are the reference implementations.

/// #{v of length g : v^n(g) == 0}; n past g is clamped (iterates are stable).
uint64_t count_nth_iterate_zero(int g, int n);
uint64_t count_nth_iterate_zero_serial(int g, int n);

/// #{v of length g : v(1) == 0}.
uint64_t count_first_value_zero(int g);
uint64_t count_first_value_zero_serial(int g);

/// #{v of length g : stable_rank(v) == 0 and |delta_v| == parts}.
uint64_t count_delta_length(int g, int parts);
uint64_t count_delta_length_serial(int g, int parts);

/// Class sizes of the 2^g types grouped by (f(v), delta_v),
/// sorted by f then by parts.
struct CensusEntry {
    int f = 0;
    Partition delta;
    uint64_t count = 0;

    auto operator<=>(const CensusEntry&) const = default;
};

std::vector<CensusEntry> type_census(int g);
std::vector<CensusEntry> type_census_serial(int g);

}  // namespace finaltypes
