#include "finaltypes/scan.hpp"

#include <algorithm>
#include <map>

#include "finaltypes/enumerate.hpp"

namespace finaltypes {

uint64_t count_nth_iterate_zero(int g, int n) {
    check_enumeration_cap(g);
    return count_masks_parallel(g, [n](const MaskView& v) { return v.iterate(n, v.g) == 0; });
}

uint64_t count_nth_iterate_zero_serial(int g, int n) {
    check_enumeration_cap(g);
    return count_masks_serial(g, [n](const MaskView& v) { return v.iterate(n, v.g) == 0; });
}

uint64_t count_first_value_zero(int g) {
    check_enumeration_cap(g);
    return count_masks_parallel(g, [](const MaskView& v) { return v.value[1] == 0; });
}

uint64_t count_first_value_zero_serial(int g) {
    check_enumeration_cap(g);
    return count_masks_serial(g, [](const MaskView& v) { return v.value[1] == 0; });
}

uint64_t count_delta_length(int g, int parts) {
    check_enumeration_cap(g);
    return count_masks_parallel(g, [parts](const MaskView& v) {
        uint8_t buf[kEnumerationCap];
        return v.stable_rank() == 0 && v.delta_parts(buf) == parts;
    });
}

uint64_t count_delta_length_serial(int g, int parts) {
    check_enumeration_cap(g);
    return count_masks_serial(g, [parts](const MaskView& v) {
        uint8_t buf[kEnumerationCap];
        return v.stable_rank() == 0 && v.delta_parts(buf) == parts;
    });
}

namespace {

using CensusKey = std::pair<int, std::vector<int>>;  // (f, delta parts)
using CensusMap = std::map<CensusKey, uint64_t>;

void census_accumulate(CensusMap& map, const MaskView& v) {
    uint8_t buf[kEnumerationCap];
    const int f = v.stable_rank();
    const int n = v.delta_parts(buf);
    CensusKey key{f, std::vector<int>(buf, buf + n)};
    ++map[key];
}

std::vector<CensusEntry> census_to_entries(const CensusMap& map) {
    std::vector<CensusEntry> out;
    out.reserve(map.size());
    for (const auto& [key, count] : map) {
        out.push_back({key.first, Partition(key.second), count});
    }
    // std::map keeps (f, parts) ascending already; keep the contract explicit.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CensusEntry> type_census_serial(int g) {
    check_enumeration_cap(g);
    CensusMap map;
    MaskView view;
    const uint32_t end = uint32_t{1} << g;
    for (uint32_t mask = 0; mask < end; ++mask) {
        view.decode(g, mask);
        census_accumulate(map, view);
    }
    return census_to_entries(map);
}

std::vector<CensusEntry> type_census(int g) {
    check_enumeration_cap(g);
    const int64_t end = int64_t{1} << g;
    CensusMap merged;
#pragma omp parallel
    {
        CensusMap local;
#pragma omp for schedule(static) nowait
        for (int64_t mask = 0; mask < end; ++mask) {
            MaskView view;
            view.decode(g, static_cast<uint32_t>(mask));
            census_accumulate(local, view);
        }
#pragma omp critical(finaltypes_census_merge)
        {
            for (const auto& [key, count] : local) {
                merged[key] += count;
            }
        }
    }
    return census_to_entries(merged);
}

}  // namespace finaltypes
