#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "finaltypes/final_type.hpp"
#include "finaltypes/numbers.hpp"
#include "finaltypes/partition.hpp"

namespace finaltypes {

void check_enumeration_cap(int g);  // throws ScaleCapError for g > kEnumerationCap

/// Visits all 2^g final types of length g in increment-bitstring numeric order.
template <class Fn>
void for_each_final_type(int g, Fn&& fn) {
    check_enumeration_cap(g);
    const uint32_t end = uint32_t{1} << g;
    for (uint32_t mask = 0; mask < end; ++mask) {
        fn(FinalType::from_mask(g, mask));
    }
}

std::vector<FinalType> list_final_types(int g);

/// Visits every partition of g (at most max_parts parts when given) in
/// decreasing lexicographic order of parts.
template <class Fn>
void for_each_partition(int g, std::optional<int> max_parts, Fn&& fn) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int cap, int budget) -> void {
        if (remaining == 0) {
            fn(Partition(parts));
            return;
        }
        if (budget == 0) {
            return;
        }
        const int high = std::min(cap, remaining);
        const int low = (remaining + budget - 1) / budget;  // ceil: budget parts must cover remaining
        for (int p = high; p >= low; --p) {
            parts.push_back(p);
            self(self, remaining - p, p, budget - 1);
            parts.pop_back();
        }
    };
    rec(rec, g, g, max_parts.value_or(g));
}

std::vector<Partition> list_partitions(int g, std::optional<int> max_parts = {});

/// N(delta) = prod_{i=1}^{n-1} C(d_i, d_{i+1}); 1 for n <= 1.
Bigint n_delta(const Partition& delta);

/// The value constraints that pin a final type down to delta: positions
/// 1..f carry 1..f, and each block endpoint f + sum_{i=j..n} d_i carries
/// f + sum_{i=j+1..n} d_i. Entries between endpoints are free.
struct ReconstructionTemplate {
    int g = 0;
    int f = 0;
    Partition delta;
    std::map<int, int> fixed_positions;  // 1-based position -> forced value

    static ReconstructionTemplate build(const Partition& delta, int f);
};

/// All final types v of length f + weight(delta) with stable_rank(v) == f and
/// delta_of(v).delta == delta, in increment-bitstring numeric order. The
/// count equals n_delta(delta). Free block entries are filled by choosing
/// increment positions, C(d_i, d_{i+1}) ways per block.
std::vector<FinalType> final_types_with_delta(const Partition& delta, int f);

/// The unique realizing type when delta is rectangular (all parts equal),
/// nothing otherwise. Requires weight(delta) >= 1.
std::optional<FinalType> unique_type_for(const Partition& delta, int f);

}  // namespace finaltypes
