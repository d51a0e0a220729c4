#include "finaltypes/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "finaltypes/errors.hpp"

namespace finaltypes {

void check_enumeration_cap(int g) {
    if (g < 1) {
        throw std::invalid_argument("enumeration needs g >= 1, got " + std::to_string(g));
    }
    if (g > kEnumerationCap) {
        throw ScaleCapError("enumeration walks 2^g objects; capped at g <= " +
                            std::to_string(kEnumerationCap) + ", got g=" +
                            std::to_string(g));
    }
}

std::vector<FinalType> list_final_types(int g) {
    std::vector<FinalType> out;
    out.reserve(size_t{1} << g);
    for_each_final_type(g, [&](FinalType v) { out.push_back(std::move(v)); });
    return out;
}

std::vector<Partition> list_partitions(int g, std::optional<int> max_parts) {
    std::vector<Partition> out;
    for_each_partition(g, max_parts, [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

Bigint n_delta(const Partition& delta) {
    Bigint product = 1;
    for (int i = 1; i < delta.size(); ++i) {
        product *= binomial(delta.part(i), delta.part(i + 1));
    }
    return product;
}

ReconstructionTemplate ReconstructionTemplate::build(const Partition& delta, int f) {
    if (f < 0) {
        throw std::invalid_argument("stable rank must be non-negative, got " +
                                    std::to_string(f));
    }
    ReconstructionTemplate t;
    t.f = f;
    t.delta = delta;
    t.g = f + delta.weight();
    for (int i = 1; i <= f; ++i) {
        t.fixed_positions[i] = i;
    }
    // Block endpoints, bottom-up: position f + sum_{i=j..n} d_i carries
    // f + sum_{i=j+1..n} d_i.
    int position = f;
    int value = f;
    for (int j = delta.size(); j >= 1; --j) {
        position += delta.part(j);
        t.fixed_positions[position] = value;
        value += delta.part(j);
    }
    return t;
}

namespace {

// All ways to place `ones` one-bits among `width` positions, as packed masks.
std::vector<uint32_t> block_fillings(int width, int ones) {
    std::vector<uint32_t> out;
    std::vector<int> pick(ones);
    auto rec = [&](auto&& self, int next, int chosen) -> void {
        if (chosen == ones) {
            uint32_t m = 0;
            for (int p : pick) {
                m |= uint32_t{1} << p;
            }
            out.push_back(m);
            return;
        }
        for (int p = next; p <= width - (ones - chosen); ++p) {
            pick[chosen] = p;
            self(self, p + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

std::vector<FinalType> final_types_with_delta(const Partition& delta, int f) {
    if (f < 0) {
        throw std::invalid_argument("stable rank must be non-negative, got " +
                                    std::to_string(f));
    }
    const int g = f + delta.weight();
    check_enumeration_cap(g);

    // Prefix 1..f rises every step; the bottom block (width d_n) is flat;
    // the block of width d_j rises d_{j+1} and its filling is free.
    uint32_t base = (f > 0) ? ((uint32_t{1} << f) - 1) : 0;
    struct FreeBlock {
        int start;  // 0-based bit offset
        std::vector<uint32_t> fillings;
    };
    std::vector<FreeBlock> blocks;
    const int n = delta.size();
    int offset = f + (n > 0 ? delta.part(n) : 0);
    for (int j = n - 1; j >= 1; --j) {
        blocks.push_back({offset, block_fillings(delta.part(j), delta.part(j + 1))});
        offset += delta.part(j);
    }

    std::vector<uint32_t> masks;
    auto assemble = [&](auto&& self, size_t b, uint32_t acc) -> void {
        if (b == blocks.size()) {
            masks.push_back(acc);
            return;
        }
        for (uint32_t filling : blocks[b].fillings) {
            self(self, b + 1, acc | (filling << blocks[b].start));
        }
    };
    assemble(assemble, 0, base);

    std::sort(masks.begin(), masks.end());
    std::vector<FinalType> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) {
        out.push_back(FinalType::from_mask(g, m));
    }
    return out;
}

std::optional<FinalType> unique_type_for(const Partition& delta, int f) {
    if (delta.empty()) {
        throw std::invalid_argument("unique_type_for needs a nonempty partition");
    }
    if (f < 0) {
        throw std::invalid_argument("stable rank must be non-negative, got " +
                                    std::to_string(f));
    }
    const int d = delta.part(1);
    const int e = delta.size();
    if (delta.part(e) != d) {
        return std::nullopt;  // not rectangular; N(delta) > 1
    }
    std::vector<int> values;
    values.reserve(static_cast<size_t>(f) + delta.weight());
    for (int i = 1; i <= f; ++i) {
        values.push_back(i);
    }
    for (int i = 0; i < d; ++i) {
        values.push_back(f);
    }
    for (int i = 1; i <= (e - 1) * d; ++i) {
        values.push_back(f + i);
    }
    return FinalType(std::move(values));
}

}  // namespace finaltypes
