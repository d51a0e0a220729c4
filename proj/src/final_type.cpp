#include "finaltypes/final_type.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "finaltypes/errors.hpp"

namespace finaltypes {

namespace {

void validate_steps(const std::vector<int>& values) {
    int prev = 0;  // v(0)
    for (size_t i = 0; i < values.size(); ++i) {
        const int v = values[i];
        if (v < 0) {
            throw std::invalid_argument("final type value at i=" + std::to_string(i + 1) +
                                        " is negative");
        }
        if (v < prev || v > prev + 1) {
            throw std::invalid_argument("final type step violation at i=" +
                                        std::to_string(i + 1) + ": v(" +
                                        std::to_string(i) + ")=" + std::to_string(prev) +
                                        ", v(" + std::to_string(i + 1) + ")=" +
                                        std::to_string(v));
        }
        prev = v;
    }
}

}  // namespace

FinalType::FinalType(int g, std::vector<int> values) : values_(std::move(values)) {
    if (g < 1) {
        throw std::invalid_argument("final type length must be positive, got " +
                                    std::to_string(g));
    }
    if (static_cast<int>(values_.size()) != g) {
        throw std::invalid_argument("final type length mismatch: expected " +
                                    std::to_string(g) + " values, got " +
                                    std::to_string(values_.size()));
    }
    validate_steps(values_);
}

FinalType::FinalType(std::vector<int> values)
    : FinalType(static_cast<int>(values.size()), std::move(values)) {}

int FinalType::iterate(int times, int start) const {
    if (times < 0 || times > g()) {
        throw std::out_of_range("iterate count " + std::to_string(times) +
                                " out of range [0, " + std::to_string(g()) + "]");
    }
    if (start < 0 || start > g()) {
        throw std::out_of_range("iterate argument " + std::to_string(start) +
                                " out of range [0, " + std::to_string(g()) + "]");
    }
    int x = start;
    for (int i = 0; i < times && x != value(x); ++i) {
        x = value(x);
    }
    return x;
}

int FinalType::stable_rank() const {
    return iterate(g(), g());
}

std::vector<uint8_t> FinalType::to_increments() const {
    std::vector<uint8_t> bits(values_.size());
    int prev = 0;
    for (size_t i = 0; i < values_.size(); ++i) {
        bits[i] = static_cast<uint8_t>(values_[i] - prev);
        prev = values_[i];
    }
    return bits;
}

FinalType FinalType::from_increments(const std::vector<uint8_t>& bits) {
    if (bits.empty()) {
        throw std::invalid_argument("increment bitstring must be nonempty");
    }
    std::vector<int> values(bits.size());
    int v = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) {
            throw std::invalid_argument("increment at i=" + std::to_string(i + 1) +
                                        " is not a bit");
        }
        v += bits[i];
        values[i] = v;
    }
    return FinalType(std::move(values));
}

uint32_t FinalType::to_mask() const {
    if (g() > kEnumerationCap) {
        throw ScaleCapError("mask encoding supports g <= " +
                            std::to_string(kEnumerationCap) + ", got g=" +
                            std::to_string(g()));
    }
    uint32_t mask = 0;
    int prev = 0;
    for (int i = 1; i <= g(); ++i) {
        mask |= static_cast<uint32_t>(value(i) - prev) << (i - 1);
        prev = value(i);
    }
    return mask;
}

FinalType FinalType::from_mask(int g, uint32_t mask) {
    if (g < 1 || g > kEnumerationCap) {
        throw ScaleCapError("mask encoding supports 1 <= g <= " +
                            std::to_string(kEnumerationCap) + ", got g=" +
                            std::to_string(g));
    }
    std::vector<int> values(g);
    int v = 0;
    for (int i = 0; i < g; ++i) {
        v += static_cast<int>((mask >> i) & 1u);
        values[i] = v;
    }
    return FinalType(std::move(values));
}

std::string FinalType::str() const {
    std::string out = "(";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values_[i]);
    }
    out += ')';
    return out;
}

bool pointwise_le(const FinalType& v, const FinalType& w) {
    if (v.g() != w.g()) {
        throw std::invalid_argument("pointwise comparison needs equal lengths, got " +
                                    std::to_string(v.g()) + " and " + std::to_string(w.g()));
    }
    for (int i = 1; i <= v.g(); ++i) {
        if (v.value(i) > w.value(i)) {
            return false;
        }
    }
    return true;
}

DeltaDecomposition delta_of(const FinalType& v) {
    DeltaDecomposition out;
    out.g = v.g();
    std::vector<int> parts;
    int prev = v.g();
    while (true) {
        const int next = v.value(prev);
        if (next == prev) {
            break;
        }
        parts.push_back(prev - next);
        prev = next;
    }
    out.f = prev;  // the iterates stabilize exactly at the fixed prefix
    out.delta = Partition(std::move(parts));
    return out;
}

FinalType parse_final_type(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) {
        throw std::invalid_argument("empty final type text");
    }
    std::vector<int> values;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view token =
            s.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - start);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad final type token '" + std::string(token) +
                                        "' in '" + std::string(text) + "'");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return FinalType(std::move(values));
}

}  // namespace finaltypes
