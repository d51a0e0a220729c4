#include "finaltypes/partition.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace finaltypes {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                        " is " + std::to_string(parts_[i]) +
                                        "; parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts increase at index " +
                                        std::to_string(i + 1) + " (" +
                                        std::to_string(parts_[i - 1]) + " < " +
                                        std::to_string(parts_[i]) + ")");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

int parse_int_token(std::string_view token, std::string_view whole) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad partition token '" + std::string(token) +
                                    "' in '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) {
        throw std::invalid_argument("empty partition text");
    }

    std::vector<int> parts;
    if (s.find(',') == std::string_view::npos) {
        // Bare token. Multi-character all-digit tokens are read digit-per-part
        // when that yields a partition ("33" -> 3,3); otherwise the token is
        // one part ("12" -> 12). Parts <= 9 make the digit reading win.
        bool digits = true;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                digits = false;
                break;
            }
        }
        if (digits && s.size() > 1) {
            bool compact_ok = s[0] != '0';
            for (size_t i = 0; compact_ok && i < s.size(); ++i) {
                if (s[i] == '0' || (i > 0 && s[i] > s[i - 1])) {
                    compact_ok = false;
                }
            }
            if (compact_ok) {
                for (char c : s) {
                    parts.push_back(c - '0');
                }
                return Partition(std::move(parts));
            }
        }
        parts.push_back(parse_int_token(s, text));
        return Partition(std::move(parts));
    }

    size_t start = 0;
    while (start <= s.size()) {
        const size_t comma = s.find(',', start);
        const std::string_view token =
            s.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - start);
        parts.push_back(parse_int_token(token, text));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace finaltypes
