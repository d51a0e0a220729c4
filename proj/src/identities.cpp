#include "finaltypes/identities.hpp"

#include <stdexcept>

#include "finaltypes/enumerate.hpp"
#include "finaltypes/scan.hpp"

#include "json.hpp"

namespace finaltypes {

std::vector<Bigint> nnacci(int n, int count) {
    if (n < 1 || count < 1) {
        throw std::invalid_argument("nnacci needs n >= 1 and count >= 1");
    }
    std::vector<Bigint> seq;
    seq.reserve(count);
    for (int g = 1; g <= count; ++g) {
        if (g < n) {
            seq.emplace_back(0);
        } else if (g == n) {
            seq.emplace_back(1);
        } else {
            Bigint sum = 0;
            for (int i = 1; i <= n; ++i) {
                sum += seq[static_cast<size_t>(g - i) - 1];
            }
            seq.push_back(std::move(sum));
        }
    }
    return seq;
}

Bigint f_sum(int n, long g) {
    if (n < 1) {
        throw std::invalid_argument("f_sum needs n >= 1");
    }
    if (g < 0) {
        return 0;
    }
    if (g == 0) {
        return 1;
    }
    Bigint total = 0;
    for_each_partition(static_cast<int>(g), n,
                       [&](const Partition& delta) { total += n_delta(delta); });
    return total;
}

Bigint g_s(int s, long g) {
    if (s < 1) {
        throw std::invalid_argument("g_s needs s >= 1");
    }
    if (g < s) {
        return 0;  // no partition of g into s positive parts
    }
    Bigint total = 0;
    for_each_partition(static_cast<int>(g), s, [&](const Partition& delta) {
        if (delta.size() == s) {
            total += n_delta(delta);
        }
    });
    return total;
}

uint64_t f_bruteforce(int n, int g) {
    if (n < 1) {
        throw std::invalid_argument("f_bruteforce needs n >= 1");
    }
    return count_nth_iterate_zero(g, n);
}

std::string IdentityReport::json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["params"] = params;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const IdentityPoint& p : points) {
        pts.push_back({{"g", p.g},
                       {"values", {p.a.str(), p.b.str(), p.c.str()}}});
    }
    j["pass"] = pass;
    if (!pass) {
        j["first_mismatch"] = first_mismatch;
    }
    return j.dump(2);
}

namespace {

void record(IdentityReport& report, IdentityPoint point, const std::string& label) {
    if (!point.agree() && report.pass) {
        report.pass = false;
        report.first_mismatch = label + ": a=" + point.a.str() + " b=" + point.b.str() +
                                " c=" + point.c.str();
    }
    report.points.push_back(std::move(point));
}

}  // namespace

IdentityReport verify_main_theorem(int n, int g_max) {
    IdentityReport report;
    report.identity = "main_theorem";
    report.params = {{"n", n}, {"gmax", g_max}};

    const std::vector<Bigint> shifted = nnacci(n, g_max + n);
    for (long g = 1; g <= g_max; ++g) {
        IdentityPoint p;
        p.g = g;
        p.a = f_sum(n, g);
        p.b = shifted[static_cast<size_t>(g + n) - 1];

        Bigint recursion = 0;
        for (int i = 1; i <= n; ++i) {
            recursion += f_sum(n, g - i);
        }
        p.c = (g <= kEnumerationCap) ? Bigint(f_bruteforce(n, static_cast<int>(g)))
                                     : recursion;

        if (report.pass && p.a != recursion) {
            report.pass = false;
            report.first_mismatch = "recursion fails at n=" + std::to_string(n) +
                                    " g=" + std::to_string(g);
        }
        record(report, std::move(p), "n=" + std::to_string(n) + " g=" + std::to_string(g));
    }
    return report;
}

IdentityReport verify_gs_recursion(int s, int g_max) {
    IdentityReport report;
    report.identity = "gs_recursion";
    report.params = {{"s", s}, {"gmax", g_max}};

    for (long g = 1; g <= g_max; ++g) {
        IdentityPoint p;
        p.g = g;
        p.a = g_s(s, g);
        p.b = f_sum(s, g - s);  // the F_s(g - s) tail of the recursion
        for (int i = 1; i <= s - 1; ++i) {
            p.b += g_s(s, g - i);
        }
        p.c = (g <= kEnumerationCap)
                  ? Bigint(count_delta_length(static_cast<int>(g), s))
                  : p.a;
        record(report, std::move(p), "s=" + std::to_string(s) + " g=" + std::to_string(g));
    }
    return report;
}

IdentityReport verify_power_identity(int g_max) {
    IdentityReport report;
    report.identity = "power_identity";
    report.params = {{"gmax", g_max}};

    for (long g = 1; g <= g_max; ++g) {
        IdentityPoint p;
        p.g = g;
        p.a = 0;
        for_each_partition(static_cast<int>(g), std::nullopt,
                           [&](const Partition& delta) { p.a += n_delta(delta); });
        p.b = pow2(static_cast<int>(g) - 1);
        p.c = (g <= kEnumerationCap)
                  ? Bigint(count_first_value_zero(static_cast<int>(g)))
                  : p.b;
        record(report, std::move(p), "g=" + std::to_string(g));
    }
    return report;
}

}  // namespace finaltypes
