#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finaltypes/numbers.hpp"

namespace finaltypes {

/// The n-nacci sequence F~_n(1..count): n-1 zeros, then 1, then each term the
/// sum of the previous n.
std::vector<Bigint> nnacci(int n, int count);

/// F_n(g) by partition sum: sum over partitions of g into at most n parts of
/// prod C(d_i, d_{i+1}) (trailing zero entries contribute C(d_k, 0) = 1).
/// Extended: 0 for g < 0, 1 for g == 0.
Bigint f_sum(int n, long g);

/// G_s(g): the same sum restricted to exactly s positive parts; 0 for g < s.
Bigint g_s(int s, long g);

/// F_n(g) by exhaustive enumeration: #{v of length g : v^n(g) == 0}.
/// Requires g <= kEnumerationCap.
uint64_t f_bruteforce(int n, int g);

/// One checked identity over a parameter range. Each point carries the
/// values produced by the independent routes so a mismatch can be triaged.
struct IdentityPoint {
    long g = 0;
    Bigint a, b, c;

    bool agree() const { return a == b && b == c; }
};

struct IdentityReport {
    std::string identity;
    std::map<std::string, long> params;
    std::vector<IdentityPoint> points;
    bool pass = true;
    std::string first_mismatch;  // empty when pass

    /// {identity, params, points: [{g, values:[a,b,c]}], pass}; values as
    /// decimal strings, they outgrow JSON numbers.
    std::string json() const;
};

/// Checks F_n(g) = F_n(g-1) + ... + F_n(g-n) for 1 <= g <= g_max, plus
/// f_sum == nnacci(g+n) == brute force (brute force where g is under the
/// enumeration cap, the recursion right-hand side otherwise).
IdentityReport verify_main_theorem(int n, int g_max);

/// Checks G_s(g) = sum_{i=1}^{s-1} G_s(g-i) + F_s(g-s) for 1 <= g <= g_max,
/// with a brute-force third route (class count with |delta_v| == s) under
/// the cap.
IdentityReport verify_gs_recursion(int s, int g_max);

/// Checks sum_{delta of g} N(delta) = 2^{g-1} = #{v : v(1) == 0} for
/// 1 <= g <= g_max.
IdentityReport verify_power_identity(int g_max);

}  // namespace finaltypes
