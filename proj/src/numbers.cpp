#include "finaltypes/numbers.hpp"

namespace finaltypes {

Bigint binomial(long n, long k) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // Multiplicative form; each intermediate division is exact.
    Bigint result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Bigint pow2(int exponent) {
    return Bigint(1) << exponent;
}

}  // namespace finaltypes
