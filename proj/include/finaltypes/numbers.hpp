#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace finaltypes {

// All identity arithmetic is exact; nnacci values outgrow 64 bits quickly.
using Bigint = boost::multiprecision::cpp_int;

// C(n, k), exact; 0 when k < 0 or k > n.
Bigint binomial(long n, long k);

Bigint pow2(int exponent);

}  // namespace finaltypes
