#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace halg {

/// Exact rational scalar used everywhere; the workbench has no floating point.
/// Expression templates are disabled so arithmetic results store directly.
using Scalar = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Render as "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string rat_to_string(const Scalar& x);

/// Parse "p" or "p/q" (arbitrary precision, optional sign). Throws
/// std::invalid_argument on malformed input or zero denominator.
Scalar rat_from_string(std::string_view s);

Scalar rat_binomial(int n, int k);
Scalar rat_factorial(int n);

/// (-1)^e, defined for negative e as well.
inline int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace halg
