#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lcpos {

// Every verdict in this library is decided in exact arithmetic; no float is
// ever compared against a threshold.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with an optional sign on either part and normalises so
// the denominator is positive. Rejects q == 0, empty parts, whitespace and
// anything non-integral by throwing std::invalid_argument. (cpp_rational's
// own string constructor aborts on "1/-2" and quietly reads "" as zero, so
// all external input must come through here.)
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, else "p/q" in lowest terms with q > 0.
std::string format_rational(const Rational& value);

// Exact C(n, k); zero outside 0 <= k <= n or for n < 0. Computed by the
// incremental product C(n,k+1) = C(n,k)*(n-k)/(k+1), so there is no shared
// cache to synchronise when trials run on several threads.
Integer binomial(long n, long k);

}  // namespace lcpos
