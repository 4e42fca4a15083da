#include "lcpos/rational.hpp"

#include <stdexcept>

namespace lcpos {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
	if (text.empty() || text == "-" || text == "+")
		throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
	bool negative = false;
	if (text.front() == '+' || text.front() == '-') {
		negative = text.front() == '-';
		text.remove_prefix(1);
	}
	Integer value = 0;
	for (char c : text) {
		if (c < '0' || c > '9')
			throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
		value = value * 10 + (c - '0');
	}
	return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
	auto slash = text.find('/');
	if (slash == std::string_view::npos) {
		return Rational(parse_integer(text, text));
	}
	Integer num = parse_integer(text.substr(0, slash), text);
	Integer den = parse_integer(text.substr(slash + 1), text);
	if (den == 0)
		throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
	if (den < 0) {
		num = -num;
		den = -den;
	}
	return Rational(num, den);
}

std::string format_rational(const Rational& value) {
	std::string out = numerator(value).str();
	if (denominator(value) != 1) {
		out += '/';
		out += denominator(value).str();
	}
	return out;
}

Integer binomial(long n, long k) {
	if (n < 0 || k < 0 || k > n)
		return 0;
	if (k > n - k)
		k = n - k;
	Integer value = 1;
	for (long i = 0; i < k; ++i) {
		value *= n - i;
		value /= i + 1;  // exact: value is C(n, i+1) * (i+1)! / ... always integral here
	}
	return value;
}

}  // namespace lcpos
