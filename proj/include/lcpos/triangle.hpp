#pragma once

#include "lcpos/rational.hpp"
#include "lcpos/sequence.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcpos {

// Where a triangle came from: the constructor kind plus the parameters needed
// to rebuild it. Parameter values are kept pre-rendered ("p/q" strings,
// decimal integers, comma-joined lists) so provenance survives a JSON round
// trip byte for byte.
struct Provenance {
	std::string kind = "literal";
	std::map<std::string, std::string> params;

	bool operator==(const Provenance&) const = default;
};

// Triangular array a(n,k) of nonnegative rationals, 0 <= k <= n <= max_n.
// Reads with k outside [0,n] return exact zero -- the certificate formulas
// lean on that constantly. Reads with n outside [0,max_n] are caller bugs
// and throw std::out_of_range.
class Triangle {
 public:
	Triangle(std::vector<std::vector<Rational>> rows, Provenance provenance = {});

	long max_n() const { return static_cast<long>(rows_.size()) - 1; }
	const Rational& at(long n, long k) const;
	const std::vector<Rational>& row(long n) const;
	Sequence row_sequence(long n) const;
	Rational row_sum(long n) const;
	const Provenance& provenance() const { return provenance_; }

	// Entrywise over the common range of rows; provenance is ignored, and a
	// triangle compares equal to any extension of itself.
	bool operator==(const Triangle& other) const;

 private:
	std::vector<std::vector<Rational>> rows_;
	Provenance provenance_;
};

// Parameters of the row operator L(u)_k = lambda u_k + mu u_{k-1}.
// Construction validates lambda, mu >= 0 and u log-concave with no internal
// zeros (any integer offset is fine, negative included).
struct LOperatorSpec {
	Rational lambda;
	Rational mu;
	Sequence u;

	LOperatorSpec(Rational lambda_in, Rational mu_in, Sequence u_in);
};

// a(n,k) = 1 everywhere.
Triangle constant_triangle(long max_n);
// a(n,k) = C(n,k).
Triangle pascal_triangle(long max_n);
// a(n,k) = C(a+n, b+k), requires a >= b >= 0.
Triangle shifted_binomial_triangle(long a, long b, long max_n);
// a(n,k) = C(a-n, b-k), requires a >= b >= 0 and max_n <= a.
Triangle falling_binomial_triangle(long a, long b, long max_n);
// a(n,k) = L^n(u)_k restricted to 0 <= k <= n.
Triangle loperator_triangle(const LOperatorSpec& spec, long max_n);
// a(n,k) = alpha a(n+1,k) + beta a(n+1,k+1), filled top-down from the given
// row at n = max_n. top_row must start at offset 0 with exactly max_n + 1
// entries and be log-concave with no internal zeros; every generated row is
// checked for the same property (a failure there would be a soundness bug
// and throws logic_error).
Triangle recurrence_triangle(const Rational& alpha, const Rational& beta,
                             const Sequence& top_row, long max_n);
// a*(n,k) = a(n,n-k). An involution; preserves row sums.
Triangle reciprocal(const Triangle& t);
// b(n,k) = a(n,k) * x_k * y_{n-k}; either factor may be absent. x and y are
// read with zero extension, so short sequences truncate the triangle's
// support on purpose.
Triangle scale_triangle(const Triangle& t, const std::optional<Sequence>& x,
                        const std::optional<Sequence>& y);
// c(n,k) = a(n,k) * b(n,k) over the common row range.
Triangle entrywise_product(const Triangle& a, const Triangle& b);

// One application of L: support widens by at most one to the right.
Sequence apply_loperator(const Rational& lambda, const Rational& mu, const Sequence& s);
// L^0(u) .. L^count(u), each with its full (finite) support, not restricted
// to the triangular range. Every row is asserted log-concave across its
// stored window plus two guard cells on each side.
std::vector<Sequence> loperator_rows(const LOperatorSpec& spec, long count);

}  // namespace lcpos
