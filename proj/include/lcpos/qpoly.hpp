#pragma once

#include "lcpos/rational.hpp"

#include <vector>

namespace lcpos {

// Dense polynomial in q with exact rational coefficients, stored by ascending
// power. Trailing zero coefficients are trimmed on construction; the zero
// polynomial stores nothing and reports degree -1 (standing in for minus
// infinity).
class QPoly {
 public:
	QPoly() = default;
	explicit QPoly(std::vector<Rational> coeffs);

	// coeff * q^power; power must be >= 0.
	static QPoly monomial(long power, const Rational& coeff = Rational(1));

	long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
	bool is_zero() const { return coeffs_.empty(); }
	const Rational& coeff(long power) const;  // zero outside the stored range
	const std::vector<Rational>& coeffs() const { return coeffs_; }

	Rational eval(const Rational& q) const;

	QPoly& operator+=(const QPoly& rhs);
	QPoly& operator-=(const QPoly& rhs);
	friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
	friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
	friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

	bool operator==(const QPoly& other) const = default;

 private:
	void trim();

	std::vector<Rational> coeffs_;
};

// f*f - g*h. Every certificate in the q-log-concavity checks reduces to
// asking whether this has any negative coefficient, so it gets a name.
QPoly qpoly_sub_mul(const QPoly& f, const QPoly& g, const QPoly& h);

}  // namespace lcpos
