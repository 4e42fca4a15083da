#include "lcpos/triangle.hpp"

#include "lcpos/logconcave.hpp"

#include <stdexcept>
#include <utility>

namespace lcpos {

namespace {

const Rational kZero = 0;

// Exact Pascal table C(n,k) for all n <= top, built once per constructor
// call; nothing global, so concurrent construction needs no locking.
std::vector<std::vector<Integer>> binomial_table(long top) {
	std::vector<std::vector<Integer>> rows(top + 1);
	for (long n = 0; n <= top; ++n) {
		rows[n].resize(n + 1);
		rows[n][0] = rows[n][n] = 1;
		for (long k = 1; k < n; ++k)
			rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
	}
	return rows;
}

std::string join_values(const Sequence& s) {
	std::string out;
	for (long i = 0; i < s.size(); ++i) {
		if (i)
			out += ',';
		out += format_rational(s.values()[i]);
	}
	return out;
}

void require_nonnegative(const Rational& v, const char* what) {
	if (v < 0)
		throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

Triangle::Triangle(std::vector<std::vector<Rational>> rows, Provenance provenance)
    : rows_(std::move(rows)), provenance_(std::move(provenance)) {
	if (rows_.empty())
		throw std::invalid_argument("triangle needs at least row 0");
	for (size_t n = 0; n < rows_.size(); ++n) {
		if (rows_[n].size() != n + 1)
			throw std::invalid_argument("triangle row " + std::to_string(n) +
			                            " must have exactly " + std::to_string(n + 1) + " entries");
		for (const Rational& v : rows_[n])
			if (v < 0)
				throw std::invalid_argument("triangle entries must be nonnegative");
	}
}

const Rational& Triangle::at(long n, long k) const {
	if (n < 0 || n > max_n())
		throw std::out_of_range("triangle row " + std::to_string(n) + " out of range");
	if (k < 0 || k > n)
		return kZero;
	return rows_[n][k];
}

const std::vector<Rational>& Triangle::row(long n) const {
	if (n < 0 || n > max_n())
		throw std::out_of_range("triangle row " + std::to_string(n) + " out of range");
	return rows_[n];
}

Sequence Triangle::row_sequence(long n) const {
	return Sequence(row(n), 0);
}

Rational Triangle::row_sum(long n) const {
	Rational sum = 0;
	for (const Rational& v : row(n))
		sum += v;
	return sum;
}

bool Triangle::operator==(const Triangle& other) const {
	long common = std::min(max_n(), other.max_n());
	for (long n = 0; n <= common; ++n)
		if (rows_[n] != other.rows_[n])
			return false;
	return true;
}

LOperatorSpec::LOperatorSpec(Rational lambda_in, Rational mu_in, Sequence u_in)
    : lambda(std::move(lambda_in)), mu(std::move(mu_in)), u(std::move(u_in)) {
	require_nonnegative(lambda, "lambda");
	require_nonnegative(mu, "mu");
	CheckResult lc = is_log_concave(u, true);
	if (!lc)
		throw std::invalid_argument("u must be log-concave with no internal zeros (" +
		                            lc.reason + " at index " +
		                            std::to_string(lc.witness_index.at(0)) + ")");
}

Triangle constant_triangle(long max_n) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	std::vector<std::vector<Rational>> rows(max_n + 1);
	for (long n = 0; n <= max_n; ++n)
		rows[n].assign(n + 1, Rational(1));
	return Triangle(std::move(rows), {"constant", {{"max_n", std::to_string(max_n)}}});
}

Triangle pascal_triangle(long max_n) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	auto table = binomial_table(max_n);
	std::vector<std::vector<Rational>> rows(max_n + 1);
	for (long n = 0; n <= max_n; ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k)
			rows[n].emplace_back(table[n][k]);
	}
	return Triangle(std::move(rows), {"pascal", {{"max_n", std::to_string(max_n)}}});
}

Triangle shifted_binomial_triangle(long a, long b, long max_n) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	if (b < 0 || a < b)
		throw std::invalid_argument("shifted binomial triangle needs a >= b >= 0");
	auto table = binomial_table(a + max_n);
	std::vector<std::vector<Rational>> rows(max_n + 1);
	for (long n = 0; n <= max_n; ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k)
			rows[n].emplace_back(b + k <= a + n ? table[a + n][b + k] : Integer(0));
	}
	return Triangle(std::move(rows),
	                {"shifted-binomial",
	                 {{"a", std::to_string(a)}, {"b", std::to_string(b)},
	                  {"max_n", std::to_string(max_n)}}});
}

Triangle falling_binomial_triangle(long a, long b, long max_n) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	if (b < 0 || a < b)
		throw std::invalid_argument("falling binomial triangle needs a >= b >= 0");
	if (max_n > a)
		throw std::invalid_argument("falling binomial triangle needs max_n <= a");
	auto table = binomial_table(a);
	std::vector<std::vector<Rational>> rows(max_n + 1);
	for (long n = 0; n <= max_n; ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k) {
			bool in_range = b - k >= 0 && b - k <= a - n;
			rows[n].emplace_back(in_range ? table[a - n][b - k] : Integer(0));
		}
	}
	return Triangle(std::move(rows),
	                {"falling-binomial",
	                 {{"a", std::to_string(a)}, {"b", std::to_string(b)},
	                  {"max_n", std::to_string(max_n)}}});
}

Sequence apply_loperator(const Rational& lambda, const Rational& mu, const Sequence& s) {
	if (s.empty())
		return Sequence();
	long first = s.first_index(), last = s.last_index();
	std::vector<Rational> out;
	out.reserve(last - first + 2);
	for (long k = first; k <= last + 1; ++k)
		out.push_back(lambda * s.at(k) + mu * s.at(k - 1));
	return Sequence(std::move(out), first);
}

std::vector<Sequence> loperator_rows(const LOperatorSpec& spec, long count) {
	if (count < 0)
		throw std::invalid_argument("row count must be nonnegative");
	std::vector<Sequence> rows;
	rows.reserve(count + 1);
	rows.push_back(spec.u);
	for (long n = 1; n <= count; ++n)
		rows.push_back(apply_loperator(spec.lambda, spec.mu, rows.back()));
	// L preserves log-concavity; verify each row over its window plus two
	// guard cells per side so a support gap at the margin cannot hide.
	for (const Sequence& r : rows) {
		if (r.empty())
			continue;
		std::vector<Rational> padded(r.size() + 4);
		for (long i = 0; i < r.size(); ++i)
			padded[i + 2] = r.values()[i];
		if (!is_log_concave(Sequence(std::move(padded), r.first_index() - 2), true))
			throw std::logic_error("L-operator row lost log-concavity (bug)");
	}
	return rows;
}

Triangle loperator_triangle(const LOperatorSpec& spec, long max_n) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	auto lrows = loperator_rows(spec, max_n);
	std::vector<std::vector<Rational>> rows(max_n + 1);
	for (long n = 0; n <= max_n; ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k)
			rows[n].push_back(lrows[n].at(k));
	}
	return Triangle(std::move(rows),
	                {"loperator",
	                 {{"lambda", format_rational(spec.lambda)},
	                  {"mu", format_rational(spec.mu)},
	                  {"u", join_values(spec.u)},
	                  {"u_offset", std::to_string(spec.u.offset())},
	                  {"max_n", std::to_string(max_n)}}});
}

Triangle recurrence_triangle(const Rational& alpha, const Rational& beta,
                             const Sequence& top_row, long max_n) {
	if (max_n < 0)
		throw std::invalid_argument("max_n must be nonnegative");
	require_nonnegative(alpha, "alpha");
	require_nonnegative(beta, "beta");
	if (top_row.offset() != 0 || top_row.size() != max_n + 1)
		throw std::invalid_argument("top row must start at index 0 with max_n + 1 entries");
	if (!is_log_concave(top_row, true))
		throw std::invalid_argument("top row must be log-concave with no internal zeros");
	std::vector<std::vector<Rational>> rows(max_n + 1);
	rows[max_n] = top_row.values();
	for (long n = max_n - 1; n >= 0; --n) {
		rows[n].resize(n + 1);
		for (long k = 0; k <= n; ++k)
			rows[n][k] = alpha * rows[n + 1][k] + beta * rows[n + 1][k + 1];
		if (!is_log_concave(Sequence(rows[n], 0), true))
			throw std::logic_error("recurrence row lost log-concavity (bug)");
	}
	return Triangle(std::move(rows),
	                {"recurrence",
	                 {{"alpha", format_rational(alpha)},
	                  {"beta", format_rational(beta)},
	                  {"top_row", join_values(top_row)},
	                  {"max_n", std::to_string(max_n)}}});
}

Triangle reciprocal(const Triangle& t) {
	std::vector<std::vector<Rational>> rows(t.max_n() + 1);
	for (long n = 0; n <= t.max_n(); ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k)
			rows[n].push_back(t.at(n, n - k));
	}
	return Triangle(std::move(rows), {"reciprocal", {{"base", t.provenance().kind}}});
}

Triangle scale_triangle(const Triangle& t, const std::optional<Sequence>& x,
                        const std::optional<Sequence>& y) {
	std::vector<std::vector<Rational>> rows(t.max_n() + 1);
	for (long n = 0; n <= t.max_n(); ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k) {
			Rational v = t.at(n, k);
			if (x)
				v *= x->at(k);
			if (y)
				v *= y->at(n - k);
			rows[n].push_back(std::move(v));
		}
	}
	return Triangle(std::move(rows), {"scaled", {{"base", t.provenance().kind}}});
}

Triangle entrywise_product(const Triangle& a, const Triangle& b) {
	long max_n = std::min(a.max_n(), b.max_n());
	std::vector<std::vector<Rational>> rows(max_n + 1);
	for (long n = 0; n <= max_n; ++n) {
		rows[n].reserve(n + 1);
		for (long k = 0; k <= n; ++k)
			rows[n].push_back(a.at(n, k) * b.at(n, k));
	}
	return Triangle(std::move(rows),
	                {"product",
	                 {{"left", a.provenance().kind}, {"right", b.provenance().kind}}});
}

}  // namespace lcpos
