#pragma once

#include "lcpos/check_result.hpp"
#include "lcpos/qpoly.hpp"
#include "lcpos/sequence.hpp"

#include <optional>
#include <span>

namespace lcpos {

// x_{i-1} x_{i+1} <= x_i^2 at every index. With require_no_internal_zeros
// (the ambient convention for "log-concave" throughout this library) a zero
// lying strictly between two nonzero entries is also rejected; witness reason
// "internal-zero", value = 0. Inequality witnesses carry index {i} and value
// x_i^2 - x_{i-1} x_{i+1}.
CheckResult is_log_concave(const Sequence& s, bool require_no_internal_zeros = true);

// Two-index form x_{i-1} x_{j+1} <= x_i x_j over all j >= i within the
// support. Kept as an independent oracle: for nonnegative sequences a pass
// here is equivalent to is_log_concave(s, true) -- an internal zero run
// x_a..x_b bordered by nonzeros fails at (i,j) = (a,b). Witness {i,j},
// value x_i x_j - x_{i-1} x_{j+1}.
CheckResult is_log_concave_pairs(const Sequence& s);

// Ultra log-concavity. For a finite order m: x_k = 0 for k > m and the ratio
// sequence {x_k / C(m,k)}_{k=0..m} is log-concave (internal zeros included,
// which is the same as x itself having none). order == nullopt means the
// unbounded variant: {k! x_k} log-concave with no support cutoff. Witness
// {k} indexes the ratio (resp. k! x_k) sequence; nonzero entries at negative
// indices fail with reason "support".
CheckResult is_ulc(const Sequence& s, std::optional<long> order);

// f_n^2 - f_{n-1} f_{n+1} has only nonnegative coefficients for every
// interior n. family.size() >= 1 required. Witness {n, power}, value = the
// offending coefficient.
CheckResult is_q_log_concave(std::span<const QPoly> family);

}  // namespace lcpos
