#ifndef PERISUM_NUMERIC_HPP
#define PERISUM_NUMERIC_HPP

#include "perisum/okada.hpp"
#include "perisum/poly.hpp"
#include "perisum/reduce.hpp"

namespace perisum::numeric {

// A floating-point estimate together with a rigorous bound on its distance
// from the exact value (truncation analysis plus a 1e-12 rounding allowance).
struct NumericResult {
    double value = 0.0;
    double error_bound = 0.0;

    bool operator==(const NumericResult& other) const = default;
};

// psi(a/q) for 0 < a <= q via the finite closed form at rational arguments.
double digamma_rational(long a, long q);

// sum f(n)/n evaluated through digamma values: -(1/q) sum_a f(a) psi(a/q).
NumericResult sum_value(const okada::PeriodicFunction& f);

// Plain truncation sum_{n=1}^{N} f(n)/n; the tail of a zero-mean periodic
// series is bounded by q max|f| / N.  Requires N >= q.
NumericResult truncated_sum(const okada::PeriodicFunction& f, long N);

// offset + sum_value of the reduced periodic part.
NumericResult total_value(const poly::Polynomial& numerator, const poly::Polynomial& denominator);

// Direct truncation of sum_{n=0}^{N} P(n)/Q(n) in doubles; no certified
// bound (cross-check channel for tests).
double direct_partial_sum(const poly::Polynomial& numerator, const poly::Polynomial& denominator,
                          long N);

} // namespace perisum::numeric

#endif
