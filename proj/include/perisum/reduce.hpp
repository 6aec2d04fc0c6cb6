#ifndef PERISUM_REDUCE_HPP
#define PERISUM_REDUCE_HPP

#include <utility>
#include <vector>

#include "perisum/okada.hpp"
#include "perisum/poly.hpp"
#include "perisum/types.hpp"

namespace perisum::reduce {

// Denominator rewritten as scale * prod (q n + s_i) over a common modulus q,
// together with the (coprime) numerator.
struct LinearFactorForm {
    long q = 1;
    Rat scale = 1;                 // constant pulled out of the denominator
    std::vector<Int> residues;     // s_i, pairwise distinct, possibly outside (0, q]
    poly::Polynomial numerator;
};

// Canonical form of the periodic part: T = offset + sum over terms of
// coefficient/(q n + residue), residues distinct in (0, q], coefficients
// summing to zero.  Empty terms mean the periodic part cancelled entirely
// and T equals the offset.
struct ReducedSum {
    long q = 2;
    Rat offset = 0;
    std::vector<std::pair<long, Rat>> terms; // (residue, coefficient), residue ascending

    bool operator==(const ReducedSum& other) const = default;
};

// Rewrites numerator/denominator with the common-modulus factorization.
// Cancels any common polynomial factor first, then requires: denominator
// splitting into simple rational zeros, numerator degree <= denominator
// degree - 2, and no zero of the denominator at any integer n >= 0.
LinearFactorForm to_linear_factors(const poly::Polynomial& numerator,
                                   const poly::Polynomial& denominator);

// Coefficient of 1/(q n + s_i): numerator(-s_i/q) / (scale * prod_{j != i}
// (s_j - s_i)).  All coefficients are nonzero and sum to zero.
std::vector<std::pair<Int, Rat>> partial_fractions(const LinearFactorForm& lf);

// Shifts every residue into (0, q], accumulating the finitely many split-off
// terms into the offset; merges colliding residues and drops zero
// coefficients.
ReducedSum shift_to_fundamental(const LinearFactorForm& lf,
                                const std::vector<std::pair<Int, Rat>>& pf);

// Divides out gcd(residues, q) when it exceeds 1; the value of the periodic
// part is preserved exactly.
ReducedSum divide_common_gcd(const ReducedSum& rs);

// f(residue) = coefficient on the support, 0 elsewhere.
okada::PeriodicFunction to_periodic(const ReducedSum& rs);

// Convenience: the full reduction pipeline.
ReducedSum reduce_sum(const poly::Polynomial& numerator, const poly::Polynomial& denominator);

} // namespace perisum::reduce

#endif
