#ifndef PERISUM_OKADA_HPP
#define PERISUM_OKADA_HPP

#include <utility>
#include <vector>

#include "perisum/types.hpp"

namespace perisum::okada {

// Rational-valued function on residues 1..q (residue q stands for the class
// 0 mod q) with zero mean over a period.  Zero mean is what makes
// sum f(n)/n converge.
class PeriodicFunction {
public:
    // values[i] = f(i + 1); requires q > 1 and sum of values 0.
    PeriodicFunction(long q, std::vector<Rat> values);

    long modulus() const { return q_; }
    const std::vector<Rat>& values() const { return values_; }
    // f at any positive integer n, reduced mod q.
    const Rat& at(const Int& n) const;
    // f at a residue in 1..q.
    const Rat& at_residue(long r) const;

    bool operator==(const PeriodicFunction& other) const = default;

private:
    long q_;
    std::vector<Rat> values_;
};

// Exact residuals of the two vanishing conditions.  The sum f(n)/n is zero
// exactly when every residual vanishes.
struct OkadaReport {
    // (a, residual) for each a in J: f(a) + sum_{r in L} f(r) A(r,a) + f(q)/phi(q)
    std::vector<std::pair<long, Rat>> condition_J;
    // (p, residual) for each prime p | q: sum_{r in L'} f(r) eps(r,p)
    std::vector<std::pair<long, Rat>> condition_P;
    bool vanishes = false;

    bool operator==(const OkadaReport& other) const = default;
};

struct SupportSets {
    std::vector<long> J;       // residues coprime to q
    std::vector<long> L;       // residues with 1 < gcd(r, q) < q
    std::vector<long> Lprime;  // L together with q itself
};

SupportSets support_sets(long q);

// Primes p | q with v_p(r) >= v_p(q).
std::vector<long> saturated_primes(long r, long q);

// v_p(q) + 1/(p-1) when v_p(r) >= v_p(q), otherwise v_p(r).
Rat epsilon(long r, long p, long q);

// All products prod p^{e_p} over saturated primes of r, each exponent in
// [0, phi(q)); {1} when there are none.  Ascending.
std::vector<Int> s_set(long r, long q);

// 1 iff r == a * n * gcd(r, q) (mod q).
bool sigma(long r, long a, const Int& n, long q);

// Weight of f(r) in the condition at a; always >= 0, zero exactly when no
// n in s_set satisfies the congruence.
Rat coefficient_A(long r, long a, long q);

// Evaluates both conditions exactly.
OkadaReport okada_verdict(const PeriodicFunction& f);

struct DecompositionSum {
    Rat value;       // sum of f(a m)/m over m <= bound composed of primes dividing q
    Rat tail_bound;  // max|f| times the exact tail of sum 1/m past the bound
};

// Truncation of the smooth-index sum whose vanishing for every a coprime to
// q is equivalent to the two conditions above.  Requires gcd(a, q) = 1.
DecompositionSum decomposition_sum(const PeriodicFunction& f, long a, const Int& bound);

// g(n) = f(k n); requires gcd(k, q) = 1.  Preserves zero mean, and preserves
// the vanishing verdict.
PeriodicFunction dilate(const PeriodicFunction& f, long k);

// Exact basis of {f supported on the given residues : both conditions and
// zero mean hold}, unknowns ordered as the residues are given.  Basis
// vectors are scaled to coprime integers with positive first nonzero entry.
// Requires distinct residues in (0, q] with gcd(residues, q) = 1.
std::vector<std::vector<Rat>> nullspace_search(long q, const std::vector<long>& residues);

} // namespace perisum::okada

#endif
