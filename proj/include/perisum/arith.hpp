#ifndef PERISUM_ARITH_HPP
#define PERISUM_ARITH_HPP

#include <utility>
#include <vector>

#include "perisum/types.hpp"

namespace perisum::arith {

// Canonical factorization: primes strictly increasing, exponents >= 1,
// product of prime^exponent equal to value.
struct NatFactorization {
    Int value;
    std::vector<std::pair<Int, unsigned long>> factors;
};

// Largest e with p^e | n.  Throws for n = 0 (the valuation is undefined).
unsigned long valuation(const Int& p, const Int& n);

// Count of 1 <= a <= n coprime to n.
Int euler_phi(const Int& n);

// Trial division with a 2/3 wheel; intended for n up to ~10^12.
NatFactorization factorize(const Int& n);

bool is_prime(const Int& n);

// Ascending list of primes dividing n.
std::vector<Int> prime_divisors(const Int& n);

// Counts elements coprime to n in {r + t*d : t = 1..n/d}.  Requires n > 1,
// d | n, gcd(r, d) = 1.  The count always equals phi(n)/phi(d); the
// implementation counts directly and cross-checks the closed form.
Int coprime_count_in_progression(const Int& n, const Int& d, const Int& r);

Int ipow(const Int& base, unsigned long exp);

} // namespace perisum::arith

#endif
