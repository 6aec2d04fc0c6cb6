#ifndef PERISUM_TYPES_HPP
#define PERISUM_TYPES_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace perisum {

// Arbitrary-precision integers and rationals back every exact quantity in
// the engine; nothing overflows silently.
using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form (gcd 1, positive denominator).
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Canonical fraction string: "p" for integers, "p/q" with q > 0 otherwise.
inline std::string to_fraction_string(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q"; throws on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

// Checked narrowing; the engine guards all moduli to desk scale.
inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer exceeds machine range: " + n.get_str());
    return n.get_si();
}

} // namespace perisum

#endif
