#ifndef PERISUM_POLY_HPP
#define PERISUM_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "perisum/types.hpp"

namespace perisum::poly {

// Dense polynomial over the rationals, coefficient index = degree of the
// term.  Canonical form: no trailing zero coefficient; the zero polynomial
// is the empty list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coefficients);
    static Polynomial constant(const Rat& c);
    // a*x + b
    static Polynomial linear(const Rat& a, const Rat& b);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    const Rat& leading_coefficient() const;
    Rat coefficient(std::size_t degree) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& other) const = default;

private:
    std::vector<Rat> coeffs_;
};

// Grammar: terms `c`, `c*n`, `c*n^k`, `n^k`, `n` joined by `+`/`-`, with c
// an integer or a/b rational; whitespace is ignored.  Like terms combine.
// Throws ParseError with the byte offset of the offending character.
Polynomial parse_polynomial(const std::string& text);

// Inverse of parse_polynomial on canonical forms.
std::string to_string(const Polynomial& p);

Rat evaluate(const Polynomial& p, const Rat& x);

// Quotient and remainder with deg r < deg b.  Throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// True iff b divides a with zero remainder.
bool divides(const Polynomial& b, const Polynomial& a);

// Monic gcd by the Euclidean algorithm.  Throws if both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct RationalRoots {
    // (root, multiplicity), roots ascending.
    std::vector<std::pair<Rat, unsigned long>> roots;
    // True iff the polynomial splits completely into rational linear factors.
    bool fully_split = false;
};

// All rational roots with multiplicities, via the rational root theorem on
// the primitive integer form.  Requires a nonzero input of degree >= 1.
RationalRoots rational_roots(const Polynomial& q);

} // namespace perisum::poly

#endif
