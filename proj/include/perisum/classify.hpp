#ifndef PERISUM_CLASSIFY_HPP
#define PERISUM_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "perisum/okada.hpp"
#include "perisum/poly.hpp"
#include "perisum/reduce.hpp"

namespace perisum::classify {

enum class VerdictKind { RationalValue, Transcendental };

// Final classification with the exact certificate that produced it.  A sum
// of this shape is either an explicitly computable rational number or
// transcendental; kind = RationalValue exactly when the certificate
// vanishes or the reduced periodic part is empty.
struct Verdict {
    VerdictKind kind = VerdictKind::Transcendental;
    std::optional<Rat> value;       // the offset, present iff RationalValue
    okada::OkadaReport certificate;
    reduce::ReducedSum reduced;
    std::vector<std::string> notes;

    bool is_rational() const { return kind == VerdictKind::RationalValue; }
};

// Full pipeline: reduce to a periodic sum, then decide vanishing exactly.
Verdict classify_sum(const poly::Polynomial& numerator, const poly::Polynomial& denominator);

// True (transcendental) iff s1 and s2 fall in different classes mod q.
// Agrees with classify_sum on sum 1/((q n + s1)(q n + s2)).
bool degree2_criterion(long q, long s1, long s2);

// Classification for four distinct residues in (0, q] jointly coprime to q
// and a numerator of degree <= 2; notes flag the two exceptional vanishing
// patterns (q = 4 and q = 6) including their dilation equivalents.
Verdict theorem_1_1_check(long q, const std::vector<long>& residues,
                          const poly::Polynomial& numerator);

// Degree-3 denominator with numerator alpha n + beta.  When the residues
// avoid a single class mod q and the three degenerate alignments
// alpha*s_i = beta*q are excluded, the sum is transcendental outright;
// otherwise decides through the full pipeline.
Verdict theorem_c_check(long q, const std::vector<long>& residues,
                        const poly::Polynomial& numerator);

// A residue tuple admitting a nonzero vanishing pattern on all four
// support points.
struct ExceptionHit {
    long q = 0;
    std::vector<long> residues;
    std::vector<Rat> pattern; // coprime integers, first nonzero entry positive
};

// Sweeps every q <= q_max and every 4-subset of (0, q] jointly coprime to q,
// reporting the tuples whose vanishing system has a solution that is nonzero
// on all four residues.  Deterministic order by (q, residues).
std::vector<ExceptionHit> exhaustive_exception_search(long q_max);

} // namespace perisum::classify

#endif
