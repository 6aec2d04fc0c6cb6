#include "perisum/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "perisum/arith.hpp"
#include "perisum/errors.hpp"

namespace perisum::classify {

using poly::Polynomial;

namespace {

Polynomial denominator_from(long q, const std::vector<long>& residues) {
    Polynomial den = Polynomial::constant(1);
    for (long s : residues) den = den * Polynomial::linear(q, s);
    return den;
}

// v proportional to w by a nonzero rational, with w having no zero entry.
bool proportional(const std::vector<Rat>& v, const std::vector<long>& w) {
    if (v.size() != w.size() || v.empty() || v[0] == 0) return false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] * w[0] != v[0] * Rat(w[i])) return false;
    }
    return true;
}

// The two vanishing support patterns; everything else at degree 4 is
// transcendental, and their dilations coincide with themselves.
const std::vector<long> kPatternQ4 = {1, -3, 1, 1};  // residues 1,2,3,4 at q = 4
const std::vector<long> kPatternQ6 = {-1, 3, -3, 1}; // residues 1,2,4,5 at q = 6

std::optional<std::string> exceptional_pattern_note(const reduce::ReducedSum& rs) {
    std::vector<long> support;
    std::vector<Rat> coeffs;
    for (const auto& [residue, coeff] : rs.terms) {
        support.push_back(residue);
        coeffs.push_back(coeff);
    }
    if (rs.q == 4 && support == std::vector<long>{1, 2, 3, 4} && proportional(coeffs, kPatternQ4))
        return "matches the exceptional vanishing pattern at modulus 4";
    if (rs.q == 6 && support == std::vector<long>{1, 2, 4, 5} && proportional(coeffs, kPatternQ6))
        return "matches the exceptional vanishing pattern at modulus 6";
    return std::nullopt;
}

} // namespace

Verdict classify_sum(const Polynomial& numerator, const Polynomial& denominator) {
    Verdict verdict;
    if (numerator.is_zero()) {
        if (denominator.is_zero()) throw InputError("denominator polynomial is zero");
        verdict.kind = VerdictKind::RationalValue;
        verdict.value = Rat(0);
        verdict.certificate.vanishes = true;
        verdict.notes.push_back("numerator is zero; the sum is empty");
        return verdict;
    }

    reduce::LinearFactorForm lf = reduce::to_linear_factors(numerator, denominator);
    auto pf = reduce::partial_fractions(lf);
    reduce::ReducedSum rs = reduce::shift_to_fundamental(lf, pf);

    if (rs.terms.empty()) {
        verdict.kind = VerdictKind::RationalValue;
        verdict.value = rs.offset;
        verdict.reduced = rs;
        verdict.certificate.vanishes = true;
        verdict.notes.push_back("periodic part cancels after shifting; the sum telescopes");
        return verdict;
    }

    rs = reduce::divide_common_gcd(rs);
    verdict.reduced = rs;
    verdict.certificate = okada::okada_verdict(reduce::to_periodic(rs));
    if (verdict.certificate.vanishes) {
        verdict.kind = VerdictKind::RationalValue;
        verdict.value = rs.offset;
        verdict.notes.push_back("periodic part vanishes by the exact residue conditions");
        if (auto note = exceptional_pattern_note(rs)) verdict.notes.push_back(*note);
    } else {
        verdict.kind = VerdictKind::Transcendental;
        verdict.notes.push_back(
            "periodic part is nonzero by the exact residue conditions; "
            "a nonzero sum of this shape is transcendental");
    }
    return verdict;
}

bool degree2_criterion(long q, long s1, long s2) {
    if (q < 1 || s1 == s2) throw std::domain_error("degree2_criterion needs q >= 1 and distinct residues");
    return (s1 - s2) % q != 0;
}

Verdict theorem_1_1_check(long q, const std::vector<long>& residues, const Polynomial& numerator) {
    if (residues.size() != 4) throw std::domain_error("theorem_1_1_check needs exactly four residues");
    if (numerator.degree() > 2) throw std::domain_error("theorem_1_1_check needs numerator degree <= 2");
    Int g(q);
    for (long s : residues) {
        if (s < 1 || s > q) throw std::domain_error("theorem_1_1_check needs residues in (0, q]");
        g = gcd(g, Int(s));
    }
    if (g != 1) throw std::domain_error("theorem_1_1_check needs residues jointly coprime to q");

    Verdict verdict = classify_sum(numerator, denominator_from(q, residues));
    if (verdict.is_rational() && !verdict.reduced.terms.empty()) {
        if (!exceptional_pattern_note(verdict.reduced))
            throw std::logic_error("vanishing degree-4 sum outside the two known patterns");
        verdict.notes.push_back("flagged exceptional: vanishing degree-4 identity (up to dilation and numerator scale)");
    }
    return verdict;
}

Verdict theorem_c_check(long q, const std::vector<long>& residues, const Polynomial& numerator) {
    if (residues.size() != 3) throw std::domain_error("theorem_c_check needs exactly three residues");
    if (numerator.degree() > 1) throw std::domain_error("theorem_c_check needs numerator degree <= 1");
    if (numerator.is_zero()) throw std::domain_error("theorem_c_check needs a nonzero numerator");

    const Rat alpha = numerator.coefficient(1);
    const Rat beta = numerator.coefficient(0);
    const long s1 = residues[0], s2 = residues[1], s3 = residues[2];

    bool not_same_class = (s1 - s2) % q != 0 || (s1 - s3) % q != 0;
    bool exclusions_hold = (alpha * s3 != beta * q || (s1 - s2) % q != 0) &&
                           (alpha * s2 != beta * q || (s1 - s3) % q != 0) &&
                           (alpha * s1 != beta * q || (s2 - s3) % q != 0);

    Verdict verdict = classify_sum(numerator, denominator_from(q, residues));
    if (not_same_class && exclusions_hold) {
        if (verdict.is_rational())
            throw std::logic_error("degree-3 criterion predicts a transcendental sum but the exact conditions vanish");
        verdict.notes.push_back("degree-3 criterion: residues split across classes and no degenerate alignment");
    } else {
        verdict.notes.push_back("degree-3 criterion hypotheses not met; resolved by the exact conditions");
    }
    return verdict;
}

std::vector<ExceptionHit> exhaustive_exception_search(long q_max) {
    std::vector<ExceptionHit> hits;
    for (long q = 4; q <= q_max; ++q) {
        // all 4-subsets of (0, q]
        std::vector<long> idx = {1, 2, 3, 4};
        while (true) {
            Int g(q);
            for (long s : idx) g = gcd(g, Int(s));
            if (g == 1) {
                auto basis = okada::nullspace_search(q, idx);
                if (!basis.empty()) {
                    // A solution nonzero on all four residues exists exactly
                    // when no coordinate vanishes across the whole basis.
                    bool covering = true;
                    for (std::size_t c = 0; c < 4 && covering; ++c) {
                        bool nonzero = false;
                        for (const auto& v : basis) nonzero = nonzero || v[c] != 0;
                        covering = nonzero;
                    }
                    if (covering) {
                        std::vector<Rat> pattern = basis[0];
                        if (basis.size() > 1) {
                            // Combine basis vectors until every entry is nonzero.
                            for (long t = 1;; ++t) {
                                pattern = basis[0];
                                Rat weight(1);
                                for (std::size_t b = 1; b < basis.size(); ++b) {
                                    weight *= t;
                                    for (std::size_t c = 0; c < 4; ++c) pattern[c] += weight * basis[b][c];
                                }
                                if (std::none_of(pattern.begin(), pattern.end(),
                                                 [](const Rat& x) { return x == 0; }))
                                    break;
                            }
                        }
                        hits.push_back({q, idx, pattern});
                    }
                }
            }
            // next 4-subset in lexicographic order
            int i = 3;
            while (i >= 0 && idx[i] == q - (3 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < 4; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return hits;
}

} // namespace perisum::classify
