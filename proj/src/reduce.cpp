#include "perisum/reduce.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "perisum/arith.hpp"
#include "perisum/errors.hpp"

namespace perisum::reduce {

using poly::Polynomial;

namespace {

constexpr long kModulusLimit = 1'000'000;

} // namespace

LinearFactorForm to_linear_factors(const Polynomial& numerator, const Polynomial& denominator) {
    if (denominator.is_zero()) throw InputError("denominator polynomial is zero");
    if (numerator.is_zero()) throw InputError("numerator polynomial is zero");

    Polynomial num = numerator;
    Polynomial den = denominator;
    Polynomial common = poly::poly_gcd(num, den);
    if (common.degree() >= 1) {
        num = poly::divmod(num, common).first;
        den = poly::divmod(den, common).first;
    }

    if (den.degree() < 1) throw DivergentSum();
    auto roots = poly::rational_roots(den);
    if (!roots.fully_split) throw NotRationalZeros();
    for (const auto& [root, mult] : roots.roots) {
        if (mult > 1) throw NotSimpleZeros();
    }
    if (num.degree() > den.degree() - 2) throw DivergentSum();
    for (const auto& [root, mult] : roots.roots) {
        if (root.get_den() == 1 && root >= 0) throw PoleAtIndex(to_long(root.get_num()));
    }

    Int q_int = 1;
    for (const auto& [root, mult] : roots.roots) q_int = lcm(q_int, root.get_den());
    if (q_int > kModulusLimit) throw InputError("common modulus exceeds supported size: " + q_int.get_str());
    const long q = to_long(q_int);

    LinearFactorForm lf;
    lf.q = q;
    lf.numerator = num;
    for (const auto& [root, mult] : roots.roots) {
        // root -a/b in lowest terms becomes the factor q n + q a/b.
        Rat s = -root * q;
        lf.residues.push_back(s.get_num());
    }
    std::sort(lf.residues.begin(), lf.residues.end());

    // scale * prod (q n + s_i) must reconstruct the denominator exactly;
    // comparing leading coefficients is enough once the roots match.
    lf.scale = den.leading_coefficient() / Rat(arith::ipow(q, lf.residues.size()));
    return lf;
}

std::vector<std::pair<Int, Rat>> partial_fractions(const LinearFactorForm& lf) {
    const std::size_t m = lf.residues.size();
    if (m == 0) throw InputError("no linear factors to decompose");
    if (lf.numerator.degree() > static_cast<long>(m) - 2)
        throw InputError("numerator degree too large for a zero-mean decomposition");

    std::vector<std::pair<Int, Rat>> out;
    Rat total(0);
    for (std::size_t i = 0; i < m; ++i) {
        Rat prod = lf.scale;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != i) prod *= Rat(lf.residues[j] - lf.residues[i]);
        }
        Rat value = poly::evaluate(lf.numerator, make_rat(-lf.residues[i], lf.q));
        if (value == 0)
            throw InputError("numerator shares a zero with the denominator; cancel the factor first");
        Rat coeff = value / prod;
        total += coeff;
        out.emplace_back(lf.residues[i], coeff);
    }
    if (total != 0) throw std::logic_error("partial fraction coefficients must sum to zero");
    return out;
}

ReducedSum shift_to_fundamental(const LinearFactorForm& lf,
                                const std::vector<std::pair<Int, Rat>>& pf) {
    const long q = lf.q;
    Rat offset(0);
    std::map<long, Rat> merged;
    for (const auto& [s, coeff] : pf) {
        // s = s' + q k with s' in (0, q]
        Int k = s - 1;
        mpz_fdiv_q(k.get_mpz_t(), k.get_mpz_t(), Int(q).get_mpz_t());
        Int s_fund = s - k * q;
        if (abs(k) > kModulusLimit) throw InputError("residue shift too large: " + s.get_str());
        const long s_prime = to_long(s_fund);
        const long shift = to_long(k);
        // Split-off initial terms: coeff * sum_{t=0}^{k-1} 1/(q t + s');
        // negative k adds the terms instead.
        for (long t = std::min(shift, 0L); t < std::max(shift, 0L); ++t) {
            Int denom = Int(q) * t + s_prime;
            if (denom == 0) throw PoleAtIndex(to_long(Int(t) - k));
            offset -= coeff * make_rat(Int(shift > 0 ? 1 : -1), denom);
        }
        merged[s_prime] += coeff;
    }

    ReducedSum rs;
    rs.q = q;
    rs.offset = offset;
    for (const auto& [residue, coeff] : merged) {
        if (coeff != 0) rs.terms.emplace_back(residue, coeff);
    }
    return rs;
}

ReducedSum divide_common_gcd(const ReducedSum& rs) {
    if (rs.terms.empty()) return rs;
    ReducedSum out = rs;
    while (true) {
        Int d(out.q);
        for (const auto& [residue, coeff] : out.terms) d = gcd(d, Int(residue));
        if (d == 1) break;
        // sum coeff/(q n + s) = sum (coeff/d)/((q/d) n + s/d)
        const long dl = to_long(d);
        out.q /= dl;
        for (auto& [residue, coeff] : out.terms) {
            residue /= dl;
            coeff /= dl;
        }
        if (out.q == 1) throw std::logic_error("reduced modulus collapsed to 1 with terms remaining");
    }
    return out;
}

okada::PeriodicFunction to_periodic(const ReducedSum& rs) {
    const long q = std::max(rs.q, 2L);
    std::vector<Rat> values(static_cast<std::size_t>(q), Rat(0));
    for (const auto& [residue, coeff] : rs.terms) values[static_cast<std::size_t>(residue) - 1] = coeff;
    return okada::PeriodicFunction(q, std::move(values));
}

ReducedSum reduce_sum(const Polynomial& numerator, const Polynomial& denominator) {
    LinearFactorForm lf = to_linear_factors(numerator, denominator);
    auto pf = partial_fractions(lf);
    ReducedSum rs = shift_to_fundamental(lf, pf);
    return divide_common_gcd(rs);
}

} // namespace perisum::reduce
