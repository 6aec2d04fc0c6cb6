// Shared fixtures: the reference periodic functions and pipeline inputs the
// invariant tests sweep over.
#ifndef PERISUM_TESTS_SUPPORT_HPP
#define PERISUM_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "perisum/okada.hpp"
#include "perisum/poly.hpp"
#include "perisum/types.hpp"

namespace testsupport {

using perisum::Rat;
using perisum::okada::PeriodicFunction;
using perisum::poly::Polynomial;

inline PeriodicFunction make_pf(long q, const std::vector<Rat>& values) {
    return PeriodicFunction(q, values);
}

inline std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// The q = 4 vanishing pattern and the exact coefficients of its companion
// numerator 16n^2+12n-1, which differ by the factor -1/2.
inline PeriodicFunction vanishing_q4() { return make_pf(4, rats({1, -3, 1, 1})); }
inline PeriodicFunction vanishing_q6() {
    return make_pf(6, {Rat(-1, 2), Rat(3, 2), Rat(0), Rat(-3, 2), Rat(1, 2), Rat(0)});
}

inline std::vector<PeriodicFunction> vanishing_corpus() {
    std::vector<PeriodicFunction> out;
    out.push_back(vanishing_q4());
    out.push_back(vanishing_q6());
    // scalar multiples vanish too
    out.push_back(make_pf(4, {Rat(-1, 2), Rat(3, 2), Rat(-1, 2), Rat(-1, 2)}));
    out.push_back(make_pf(6, rats({-1, 3, 0, -3, 1, 0})));
    return out;
}

inline std::vector<PeriodicFunction> nonvanishing_corpus() {
    std::vector<PeriodicFunction> out;
    out.push_back(make_pf(2, rats({1, -1})));                        // ln 2
    out.push_back(make_pf(3, rats({1, -1, 0})));
    out.push_back(make_pf(2, {Rat(1, 3), Rat(-1, 3)}));
    out.push_back(make_pf(4, {Rat(1, 3), Rat(-1, 2), Rat(0), Rat(1, 6)}));
    out.push_back(make_pf(3, {Rat(1, 2), Rat(-1), Rat(1, 2)}));
    out.push_back(make_pf(6, rats({1, 1, 1, -1, -1, -1})));
    out.push_back(make_pf(4, {Rat(8, 3), Rat(-4), Rat(0), Rat(4, 3)})); // pi/3 input reduced
    return out;
}

inline std::vector<PeriodicFunction> full_corpus() {
    auto out = vanishing_corpus();
    for (auto& f : nonvanishing_corpus()) out.push_back(f);
    return out;
}

inline Polynomial poly_from(const std::string& text) { return perisum::poly::parse_polynomial(text); }

// (a n + b) factors multiplied out.
inline Polynomial product_of(const std::vector<std::pair<long, long>>& factors) {
    Polynomial out = Polynomial::constant(1);
    for (const auto& [a, b] : factors) out = out * Polynomial::linear(Rat(a), Rat(b));
    return out;
}

struct PipelineCase {
    std::string name;
    Polynomial numerator;
    Polynomial denominator;
};

// Inputs covering vanishing, transcendental, and telescoping behaviour.
inline std::vector<PipelineCase> pipeline_corpus() {
    return {
        {"vanishing degree-4 at q=4", poly_from("16*n^2+12*n-1"),
         product_of({{4, 1}, {4, 2}, {4, 3}, {4, 4}})},
        {"vanishing degree-4 at q=6", poly_from("36*n^2+36*n-1"),
         product_of({{6, 1}, {6, 2}, {6, 4}, {6, 5}})},
        {"pi/3", poly_from("1"), product_of({{1, 1}, {2, 1}, {4, 1}})},
        {"ln2 - 1/2", poly_from("1"), product_of({{2, 1}, {2, 2}, {2, 3}})},
        {"degree-3 all classes", poly_from("1"), product_of({{3, 1}, {3, 2}, {3, 3}})},
        {"telescoping", poly_from("1"), product_of({{1, 1}, {1, 2}, {1, 3}})},
        {"shift with collision", poly_from("1"), product_of({{2, 1}, {2, 2}, {2, 4}})},
        {"mixed residues at q=4", poly_from("1"), product_of({{4, 2}, {4, 4}, {4, 5}})},
        // shifted coefficients cancel on residue 1, leaving {2,4} to divide down to q=2
        {"merge drop and gcd division", poly_from("16*n^2-43"),
         product_of({{4, 1}, {4, 2}, {4, 4}, {4, 5}, {4, 8}})},
    };
}

} // namespace testsupport

#endif
