#include <doctest.h>

#include <cmath>

#include "perisum/errors.hpp"
#include "perisum/numeric.hpp"
#include "perisum/reduce.hpp"
#include "support.hpp"

using namespace perisum;
using namespace perisum::reduce;
using perisum::poly::Polynomial;
using testsupport::poly_from;
using testsupport::product_of;

TEST_CASE("to_linear_factors on the pi/3 denominator") {
    auto lf = to_linear_factors(poly_from("1"), product_of({{1, 1}, {2, 1}, {4, 1}}));
    CHECK(lf.q == 4);
    CHECK(lf.residues == std::vector<Int>{1, 2, 4});
    CHECK(lf.scale == Rat(1, 8));

    // scale * prod (q n + s) reconstructs the denominator exactly
    Polynomial rebuilt = Polynomial::constant(lf.scale);
    for (const auto& s : lf.residues) rebuilt = rebuilt * Polynomial::linear(Rat(lf.q), Rat(s));
    CHECK(rebuilt == product_of({{1, 1}, {2, 1}, {4, 1}}));
}

TEST_CASE("to_linear_factors on the q=4 vanishing identity") {
    auto lf = to_linear_factors(poly_from("16*n^2+12*n-1"), product_of({{4, 1}, {4, 2}, {4, 3}, {4, 4}}));
    CHECK(lf.q == 4);
    CHECK(lf.residues == std::vector<Int>{1, 2, 3, 4});
    CHECK(lf.scale == 1);
}

TEST_CASE("to_linear_factors passes colliding residues through") {
    auto lf = to_linear_factors(poly_from("1"), product_of({{2, 1}, {2, 2}, {2, 4}}));
    CHECK(lf.q == 2);
    CHECK(lf.residues == std::vector<Int>{1, 2, 4});
    CHECK(lf.scale == 1);
}

TEST_CASE("to_linear_factors rejects bad denominators") {
    CHECK_THROWS_AS(to_linear_factors(poly_from("1"), poly_from("n^2+1")), NotRationalZeros);
    CHECK_THROWS_AS(to_linear_factors(poly_from("1"), poly_from("4*n^2+4*n+1")), NotSimpleZeros);
    CHECK_THROWS_AS(to_linear_factors(poly_from("n"), product_of({{2, 1}, {2, 3}})), DivergentSum);
    CHECK_THROWS_AS(to_linear_factors(poly_from("1"), poly_from("2*n")), DivergentSum);
    CHECK_THROWS_AS(to_linear_factors(poly_from("1"), product_of({{1, -2}, {2, 1}, {2, 3}})), PoleAtIndex);
    try {
        to_linear_factors(poly_from("1"), product_of({{1, -2}, {2, 1}, {2, 3}}));
    } catch (const PoleAtIndex& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("cancellation happens before the simplicity check") {
    // (2n+1) in the numerator cancels the repeated factor
    auto lf = to_linear_factors(poly_from("2*n+1"), product_of({{2, 1}, {2, 1}, {2, 3}, {2, 5}}));
    CHECK(lf.q == 2);
    CHECK(lf.residues == std::vector<Int>{1, 3, 5});
}

TEST_CASE("partial fractions: pi/3 input") {
    auto lf = to_linear_factors(poly_from("1"), product_of({{1, 1}, {2, 1}, {4, 1}}));
    auto pf = partial_fractions(lf);
    REQUIRE(pf.size() == 3);
    CHECK(pf[0] == std::pair<Int, Rat>{1, Rat(8, 3)});
    CHECK(pf[1] == std::pair<Int, Rat>{2, Rat(-4)});
    CHECK(pf[2] == std::pair<Int, Rat>{4, Rat(4, 3)});
}

TEST_CASE("partial fractions: exact coefficients of the two vanishing identities") {
    // the common display scales these to (1,-3,1,1); the residue formula is exact
    auto lf4 = to_linear_factors(poly_from("16*n^2+12*n-1"), product_of({{4, 1}, {4, 2}, {4, 3}, {4, 4}}));
    auto pf4 = partial_fractions(lf4);
    REQUIRE(pf4.size() == 4);
    CHECK(pf4[0].second == Rat(-1, 2));
    CHECK(pf4[1].second == Rat(3, 2));
    CHECK(pf4[2].second == Rat(-1, 2));
    CHECK(pf4[3].second == Rat(-1, 2));

    auto lf6 = to_linear_factors(poly_from("36*n^2+36*n-1"), product_of({{6, 1}, {6, 2}, {6, 4}, {6, 5}}));
    auto pf6 = partial_fractions(lf6);
    REQUIRE(pf6.size() == 4);
    CHECK(pf6[0].second == Rat(-1, 2));
    CHECK(pf6[1].second == Rat(3, 2));
    CHECK(pf6[2].second == Rat(-3, 2));
    CHECK(pf6[3].second == Rat(1, 2));
}

TEST_CASE("partial fractions: simple two-term split") {
    auto lf = to_linear_factors(poly_from("1"), product_of({{2, 1}, {2, 2}}));
    auto pf = partial_fractions(lf);
    REQUIRE(pf.size() == 2);
    CHECK(pf[0] == std::pair<Int, Rat>{1, Rat(1)});
    CHECK(pf[1] == std::pair<Int, Rat>{2, Rat(-1)});
}

TEST_CASE("partial fractions recombine to the numerator") {
    for (const auto& testcase : testsupport::pipeline_corpus()) {
        CAPTURE(testcase.name);
        auto lf = to_linear_factors(testcase.numerator, testcase.denominator);
        auto pf = partial_fractions(lf);

        // sum_i A_i * scale * prod_{j != i} (q n + s_j) must equal the numerator
        Polynomial total;
        Rat coeff_sum(0);
        for (std::size_t i = 0; i < pf.size(); ++i) {
            Polynomial prod = Polynomial::constant(pf[i].second * lf.scale);
            for (std::size_t j = 0; j < pf.size(); ++j) {
                if (j != i) prod = prod * Polynomial::linear(Rat(lf.q), Rat(lf.residues[j]));
            }
            total = total + prod;
            coeff_sum += pf[i].second;
        }
        CHECK(total == lf.numerator);
        CHECK(coeff_sum == 0);
    }
}

TEST_CASE("shift_to_fundamental: offset and merged terms") {
    auto lf = to_linear_factors(poly_from("1"), product_of({{2, 1}, {2, 2}, {2, 3}}));
    auto rs = shift_to_fundamental(lf, partial_fractions(lf));
    CHECK(rs.q == 2);
    CHECK(rs.offset == Rat(-1, 2));
    REQUIRE(rs.terms.size() == 2);
    CHECK(rs.terms[0] == std::pair<long, Rat>{1, Rat(1)});
    CHECK(rs.terms[1] == std::pair<long, Rat>{2, Rat(-1)});
}

TEST_CASE("shift_to_fundamental: already fundamental input is unchanged") {
    auto lf = to_linear_factors(poly_from("1"), product_of({{3, 1}, {3, 2}, {3, 3}}));
    auto pf = partial_fractions(lf);
    auto rs = shift_to_fundamental(lf, pf);
    CHECK(rs.offset == 0);
    REQUIRE(rs.terms.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rs.terms[i].first == pf[i].first);
        CHECK(rs.terms[i].second == pf[i].second);
    }
}

TEST_CASE("shift_to_fundamental: total cancellation leaves only the offset") {
    LinearFactorForm lf;
    lf.q = 3;
    lf.scale = 1;
    lf.residues = {1, 4};
    lf.numerator = poly_from("3"); // telescoping sum of 1/(3n+1) - 1/(3n+4)
    auto pf = partial_fractions(lf);
    REQUIRE(pf.size() == 2);
    CHECK(pf[0].second == 1);
    CHECK(pf[1].second == -1);
    auto rs = shift_to_fundamental(lf, pf);
    CHECK(rs.terms.empty());
    CHECK(rs.offset == 1);

    // brute-force partial sums approach the offset
    double direct = numeric::direct_partial_sum(poly_from("3"), product_of({{3, 1}, {3, 4}}), 200000);
    CHECK(std::abs(direct - 1.0) < 1e-4);
}

TEST_CASE("negative residues shift upward into the fundamental range") {
    // (2n-1)(2n+1)(2n+3) has a factor vanishing at no integer n >= 0
    auto lf = to_linear_factors(poly_from("1"), product_of({{2, -1}, {2, 1}, {2, 3}}));
    CHECK(lf.residues == std::vector<Int>{-1, 1, 3});
    auto rs = shift_to_fundamental(lf, partial_fractions(lf));
    Rat coeff_sum(0);
    for (const auto& [residue, coeff] : rs.terms) {
        CHECK(residue >= 1);
        CHECK(residue <= 2);
        coeff_sum += coeff;
    }
    CHECK(coeff_sum == 0);

    // value agrees with direct truncation
    auto f = to_periodic(divide_common_gcd(rs));
    auto s = numeric::sum_value(f);
    double direct = numeric::direct_partial_sum(poly_from("1"), product_of({{2, -1}, {2, 1}, {2, 3}}), 1000000);
    CHECK(std::abs(rs.offset.get_d() + s.value - direct) < 1e-4);
}

TEST_CASE("divide_common_gcd") {
    ReducedSum rs;
    rs.q = 4;
    rs.terms = {{2, Rat(1)}, {4, Rat(-1)}};
    auto out = divide_common_gcd(rs);
    CHECK(out.q == 2);
    REQUIRE(out.terms.size() == 2);
    CHECK(out.terms[0] == std::pair<long, Rat>{1, Rat(1, 2)});
    CHECK(out.terms[1] == std::pair<long, Rat>{2, Rat(-1, 2)});

    ReducedSum untouched;
    untouched.q = 4;
    untouched.terms = {{1, Rat(1)}, {2, Rat(-1)}};
    CHECK(divide_common_gcd(untouched).q == 4);

    ReducedSum six;
    six.q = 6;
    six.terms = {{3, Rat(1)}, {6, Rat(-1)}};
    auto out6 = divide_common_gcd(six);
    CHECK(out6.q == 2);
    REQUIRE(out6.terms.size() == 2);
    CHECK(out6.terms[0] == std::pair<long, Rat>{1, Rat(1, 3)});
    CHECK(out6.terms[1] == std::pair<long, Rat>{2, Rat(-1, 3)});
}

TEST_CASE("divide_common_gcd preserves the value (ln 2 scalings)") {
    ReducedSum rs;
    rs.q = 4;
    rs.terms = {{2, Rat(1)}, {4, Rat(-1)}};
    auto s = numeric::sum_value(to_periodic(divide_common_gcd(rs)));
    CHECK(std::abs(s.value - std::log(2.0) / 2) < 1e-9);

    ReducedSum six;
    six.q = 6;
    six.terms = {{3, Rat(1)}, {6, Rat(-1)}};
    auto s6 = numeric::sum_value(to_periodic(divide_common_gcd(six)));
    CHECK(std::abs(s6.value - std::log(2.0) / 3) < 1e-9);
}

TEST_CASE("to_periodic") {
    ReducedSum rs;
    rs.q = 4;
    rs.terms = {{1, Rat(-1, 2)}, {2, Rat(3, 2)}, {3, Rat(-1, 2)}, {4, Rat(-1, 2)}};
    auto f = to_periodic(rs);
    CHECK(f.modulus() == 4);
    CHECK(f.at_residue(2) == Rat(3, 2));

    ReducedSum empty;
    empty.q = 1;
    auto zero = to_periodic(empty);
    CHECK(zero.modulus() == 2);
    CHECK(zero.at_residue(1) == 0);
    CHECK(zero.at_residue(2) == 0);
}

TEST_CASE("pipeline preserves the value numerically") {
    for (const auto& testcase : testsupport::pipeline_corpus()) {
        CAPTURE(testcase.name);
        auto rs = reduce_sum(testcase.numerator, testcase.denominator);
        double reduced_value = rs.offset.get_d();
        if (!rs.terms.empty()) reduced_value += numeric::sum_value(to_periodic(rs)).value;
        double direct = numeric::direct_partial_sum(testcase.numerator, testcase.denominator, 1000000);
        CHECK(std::abs(reduced_value - direct) < 1e-3);
    }
}

TEST_CASE("coefficients sum to zero after every stage") {
    for (const auto& testcase : testsupport::pipeline_corpus()) {
        CAPTURE(testcase.name);
        auto lf = to_linear_factors(testcase.numerator, testcase.denominator);
        auto pf = partial_fractions(lf);
        Rat sum(0);
        for (const auto& [s, c] : pf) sum += c;
        CHECK(sum == 0);

        auto rs = shift_to_fundamental(lf, pf);
        sum = 0;
        for (const auto& [s, c] : rs.terms) sum += c;
        CHECK(sum == 0);

        auto divided = divide_common_gcd(rs);
        sum = 0;
        for (const auto& [s, c] : divided.terms) sum += c;
        CHECK(sum == 0);

        // residues distinct, in (0, q], jointly coprime to q
        if (!divided.terms.empty()) {
            CHECK(divided.q > 1);
            Int g(divided.q);
            long prev = 0;
            for (const auto& [s, c] : divided.terms) {
                CHECK(s > prev);
                CHECK(s <= divided.q);
                CHECK(c != 0);
                g = gcd(g, Int(s));
                prev = s;
            }
            CHECK(g == 1);
        }
    }
}
