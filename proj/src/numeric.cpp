#include "perisum/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace perisum::numeric {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kRoundingAllowance = 1e-12;

} // namespace

double digamma_rational(long a, long q) {
    if (a < 1 || a > q) throw std::domain_error("digamma_rational needs 0 < a <= q");
    if (a == q) return -kEulerGamma; // psi(1)
    const double pi = std::acos(-1.0);
    const double x = static_cast<double>(a) / static_cast<double>(q);
    double psi = -kEulerGamma - std::log(2.0 * q) - (pi / 2.0) / std::tan(pi * x);
    for (long k = 1; 2 * k < q; ++k) {
        psi += 2.0 * std::cos(2.0 * pi * k * x) * std::log(std::sin(pi * k / static_cast<double>(q)));
    }
    return psi;
}

NumericResult sum_value(const okada::PeriodicFunction& f) {
    const long q = f.modulus();
    double acc = 0.0;
    double abs_sum = 0.0;
    for (long a = 1; a <= q; ++a) {
        const double fa = f.at_residue(a).get_d();
        if (fa == 0.0) continue;
        acc += fa * digamma_rational(a, q);
        abs_sum += std::abs(fa);
    }
    // The digamma values carry ~1e-13 absolute error at desk-scale q; the
    // stated bound is deliberately generous.
    return {-acc / static_cast<double>(q), 1e-10 * abs_sum};
}

NumericResult truncated_sum(const okada::PeriodicFunction& f, long N) {
    const long q = f.modulus();
    if (N < q) throw std::domain_error("truncated_sum needs N >= q");
    std::vector<double> values(static_cast<std::size_t>(q));
    double max_abs = 0.0;
    double abs_sum = 0.0;
    for (long a = 1; a <= q; ++a) {
        values[a - 1] = f.at_residue(a).get_d();
        max_abs = std::max(max_abs, std::abs(values[a - 1]));
        abs_sum += std::abs(values[a - 1]);
    }
    double acc = 0.0;
    for (long n = N; n >= 1; --n) { // small terms first
        const double fn = values[(n - 1) % q];
        if (fn != 0.0) acc += fn / static_cast<double>(n);
    }
    const double tail = static_cast<double>(q) * max_abs / static_cast<double>(N);
    return {acc, tail + kRoundingAllowance * (1.0 + abs_sum)};
}

NumericResult total_value(const poly::Polynomial& numerator, const poly::Polynomial& denominator) {
    if (numerator.is_zero()) return {0.0, 0.0};
    reduce::ReducedSum rs = reduce::reduce_sum(numerator, denominator);
    const double offset = rs.offset.get_d();
    if (rs.terms.empty()) return {offset, kRoundingAllowance * (1.0 + std::abs(offset))};
    NumericResult s = sum_value(reduce::to_periodic(rs));
    return {offset + s.value, s.error_bound + kRoundingAllowance * (1.0 + std::abs(offset))};
}

double direct_partial_sum(const poly::Polynomial& numerator, const poly::Polynomial& denominator,
                          long N) {
    auto horner = [](const poly::Polynomial& p, double x) {
        double acc = 0.0;
        const auto& c = p.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    };
    double acc = 0.0;
    for (long n = N; n >= 0; --n) {
        const double q = horner(denominator, static_cast<double>(n));
        if (q == 0.0) throw std::domain_error("denominator vanishes at n = " + std::to_string(n));
        acc += horner(numerator, static_cast<double>(n)) / q;
    }
    return acc;
}

} // namespace perisum::numeric
