#include "perisum/arith.hpp"

#include <stdexcept>

namespace perisum::arith {

unsigned long valuation(const Int& p, const Int& n) {
    if (n == 0) throw std::domain_error("valuation of zero is undefined");
    Int m = abs(n);
    unsigned long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
    }
    return e;
}

NatFactorization factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize requires a positive integer");
    NatFactorization out;
    out.value = n;
    Int m = n;
    auto strip = [&](const Int& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 6k +/- 1 wheel
    for (Int p = 5; p * p <= m;) {
        strip(p);
        p += 2; // 6k+1
        if (p * p > m) break;
        strip(p);
        p += 4; // next 6k-1
    }
    if (m > 1) out.factors.emplace_back(m, 1);
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (const auto& [p, e] : factorize(n).factors) out.push_back(p);
    return out;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw std::domain_error("euler_phi requires a positive integer");
    Int phi = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        phi *= ipow(p, e - 1) * (p - 1);
    }
    return phi;
}

Int coprime_count_in_progression(const Int& n, const Int& d, const Int& r) {
    if (n <= 1 || d <= 0 || n % d != 0) throw std::domain_error("coprime_count_in_progression: need n > 1 and d | n");
    if (gcd(r, d) != 1) throw std::domain_error("coprime_count_in_progression: gcd(r, d) must be 1");
    Int count = 0;
    const Int steps = n / d;
    for (Int t = 1; t <= steps; ++t) {
        if (gcd(r + t * d, n) == 1) ++count;
    }
    const Int closed = euler_phi(n) / euler_phi(d);
    if (count != closed) throw std::logic_error("coprime count disagrees with phi(n)/phi(d)");
    return count;
}

Int ipow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

} // namespace perisum::arith
