#include "perisum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "perisum/errors.hpp"

namespace perisum::poly {

namespace {

void trim_trailing_zeros(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Polynomial::Polynomial(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
    trim_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(const Rat& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rat& a, const Rat& b) { return Polynomial({b, a}); }

const Rat& Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat Polynomial::coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Rat(0);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rat& s) const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Rat evaluate(const Polynomial& p, const Rat& x) {
    Rat acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.coefficients();
    const auto& div = b.coefficients();
    if (rem.size() < div.size()) return {Polynomial(), a};
    std::vector<Rat> quot(rem.size() - div.size() + 1, Rat(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rat factor = rem[k + div.size() - 1] / div.back();
        quot[k] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= factor * div[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& b, const Polynomial& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).second.is_zero();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = y;
        y = r;
    }
    // monic normalization
    return x * (Rat(1) / x.leading_coefficient());
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int parse_unsigned_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a digit", start);
        return Int(text.substr(start, pos - start));
    }

    // integer or a/b rational, no sign
    Rat parse_coefficient() {
        Int num = parse_unsigned_integer();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            std::size_t slash = pos;
            ++pos;
            Int den = parse_unsigned_integer();
            if (den == 0) throw ParseError("zero denominator in coefficient", slash + 1);
            return make_rat(num, den);
        }
        return Rat(num);
    }

    // [coeff '*'] 'n' ['^' k]  |  coeff
    void parse_term(int sign, std::map<unsigned long, Rat>& acc) {
        skip_ws();
        Rat coeff(1);
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_coefficient();
            have_coeff = true;
        }
        unsigned long degree = 0;
        skip_ws();
        bool want_var = !have_coeff;
        if (have_coeff && pos < text.size() && text[pos] == '*') {
            ++pos;
            want_var = true;
        }
        if (want_var) {
            skip_ws();
            if (pos >= text.size() || text[pos] != 'n')
                throw ParseError("expected variable 'n'", pos);
            ++pos;
            degree = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                Int k = parse_unsigned_integer();
                if (!k.fits_ulong_p()) throw ParseError("exponent too large", pos);
                degree = k.get_ui();
            }
        }
        acc[degree] += sign < 0 ? Rat(-coeff) : coeff;
    }

    Polynomial parse() {
        std::map<unsigned long, Rat> acc;
        if (at_end()) throw ParseError("empty polynomial", pos);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        }
        parse_term(sign, acc);
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos);
            ++pos;
            parse_term(op == '-' ? -1 : 1, acc);
        }
        std::vector<Rat> coeffs;
        for (const auto& [deg, c] : acc) {
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
            coeffs[deg] = c;
        }
        return Polynomial(std::move(coeffs));
    }
};

std::string coefficient_string(const Rat& c) { return c.get_str(); }

} // namespace

Polynomial parse_polynomial(const std::string& text) {
    Parser parser{text};
    return parser.parse();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat mag = abs(c[i]);
        if (out.empty()) {
            if (c[i] < 0) out += "-";
        } else {
            out += c[i] < 0 ? "-" : "+";
        }
        if (i == 0) {
            out += coefficient_string(mag);
        } else {
            if (mag != 1) {
                out += coefficient_string(mag);
                out += "*";
            }
            out += "n";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

namespace {

std::vector<Int> positive_divisors(const Int& n) {
    Int m = abs(n);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.push_back(d);
            if (d != m / d) divs.push_back(m / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

RationalRoots rational_roots(const Polynomial& q) {
    if (q.is_zero() || q.degree() < 1)
        throw std::domain_error("rational_roots requires a nonzero polynomial of degree >= 1");

    RationalRoots out;
    Polynomial work = q;

    // Factor out x^k first so the constant coefficient is nonzero.
    unsigned long zero_mult = 0;
    while (!work.is_zero() && work.coefficient(0) == 0) {
        std::vector<Rat> shifted(work.coefficients().begin() + 1, work.coefficients().end());
        work = Polynomial(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);

    if (work.degree() >= 1) {
        // Primitive integer form: clear denominators, strip content.
        Int den_lcm = 1;
        for (const auto& c : work.coefficients()) den_lcm = lcm(den_lcm, c.get_den());
        std::vector<Int> ic;
        ic.reserve(work.coefficients().size());
        for (const auto& c : work.coefficients()) ic.push_back(Int(c * den_lcm));
        Int content = 0;
        for (const auto& c : ic) content = gcd(content, c);
        for (auto& c : ic) c /= content;

        const Int lead = ic.back();
        const Int constant = ic.front();
        for (const Int& p : positive_divisors(constant)) {
            for (const Int& s : positive_divisors(lead)) {
                if (gcd(p, s) != 1) continue;
                for (int sign : {1, -1}) {
                    Rat candidate = make_rat(sign * p, s);
                    if (evaluate(work, candidate) != 0) continue;
                    Polynomial factor = Polynomial::linear(1, -candidate);
                    unsigned long mult = 0;
                    while (true) {
                        auto [quot, rem] = divmod(work, factor);
                        if (!rem.is_zero()) break;
                        work = quot;
                        ++mult;
                    }
                    out.roots.emplace_back(candidate, mult);
                }
            }
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    unsigned long total = 0;
    for (const auto& [root, mult] : out.roots) total += mult;
    out.fully_split = total == static_cast<unsigned long>(q.degree());
    return out;
}

} // namespace perisum::poly
