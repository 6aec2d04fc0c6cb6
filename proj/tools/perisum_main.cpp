// Command-line front end: classify, evaluate, search, report.
//
// Exit codes: 0 rational value (or plain success), 1 input error,
// 2 numeric cross-check failure, 3 transcendental.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "perisum/arith.hpp"
#include "perisum/classify.hpp"
#include "perisum/errors.hpp"
#include "perisum/numeric.hpp"
#include "perisum/report.hpp"

namespace {

using namespace perisum;

constexpr int kExitRational = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCrossCheckFailure = 2;
constexpr int kExitTranscendental = 3;

// Denominator text is either a polynomial or a factor list "(a,b)(c,d)..."
// standing for (a n + b)(c n + d)...
poly::Polynomial parse_denominator(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '(') {
        poly::Polynomial den = poly::Polynomial::constant(1);
        std::size_t pos = first;
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                continue;
            }
            if (text[pos] != '(') throw ParseError("expected '(' in factor list", pos);
            std::size_t comma = text.find(',', pos);
            std::size_t close = text.find(')', pos);
            if (comma == std::string::npos || close == std::string::npos || comma > close)
                throw ParseError("expected '(a,b)' factor", pos);
            Int a(text.substr(pos + 1, comma - pos - 1));
            Int b(text.substr(comma + 1, close - comma - 1));
            den = den * poly::Polynomial::linear(Rat(a), Rat(b));
            pos = close + 1;
        }
        return den;
    }
    return poly::parse_polynomial(text);
}

int run_classify(const std::string& num_text, const std::string& den_text, bool as_json,
                 bool precision_check) {
    poly::Polynomial num = poly::parse_polynomial(num_text);
    poly::Polynomial den = parse_denominator(den_text);
    classify::Verdict verdict = classify::classify_sum(num, den);
    numeric::NumericResult value = numeric::total_value(num, den);
    report::Report rep = report::build_report(num_text, den_text, verdict, value);

    if (as_json)
        std::cout << report::to_json(rep).dump(2) << "\n";
    else
        std::cout << report::to_text(rep);

    if (precision_check) {
        bool consistent;
        if (verdict.is_rational()) {
            consistent = std::abs(value.value - verdict.value->get_d()) <=
                         value.error_bound + 1e-9;
        } else {
            // A nonvanishing periodic part keeps the sum well away from the
            // offset at desk scale.
            consistent = std::abs(value.value - verdict.reduced.offset.get_d()) >
                         10.0 * value.error_bound;
        }
        if (!consistent) {
            std::cerr << "numeric channel disagrees with the exact verdict\n";
            return kExitCrossCheckFailure;
        }
    }
    return verdict.is_rational() ? kExitRational : kExitTranscendental;
}

int run_evaluate(const std::string& num_text, const std::string& den_text, long truncate) {
    poly::Polynomial num = poly::parse_polynomial(num_text);
    poly::Polynomial den = parse_denominator(den_text);
    numeric::NumericResult result;
    if (truncate > 0) {
        reduce::ReducedSum rs = num.is_zero() ? reduce::ReducedSum{} : reduce::reduce_sum(num, den);
        if (num.is_zero() || rs.terms.empty()) {
            result = {num.is_zero() ? 0.0 : rs.offset.get_d(), 1e-12};
        } else {
            numeric::NumericResult s = numeric::truncated_sum(reduce::to_periodic(rs), truncate);
            result = {rs.offset.get_d() + s.value, s.error_bound + 1e-12};
        }
    } else {
        result = numeric::total_value(num, den);
    }
    std::printf("%.11f +/- %.3e\n", result.value, result.error_bound);
    return 0;
}

int run_search(long q_max, bool as_json) {
    auto hits = classify::exhaustive_exception_search(q_max);
    if (as_json) {
        report::json out = report::json::array();
        for (const auto& hit : hits) {
            report::json pattern = report::json::array();
            for (const auto& x : hit.pattern) pattern.push_back(to_fraction_string(x));
            out.push_back({{"q", hit.q}, {"residues", hit.residues}, {"pattern", pattern}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& hit : hits) {
            std::cout << "q=" << hit.q << " residues={";
            for (std::size_t i = 0; i < hit.residues.size(); ++i)
                std::cout << (i ? "," : "") << hit.residues[i];
            std::cout << "} pattern=(";
            for (std::size_t i = 0; i < hit.pattern.size(); ++i)
                std::cout << (i ? "," : "") << to_fraction_string(hit.pattern[i]);
            std::cout << ")\n";
        }
    }
    return 0;
}

int run_report(long q, const std::string& values_text) {
    std::vector<Rat> values;
    std::size_t pos = 0;
    while (pos <= values_text.size()) {
        std::size_t comma = values_text.find(',', pos);
        std::string piece = values_text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                               : comma - pos);
        std::size_t begin = piece.find_first_not_of(" \t");
        if (begin == std::string::npos) throw InputError("empty value in list");
        std::size_t end = piece.find_last_not_of(" \t");
        values.push_back(rat_from_string(piece.substr(begin, end - begin + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (q < 2 || values.size() != static_cast<std::size_t>(q))
        throw InputError("need exactly q values with q > 1");
    Rat sum(0);
    for (const auto& v : values) sum += v;
    if (sum != 0) throw InputError("values must sum to zero over a period");

    okada::PeriodicFunction f(q, values);
    okada::SupportSets sets = okada::support_sets(q);
    auto primes = arith::prime_divisors(q);

    std::cout << "q = " << q << ", values =";
    for (const auto& v : values) std::cout << " " << to_fraction_string(v);
    std::cout << "\n\nepsilon(r, p):\n";
    for (long r : sets.Lprime) {
        std::cout << "  r=" << r << ":";
        for (const auto& p : primes)
            std::cout << "  p=" << p << " -> " << to_fraction_string(okada::epsilon(r, to_long(p), q));
        std::cout << "\n";
    }
    std::cout << "\nA(r, a):\n";
    for (long r : sets.L) {
        std::cout << "  r=" << r << ":";
        for (long a : sets.J)
            std::cout << "  a=" << a << " -> " << to_fraction_string(okada::coefficient_A(r, a, q));
        std::cout << "\n";
    }
    if (sets.L.empty()) std::cout << "  (no residues with proper common factor)\n";

    okada::OkadaReport report = okada::okada_verdict(f);
    std::cout << "\nresiduals:\n";
    for (const auto& [a, residual] : report.condition_J)
        std::cout << "  coprime residue a = " << a << ": " << to_fraction_string(residual) << "\n";
    for (const auto& [p, residual] : report.condition_P)
        std::cout << "  prime p = " << p << ": " << to_fraction_string(residual) << "\n";
    std::cout << "\nsum f(n)/n " << (report.vanishes ? "= 0 (vanishes)" : "!= 0 (does not vanish)")
              << "\n";
    return report.vanishes ? kExitRational : kExitTranscendental;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of sums P(n)/Q(n) over n >= 0"};
    app.require_subcommand(1);

    std::string num_text, den_text, values_text;
    bool as_json = false;
    bool precision_check = false;
    long truncate = 0;
    long q_max = 12;
    long q = 0;

    auto* cmd_classify = app.add_subcommand("classify", "decide rational value vs transcendental");
    cmd_classify->add_option("--numerator", num_text)->required();
    cmd_classify->add_option("--denominator", den_text)->required();
    cmd_classify->add_flag("--json", as_json);
    cmd_classify->add_flag("--precision-check", precision_check);

    auto* cmd_evaluate = app.add_subcommand("evaluate", "numeric value with a rigorous error bound");
    cmd_evaluate->add_option("--numerator", num_text)->required();
    cmd_evaluate->add_option("--denominator", den_text)->required();
    cmd_evaluate->add_option("--truncate", truncate, "partial-sum channel with N terms");

    auto* cmd_search = app.add_subcommand("search", "sweep all degree-4 residue tuples up to a modulus");
    cmd_search->add_option("--qmax", q_max)->check(CLI::Range(2L, 64L));
    cmd_search->add_flag("--json", as_json);

    auto* cmd_report = app.add_subcommand("report", "exact condition tables for a periodic function");
    cmd_report->add_option("--q", q)->required();
    cmd_report->add_option("--values", values_text, "comma-separated rationals, must sum to 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (cmd_classify->parsed()) return run_classify(num_text, den_text, as_json, precision_check);
        if (cmd_evaluate->parsed()) return run_evaluate(num_text, den_text, truncate);
        if (cmd_search->parsed()) return run_search(q_max, as_json);
        if (cmd_report->parsed()) return run_report(q, values_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
