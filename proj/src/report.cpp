#include "perisum/report.hpp"

#include <cstdio>
#include <sstream>

namespace perisum {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

} // namespace perisum

namespace perisum::report {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.11f", v);
    return buf;
}

std::string format_bound(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

} // namespace

Report build_report(const std::string& numerator_text, const std::string& denominator_text,
                    const classify::Verdict& verdict, const numeric::NumericResult& numeric) {
    Report r;
    r.numerator_text = numerator_text;
    r.denominator_text = denominator_text;
    r.reduced = verdict.reduced;
    r.okada = verdict.certificate;
    r.kind = verdict.kind;
    r.value = verdict.value;
    r.notes = verdict.notes;
    r.numeric = numeric;
    return r;
}

json to_json(const Report& report) {
    json j;
    j["input"] = {{"numerator", report.numerator_text}, {"denominator", report.denominator_text}};

    json terms = json::array();
    for (const auto& [residue, coeff] : report.reduced.terms)
        terms.push_back({{"residue", residue}, {"coefficient", to_fraction_string(coeff)}});
    j["reduced"] = {{"q", report.reduced.q},
                    {"offset", to_fraction_string(report.reduced.offset)},
                    {"terms", terms}};

    json cond_j = json::array();
    for (const auto& [a, residual] : report.okada.condition_J)
        cond_j.push_back({{"a", a}, {"residual", to_fraction_string(residual)}});
    json cond_p = json::array();
    for (const auto& [p, residual] : report.okada.condition_P)
        cond_p.push_back({{"p", p}, {"residual", to_fraction_string(residual)}});
    j["okada"] = {{"condition_J", cond_j}, {"condition_P", cond_p}, {"vanishes", report.okada.vanishes}};

    json verdict;
    verdict["kind"] = report.kind == classify::VerdictKind::RationalValue ? "RationalValue" : "Transcendental";
    if (report.value) verdict["value"] = to_fraction_string(*report.value);
    verdict["notes"] = report.notes;
    j["verdict"] = verdict;

    j["numeric"] = {{"value", report.numeric.value}, {"error_bound", report.numeric.error_bound}};
    return j;
}

Report from_json(const json& j) {
    Report r;
    r.numerator_text = j.at("input").at("numerator").get<std::string>();
    r.denominator_text = j.at("input").at("denominator").get<std::string>();
    r.reduced.q = j.at("reduced").at("q").get<long>();
    r.reduced.offset = rat_from_string(j.at("reduced").at("offset").get<std::string>());
    for (const auto& t : j.at("reduced").at("terms"))
        r.reduced.terms.emplace_back(t.at("residue").get<long>(),
                                     rat_from_string(t.at("coefficient").get<std::string>()));
    for (const auto& t : j.at("okada").at("condition_J"))
        r.okada.condition_J.emplace_back(t.at("a").get<long>(),
                                         rat_from_string(t.at("residual").get<std::string>()));
    for (const auto& t : j.at("okada").at("condition_P"))
        r.okada.condition_P.emplace_back(t.at("p").get<long>(),
                                         rat_from_string(t.at("residual").get<std::string>()));
    r.okada.vanishes = j.at("okada").at("vanishes").get<bool>();
    r.kind = j.at("verdict").at("kind").get<std::string>() == "RationalValue"
                 ? classify::VerdictKind::RationalValue
                 : classify::VerdictKind::Transcendental;
    if (j.at("verdict").contains("value"))
        r.value = rat_from_string(j.at("verdict").at("value").get<std::string>());
    r.notes = j.at("verdict").at("notes").get<std::vector<std::string>>();
    r.numeric.value = j.at("numeric").at("value").get<double>();
    r.numeric.error_bound = j.at("numeric").at("error_bound").get<double>();
    return r;
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    out << "input: (" << report.numerator_text << ") / (" << report.denominator_text << ")\n";
    out << "reduced: q = " << report.reduced.q << ", offset = " << to_fraction_string(report.reduced.offset);
    if (report.reduced.terms.empty()) {
        out << ", no periodic terms\n";
    } else {
        out << ", terms:";
        for (const auto& [residue, coeff] : report.reduced.terms)
            out << " (" << residue << ", " << to_fraction_string(coeff) << ")";
        out << "\n";
    }
    out << "conditions:\n";
    for (const auto& [a, residual] : report.okada.condition_J)
        out << "  coprime residue a = " << a << ": residual " << to_fraction_string(residual) << "\n";
    for (const auto& [p, residual] : report.okada.condition_P)
        out << "  prime p = " << p << ": residual " << to_fraction_string(residual) << "\n";
    out << "periodic part vanishes: " << (report.okada.vanishes ? "yes" : "no") << "\n";
    out << "verdict: ";
    if (report.kind == classify::VerdictKind::RationalValue)
        out << "RationalValue(" << (report.value ? to_fraction_string(*report.value) : "?") << ")\n";
    else
        out << "Transcendental\n";
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    out << "numeric: " << format_double(report.numeric.value) << " +/- "
        << format_bound(report.numeric.error_bound) << "\n";
    return out.str();
}

} // namespace perisum::report
