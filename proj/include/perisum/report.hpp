#ifndef PERISUM_REPORT_HPP
#define PERISUM_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "perisum/classify.hpp"
#include "perisum/numeric.hpp"

namespace perisum::report {

using json = nlohmann::ordered_json;

// Everything the classify command prints: the echoed input, the reduced
// form, both exact condition tables, the verdict, and the numeric
// cross-check.  All exact quantities are canonical fraction strings.
struct Report {
    std::string numerator_text;
    std::string denominator_text;
    reduce::ReducedSum reduced;
    okada::OkadaReport okada;
    classify::VerdictKind kind = classify::VerdictKind::Transcendental;
    std::optional<Rat> value;
    std::vector<std::string> notes;
    numeric::NumericResult numeric;

    bool operator==(const Report& other) const = default;
};

Report build_report(const std::string& numerator_text, const std::string& denominator_text,
                    const classify::Verdict& verdict, const numeric::NumericResult& numeric);

json to_json(const Report& report);
Report from_json(const json& j);

// Human-readable rendering, one section per report field.
std::string to_text(const Report& report);

} // namespace perisum::report

#endif
