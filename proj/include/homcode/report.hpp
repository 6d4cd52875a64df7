#ifndef HOMCODE_REPORT_HPP
#define HOMCODE_REPORT_HPP

#include "homcode/bounds.hpp"
#include "homcode/code_file.hpp"

#include <optional>
#include <string>

namespace homcode {

struct AnalysisReport {
    std::optional<std::string> name;
    LinearCode code;
    BoundReport bounds;
};

AnalysisReport analyze(const LinearCode& code, std::optional<std::string> name = {}, const Limits& limits = {});

/// {"num": scaled, "den": q - 1}, deliberately unreduced.
Json weight_to_json(const WeightValue& w);
Json rational_to_json(const Rational& r);

Json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

/// "MHD: yes, socle MDS: yes" or "MHD: no (d = 2 ≤ M(n−K) = 2), socle MDS: yes".
std::string mhd_line(const BoundReport& b);
/// "constant weight 8, Plotkin equality", or the strict form.
std::string plotkin_line(const BoundReport& b);

}  // namespace homcode

#endif
