#ifndef INJCOLOR_REPORT_HPP
#define INJCOLOR_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "injcolor/rational.hpp"

namespace inj {

/// One pipeline run over one input graph. Rational fields are
/// authoritative as "p/q" strings; decimal renderings are annotations.
struct RunReport {
    std::string input;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    std::optional<Rational> mad;
    std::optional<bool> eligible;
    std::optional<int> chi_exact;
    bool chi_is_exact = true;
    std::optional<int> chi_lower, chi_upper;
    std::optional<int> constructive_colors;
    std::optional<bool> coloring_valid;
    std::optional<Rational> min_final_charge;
    std::optional<int> deficiency_count;
    std::optional<int> unexplained_count;
    double seconds = 0.0;

    std::string to_text(bool verbose) const
    {
        std::ostringstream os;
        os << "input: " << input << "  (n=" << n << ", m=" << m << ")\n";
        os << "max degree: " << max_degree << "\n";
        if (mad)
            os << "mad: " << inj::to_string(*mad) << " (~" << to_double(*mad) << ")\n";
        if (eligible)
            os << "eligible: " << (*eligible ? "yes" : "no") << "\n";
        if (chi_exact) {
            if (chi_is_exact)
                os << "chi_inj: " << *chi_exact << "\n";
            else
                os << "chi_inj: in [" << *chi_lower << ", " << *chi_upper
                   << "] (budget exhausted)\n";
        }
        if (constructive_colors)
            os << "constructive colors: " << *constructive_colors << "\n";
        if (coloring_valid)
            os << "coloring valid: " << (*coloring_valid ? "yes" : "no") << "\n";
        if (min_final_charge)
            os << "min final charge: " << inj::to_string(*min_final_charge) << "\n";
        if (deficiency_count)
            os << "deficiencies: " << *deficiency_count << " (unexplained: "
               << (unexplained_count ? *unexplained_count : 0) << ")\n";
        if (verbose)
            os << "time: " << seconds << "s\n";
        return os.str();
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["input"] = input;
        j["n"] = n;
        j["m"] = m;
        j["max_degree"] = max_degree;
        if (mad) {
            j["mad"] = inj::to_string(*mad);
            j["mad_decimal"] = to_double(*mad);
        }
        if (eligible)
            j["eligible"] = *eligible;
        if (chi_exact) {
            j["chi_inj"] = *chi_exact;
            j["chi_exact"] = chi_is_exact;
            if (!chi_is_exact) {
                j["chi_lower"] = *chi_lower;
                j["chi_upper"] = *chi_upper;
            }
        }
        if (constructive_colors)
            j["constructive_colors"] = *constructive_colors;
        if (coloring_valid)
            j["coloring_valid"] = *coloring_valid;
        if (min_final_charge)
            j["min_final_charge"] = inj::to_string(*min_final_charge);
        if (deficiency_count) {
            j["deficiencies"] = *deficiency_count;
            j["unexplained"] = unexplained_count ? *unexplained_count : 0;
        }
        j["seconds"] = seconds;
        return j;
    }
};

}  // namespace inj

#endif
