#pragma once

#include "binform/binary_form.hpp"
#include "binform/roots.hpp"

#include <json.hpp>

#include <string>

namespace binform {

struct ReportOptions {
    int precision_bits = kDefaultPrecisionBits;
    bool verify = false;           // add the brute-force cross-check section
    unsigned long long seed = 1;   // seeds the randomized conjugation spot-checks
    Int height_bound = 1000000;
};

// Section builders; every matrix is emitted with exact rational entries or
// as decimal enclosures {mid, rad, bits} marked "numeric".
nlohmann::json json_form(const BinaryForm& F);
nlohmann::json json_invariants(const BinaryForm& F);
nlohmann::json json_covariants(const BinaryForm& F, const ReportOptions& opts = {});
nlohmann::json json_aut(const BinaryForm& F, const ReportOptions& opts = {});
nlohmann::json json_pgl(const BinaryForm& F);
nlohmann::json json_lines(const BinaryForm& F, const ReportOptions& opts = {});
nlohmann::json json_fields(const BinaryForm& F);

// Oracle cross-check: classifier vs brute-force groups, exact element
// comparison. Retries once at a raised height bound when the first pass
// flags possible reconstruction misses.
nlohmann::json json_oracle(const BinaryForm& F, const ReportOptions& opts = {});

// Everything above in one report; with opts.verify also the oracle section
// and randomized conjugation spot-checks.
nlohmann::json full_report(const BinaryForm& F, const ReportOptions& opts = {});

std::string render_text(const nlohmann::json& report);

}  // namespace binform
