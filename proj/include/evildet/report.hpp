#ifndef EVILDET_REPORT_HPP
#define EVILDET_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "evildet/verify.hpp"

namespace evildet {

/// Record serialization, schema 1.  Big integers travel as decimal strings
/// so the JSON round-trips exactly.  Timings are only emitted when present
/// and are excluded from canonical comparisons.
nlohmann::json record_to_json(const VerificationRecord& rec);
VerificationRecord record_from_json(const nlohmann::json& j);

std::string records_to_json(const std::vector<VerificationRecord>& recs);

/// CSV: UTF-8, comma-separated, '\n' line endings, fixed column order,
/// header always emitted.
std::string csv_header();
std::string record_to_csv_row(const VerificationRecord& rec);
std::string records_to_csv(const std::vector<VerificationRecord>& recs);

std::string records_to_table(const std::vector<VerificationRecord>& recs);

std::string to_string(CheckStatus s);

} // namespace evildet

#endif
