#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lefschetz/classify.hpp"
#include "lefschetz/deciders.hpp"
#include "lefschetz/duality.hpp"
#include "lefschetz/harness.hpp"

namespace lefschetz {

inline constexpr const char* kReportSchema = "lefschetz-report/1";

nlohmann::json to_json(const Monomial& m, char variable = 'x');
nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const FormIdeal& ideal);
nlohmann::json to_json(const DualElement& f);
nlohmann::json to_json(const PairRecord& pair);
nlohmann::json to_json(const LefschetzReport& report);
nlohmann::json to_json(const BinomialExpansion& expansion);
/// `include_elapsed` = false drops wall-clock fields for reproducible output.
nlohmann::json to_json(const VerificationReport& report, bool include_elapsed = true);

/// Big integers are emitted as JSON numbers when they fit in 64 bits, else as strings.
nlohmann::json to_json(const Integer& value);

inline constexpr const char* kPairsCsvHeader = "i,j,source_dim,target_dim,rank,maximal";
std::string pairs_csv(const std::vector<PairRecord>& pairs);
/// Inverse of pairs_csv; throws ParseError on malformed rows.
std::vector<PairRecord> parse_pairs_csv(std::string_view text);

std::string verification_csv(const VerificationReport& report);
std::string cases_csv(const std::vector<CaseRecord>& cases);

}  // namespace lefschetz
