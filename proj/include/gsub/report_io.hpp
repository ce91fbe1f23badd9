#pragma once

#include <gsub/assemble.hpp>
#include <gsub/classify.hpp>
#include <gsub/oracle.hpp>
#include <gsub/substitution.hpp>
#include <gsub/transfer.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace gsub {

nlohmann::json substituted_to_json(const SubstitutedGraph& sg);
nlohmann::json transfer_to_json(const TransferFunctions& tf);
nlohmann::json classification_to_json(const std::vector<TypedEigenvalue>& typed);
nlohmann::json report_to_json(const SpectrumReport& rep);
nlohmann::json comparison_to_json(const OracleComparison& cmp);

std::string classification_table(const std::vector<TypedEigenvalue>& typed);
std::string report_table(const SpectrumReport& rep);
std::string comparison_table(const OracleComparison& cmp);

}  // namespace gsub
