#ifndef SOSQ_REPORT_JSON_HPP
#define SOSQ_REPORT_JSON_HPP

#include <json.hpp>

#include "sosq/solutions.hpp"
#include "sosq/stability.hpp"
#include "sosq/systems.hpp"

/// JSON forms of the reports. Doubles are written as the shortest decimal that
/// reads back to the same value; non-finite values are written as the strings
/// "inf", "-inf" and "nan".
namespace sosq {

nlohmann::json real_to_json(double v);
double real_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

void to_json(nlohmann::json& j, const CheckFragment& r);
void from_json(const nlohmann::json& j, CheckFragment& r);

void to_json(nlohmann::json& j, const DiagonalEvidence& r);
void from_json(const nlohmann::json& j, DiagonalEvidence& r);

void to_json(nlohmann::json& j, const StabilityReport& r);
void from_json(const nlohmann::json& j, StabilityReport& r);

void to_json(nlohmann::json& j, const StructureReport& r);

nlohmann::json solve_report_json(const SolveReport2<double>& r);
nlohmann::json solve_report_json(const SolveReport4<double>& r);

} // namespace sosq

#endif // SOSQ_REPORT_JSON_HPP
