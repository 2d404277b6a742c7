#include "sosq/report_json.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sosq {

using nlohmann::json;

json real_to_json(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double real_from_json(const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        throw std::invalid_argument("not a real: " + s);
    }
    return j.get<double>();
}

namespace {

json reals(const std::vector<double>& v)
{
    json out = json::array();
    for (double x : v) out.push_back(real_to_json(x));
    return out;
}

std::vector<double> reals_from(const json& j)
{
    std::vector<double> out;
    for (const auto& x : j) out.push_back(real_from_json(x));
    return out;
}

Arity arity_from(const json& j)
{
    const int a = j.get<int>();
    if (a == 2) return Arity::Two;
    if (a == 4) return Arity::Four;
    throw std::invalid_argument("arity must be 2 or 4");
}

DiagonalClass class_from(const std::string& s)
{
    if (s == "BOUNDED") return DiagonalClass::Bounded;
    if (s == "MULTIPLICATIVE") return DiagonalClass::Multiplicative;
    if (s == "INCONCLUSIVE") return DiagonalClass::Inconclusive;
    throw std::invalid_argument("unknown classification " + s);
}

json vec_json(const Eigen::Ref<const Eigen::VectorXd>& v)
{
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(real_to_json(v(k)));
    return out;
}

} // namespace

void to_json(json& j, const VerificationReport& r)
{
    j = json{{"arity", static_cast<int>(r.arity)},
             {"sample_count", r.sample_count},
             {"seed", r.seed},
             {"tol", real_to_json(r.tol)},
             {"max_abs_residual", real_to_json(r.max_abs_residual)},
             {"max_rel_residual", real_to_json(r.max_rel_residual)},
             {"worst_point", reals(r.worst_point)},
             {"nonfinite_count", r.nonfinite_count},
             {"verdict", r.pass ? "PASS" : "FAIL"}};
}

void from_json(const json& j, VerificationReport& r)
{
    r.arity = arity_from(j.at("arity"));
    r.sample_count = j.at("sample_count").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = real_from_json(j.at("tol"));
    r.max_abs_residual = real_from_json(j.at("max_abs_residual"));
    r.max_rel_residual = real_from_json(j.at("max_rel_residual"));
    r.worst_point = reals_from(j.at("worst_point"));
    r.nonfinite_count = j.at("nonfinite_count").get<std::size_t>();
    r.pass = j.at("verdict").get<std::string>() == "PASS";
}

void to_json(json& j, const CheckFragment& r)
{
    j = json{{"sample_count", r.sample_count},
             {"seed", r.seed},
             {"tol", real_to_json(r.tol)},
             {"max_excess", real_to_json(r.max_excess)},
             {"max_defect", real_to_json(r.max_defect)},
             {"worst_point", reals(r.worst_point)},
             {"holds", r.holds()}};
}

void from_json(const json& j, CheckFragment& r)
{
    r.sample_count = j.at("sample_count").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = real_from_json(j.at("tol"));
    r.max_excess = real_from_json(j.at("max_excess"));
    r.max_defect = real_from_json(j.at("max_defect"));
    r.worst_point = reals_from(j.at("worst_point"));
}

void to_json(json& j, const DiagonalEvidence& r)
{
    j = json{{"classification", to_string(r.classification)},
             {"max_mult_residual", real_to_json(r.max_mult_residual)},
             {"worst_pair", {real_to_json(r.worst_pair.first), real_to_json(r.worst_pair.second)}},
             {"sup_abs", real_to_json(r.sup_abs)},
             {"decades", real_to_json(r.decades)},
             {"growth_threshold", real_to_json(r.growth_threshold)},
             {"mult_tol", real_to_json(r.mult_tol)},
             {"empirical", true}};
}

void from_json(const json& j, DiagonalEvidence& r)
{
    r.classification = class_from(j.at("classification").get<std::string>());
    r.max_mult_residual = real_from_json(j.at("max_mult_residual"));
    r.worst_pair = {real_from_json(j.at("worst_pair").at(0)), real_from_json(j.at("worst_pair").at(1))};
    r.sup_abs = real_from_json(j.at("sup_abs"));
    r.decades = real_from_json(j.at("decades"));
    r.growth_threshold = real_from_json(j.at("growth_threshold"));
    r.mult_tol = real_from_json(j.at("mult_tol"));
}

void to_json(json& j, const StabilityReport& r)
{
    j = json{{"arity", static_cast<int>(r.arity)},
             {"sample_count", r.sample_count},
             {"seed", r.seed},
             {"tol", real_to_json(r.tol)},
             {"hypothesis_max_violation", real_to_json(r.hypothesis_max_violation())},
             {"conclusion_max_violation", real_to_json(r.conclusion_max_violation())},
             {"diagonal_classification", to_string(r.diagonal.classification)},
             {"hypothesis", r.hypothesis},
             {"conclusion", r.conclusion},
             {"evidence", r.diagonal}};
}

void from_json(const json& j, StabilityReport& r)
{
    r.arity = arity_from(j.at("arity"));
    r.sample_count = j.at("sample_count").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = real_from_json(j.at("tol"));
    j.at("hypothesis").get_to(r.hypothesis);
    j.at("conclusion").get_to(r.conclusion);
    j.at("evidence").get_to(r.diagonal);
}

void to_json(json& j, const StructureReport& r)
{
    json m = json::array();
    for (const auto& e : r.m_table) {
        m.push_back({{"x", real_to_json(e.x)}, {"m", real_to_json(e.m)}});
    }
    json violations = json::array();
    for (const auto& e : r.sigma_table) {
        if (!e.violation) continue;
        violations.push_back({{"point", vec_json(e.point)},
                              {"sigma", real_to_json(e.sigma)},
                              {"m_at_norm", real_to_json(e.m_at_norm)}});
    }
    const auto& d = r.diagnostics;
    j = json{{"m_table", m},
             {"diagnostics",
              {{"probes", d.probes},
               {"undefined_sigma", d.undefined_sigma},
               {"sigma_violations", d.sigma_violations},
               {"nonfinite", d.nonfinite},
               {"max_sigma_deviation", real_to_json(d.max_sigma_deviation)},
               {"consistent", d.consistent()}}},
             {"violations", violations}};
}

json solve_report_json(const SolveReport2<double>& r)
{
    return json{{"solution", vec_json(r.solution)},
                {"case", std::string(to_string(r.case_label))},
                {"residual", real_to_json(r.residual)},
                {"norm_residual", real_to_json(r.norm_residual)},
                {"tol", real_to_json(r.tol)}};
}

json solve_report_json(const SolveReport4<double>& r)
{
    json j{{"solution", vec_json(r.solution)},
           {"case", std::string(to_string(r.case_label))},
           {"residual", real_to_json(r.residual)},
           {"norm_residual", real_to_json(r.norm_residual)},
           {"tol", real_to_json(r.tol)}};
    if (!std::isnan(r.alpha)) j["alpha"] = real_to_json(r.alpha);
    if (r.case_label == FourCase::D) j["negative_z"] = r.negative_z;
    return j;
}

} // namespace sosq
