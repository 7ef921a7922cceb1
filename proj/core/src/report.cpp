// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include "json_util.hpp"

#include <antisym/report.hpp>

#include <algorithm>
#include <array>
#include <utility>

namespace antisym {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 7> kPropertyNames{{
    {Property::AntiSymmetry, "AntiSymmetry"},
    {Property::SymmetryPsi, "SymmetryPsi"},
    {Property::ZeroIffCollision, "ZeroIffCollision"},
    {Property::OrbitSeparation, "OrbitSeparation"},
    {Property::PsiSeparation, "PsiSeparation"},
    {Property::OddWellDefined, "OddWellDefined"},
    {Property::FullColumnRank, "FullColumnRank"},
}};

bool same_matrix(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

}  // namespace

std::string_view to_string(Property property) noexcept {
    for (const auto& [p, name] : kPropertyNames) {
        if (p == property) return name;
    }
    return "Unknown";
}

Property property_from_string(std::string_view name) {
    for (const auto& [p, known] : kPropertyNames) {
        if (known == name) return p;
    }
    throw Error(ErrorCode::ParseError, "unknown property '" + std::string(name) + "'");
}

bool operator==(const Witness& a, const Witness& b) {
    if (!same_matrix(a.x, b.x) || a.x_prime.has_value() != b.x_prime.has_value()) return false;
    if (a.x_prime && !same_matrix(*a.x_prime, *b.x_prime)) return false;
    return a.violation == b.violation && a.note == b.note;
}

bool operator==(const CertificationReport& a, const CertificationReport& b) {
    return a.property == b.property && a.spec_id == b.spec_id && a.trials == b.trials && a.failures == b.failures &&
           a.worst_violation == b.worst_violation && a.tolerance == b.tolerance && a.witnesses == b.witnesses &&
           a.seed == b.seed && a.tolerances == b.tolerances && a.metrics == b.metrics;
}

void CertificationReport::record(double violation, bool failed, const Matrix& x, const std::optional<Matrix>& x_prime,
                                 std::string note) {
    worst_violation = std::max(worst_violation, violation);
    if (!failed) return;
    ++failures;
    if (witnesses.size() < kWitnessCap) witnesses.push_back(Witness{x, x_prime, violation, std::move(note)});
}

void CertificationReport::track_min(const std::string& key, double value) {
    auto [it, inserted] = metrics.emplace(key, value);
    if (!inserted) it->second = std::min(it->second, value);
}

void CertificationReport::track_max(const std::string& key, double value) {
    auto [it, inserted] = metrics.emplace(key, value);
    if (!inserted) it->second = std::max(it->second, value);
}

std::string to_json(const CertificationReport& report, int indent) {
    using detail::Json;
    Json j;
    j["property"] = to_string(report.property);
    j["spec_id"] = report.spec_id;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["failures"] = report.failures;
    j["passed"] = report.passed();
    j["worst_violation"] = report.worst_violation;
    j["tolerance"] = report.tolerance;
    j["tolerances"] = Json::object();
    for (const auto& [k, v] : report.tolerances) j["tolerances"][k] = v;
    j["metrics"] = Json::object();
    for (const auto& [k, v] : report.metrics) j["metrics"][k] = v;
    j["witnesses"] = Json::array();
    for (const auto& w : report.witnesses) {
        Json jw;
        jw["x"] = detail::matrix_to_json(w.x);
        if (w.x_prime) jw["x_prime"] = detail::matrix_to_json(*w.x_prime);
        jw["violation"] = w.violation;
        jw["note"] = w.note;
        j["witnesses"].push_back(std::move(jw));
    }
    return j.dump(indent);
}

CertificationReport report_from_json(std::string_view text) {
    const detail::Json j = detail::parse_json(text);
    try {
        CertificationReport r;
        r.property = property_from_string(j.at("property").get<std::string>());
        r.spec_id = j.at("spec_id").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.trials = j.at("trials").get<std::size_t>();
        r.failures = j.at("failures").get<std::size_t>();
        r.worst_violation = j.at("worst_violation").get<double>();
        r.tolerance = j.at("tolerance").get<double>();
        for (const auto& [k, v] : j.at("tolerances").items()) r.tolerances[k] = v.get<double>();
        for (const auto& [k, v] : j.at("metrics").items()) r.metrics[k] = v.get<double>();
        for (const auto& jw : j.at("witnesses")) {
            Witness w;
            w.x = detail::matrix_from_json(jw.at("x"));
            if (jw.contains("x_prime")) w.x_prime = detail::matrix_from_json(jw.at("x_prime"));
            w.violation = jw.at("violation").get<double>();
            w.note = jw.at("note").get<std::string>();
            r.witnesses.push_back(std::move(w));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace antisym
