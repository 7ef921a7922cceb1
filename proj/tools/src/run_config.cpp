// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym_cli/run_config.hpp>

#include <antisym/error.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <set>
#include <string>

namespace antisym::cli {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) fail("unknown key '" + key + "' in " + where);
    }
}

std::size_t get_count(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string(key) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

double get_number(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_number()) fail(std::string(key) + " must be a number");
    return v.get<double>();
}

JacobianMethod method_from_string(std::string_view name) {
    if (name == "exact" || name == "exact-polynomial") return JacobianMethod::ExactPolynomial;
    if (name == "fd" || name == "central-difference") return JacobianMethod::CentralDifference;
    fail("unknown Jacobian method '" + std::string(name) + "'");
}

double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("not a number: '" + std::string(text) + "'");
    return value;
}

void apply_tolerances(Tolerances& tol, const Json& j) {
    reject_unknown(j, {"equality", "zero", "separation", "distinct_gap", "orbit_match"}, "tolerances");
    if (j.contains("equality")) tol.equality = get_number(j, "equality");
    if (j.contains("zero")) tol.zero = get_number(j, "zero");
    if (j.contains("separation")) tol.separation = get_number(j, "separation");
    if (j.contains("distinct_gap")) tol.distinct_gap = get_number(j, "distinct_gap");
    if (j.contains("orbit_match")) tol.orbit_match = get_number(j, "orbit_match");
}

}  // namespace

Matrix parse_point(std::string_view text, std::size_t n, std::size_t d) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        values.push_back(parse_double(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (values.size() != n * d) {
        fail("point '" + std::string(text) + "' has " + std::to_string(values.size()) + " coordinates, expected " +
             std::to_string(n * d));
    }
    return unflatten(Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())), n, d);
}

std::pair<double, double> parse_interval(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) fail("interval '" + std::string(text) + "' is not of the form lo:hi");
    return {parse_double(text.substr(0, colon)), parse_double(text.substr(colon + 1))};
}

void apply_config_json(RunConfig& c, std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("config must be a JSON object");
    reject_unknown(j,
                   {"n", "d", "domain_box", "projection_mode", "seed", "tolerances", "output_dir", "verify",
                    "jacobian", "demo", "fit"},
                   "config");
    try {
        if (j.contains("n")) c.n = get_count(j, "n");
        if (j.contains("d")) c.d = get_count(j, "d");
        if (j.contains("projection_mode")) {
            c.projection_mode = projection_mode_from_string(j.at("projection_mode").get<std::string>());
        }
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned()) fail("seed must be a non-negative integer");
            c.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("tolerances")) apply_tolerances(c.tolerances, j.at("tolerances"));
        if (j.contains("domain_box")) {
            const Json& box = j.at("domain_box");
            if (!box.is_array()) fail("domain_box must be a list of [lo, hi] pairs");
            DomainBox b{Vector(static_cast<Eigen::Index>(box.size())), Vector(static_cast<Eigen::Index>(box.size()))};
            for (std::size_t k = 0; k < box.size(); ++k) {
                const Json& iv = box.at(k);
                if (!iv.is_array() || iv.size() != 2 || !iv.at(0).is_number() || !iv.at(1).is_number()) {
                    fail("domain_box entries must be [lo, hi] number pairs");
                }
                b.lower(static_cast<Eigen::Index>(k)) = iv.at(0).get<double>();
                b.upper(static_cast<Eigen::Index>(k)) = iv.at(1).get<double>();
            }
            c.domain_box = b;
        }
        if (j.contains("verify")) {
            const Json& v = j.at("verify");
            reject_unknown(v, {"trials", "mutation"}, "verify");
            if (v.contains("trials")) c.trials = get_count(v, "trials");
            if (v.contains("mutation")) c.mutation = mutation_from_string(v.at("mutation").get<std::string>());
        }
        if (j.contains("jacobian")) {
            const Json& v = j.at("jacobian");
            reject_unknown(v, {"points", "method"}, "jacobian");
            if (v.contains("method")) c.jacobian_method = method_from_string(v.at("method").get<std::string>());
            if (v.contains("points")) {
                c.points.clear();
                for (const Json& p : v.at("points")) {
                    std::vector<double> flat = p.get<std::vector<double>>();
                    c.points.push_back(Eigen::Map<const Vector>(flat.data(), static_cast<Eigen::Index>(flat.size())));
                }
            }
        }
        if (j.contains("demo")) {
            const Json& v = j.at("demo");
            reject_unknown(v, {"eps_list"}, "demo");
            if (v.contains("eps_list")) c.eps_list = v.at("eps_list").get<std::vector<double>>();
        }
        if (j.contains("fit")) {
            const Json& v = j.at("fit");
            reject_unknown(v, {"target", "samples", "feature_count", "ridge", "holdout_samples", "max_condition",
                               "rmse_threshold"},
                           "fit");
            if (v.contains("target")) c.target = target_kind_from_string(v.at("target").get<std::string>());
            if (v.contains("samples")) c.fit.samples = get_count(v, "samples");
            if (v.contains("feature_count")) c.fit.feature_count = get_count(v, "feature_count");
            if (v.contains("holdout_samples")) c.fit.holdout_samples = get_count(v, "holdout_samples");
            if (v.contains("ridge")) c.fit.ridge = get_number(v, "ridge");
            if (v.contains("max_condition")) c.fit.max_condition = get_number(v, "max_condition");
            if (v.contains("rmse_threshold")) c.fit.rmse_threshold = get_number(v, "rmse_threshold");
        }
    } catch (const Json::exception& e) {
        fail(std::string("config field has the wrong type: ") + e.what());
    }
}

void validate(const RunConfig& c) {
    if (c.n < 1) fail("n must be >= 1");
    if (c.d < 1) fail("d must be >= 1");
    if (c.trials < 1) fail("trials must be >= 1");
    if (c.domain_box) {
        if (c.domain_box->dim() != c.d) fail("domain_box has " + std::to_string(c.domain_box->dim()) + " intervals, expected d");
        for (std::size_t k = 0; k < c.d; ++k) {
            const auto i = static_cast<Eigen::Index>(k);
            if (!(c.domain_box->lower(i) < c.domain_box->upper(i))) fail("domain_box needs lo < hi in every coordinate");
        }
    }
    const Tolerances& t = c.tolerances;
    for (double v : {t.equality, t.zero, t.separation, t.distinct_gap, t.orbit_match}) {
        if (!(v > 0.0) || !std::isfinite(v)) fail("tolerance overrides must be positive");
    }
    for (double e : c.eps_list) {
        if (!(e > 0.0) || !std::isfinite(e)) fail("eps_list entries must be positive");
    }
    for (const Vector& p : c.points) {
        if (static_cast<std::size_t>(p.size()) != c.n * c.d) fail("a configured point does not have n*d coordinates");
    }
    if (!(c.fit.ridge > 0.0)) fail("fit.ridge must be positive");
    if (c.fit.feature_count < 1) fail("fit.feature_count must be >= 1");
    if (c.fit.samples < c.fit.feature_count) fail("fit.samples must be >= fit.feature_count");
    if (!(c.fit.rmse_threshold > 0.0)) fail("fit.rmse_threshold must be positive");
    if (!(c.fit.max_condition > 0.0)) fail("fit.max_condition must be positive");
}

FeatureMapSpec build_spec(const RunConfig& c) { return FeatureMapSpec::build(c.n, c.d, c.projection_mode, c.domain_box); }

}  // namespace antisym::cli
