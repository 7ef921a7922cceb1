// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include "json_util.hpp"

#include <antisym/serialize.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace antisym {

using detail::Json;

namespace {

Json projection_set_json(const ProjectionSet& w) {
    Json j;
    j["n"] = w.n;
    j["d"] = w.d;
    j["mode"] = to_string(w.mode);
    j["vectors"] = detail::matrix_to_json(w.vectors);
    return j;
}

ProjectionSet projection_set_from(const Json& j) {
    ProjectionSet w;
    w.n = j.at("n").get<std::size_t>();
    w.d = j.at("d").get<std::size_t>();
    w.mode = projection_mode_from_string(j.at("mode").get<std::string>());
    w.vectors = detail::matrix_from_json(j.at("vectors"));
    if (static_cast<std::size_t>(w.vectors.cols()) != w.d) {
        throw Error(ErrorCode::ParseError, "projection vectors do not have d columns");
    }
    for (Eigen::Index k = 0; k < w.vectors.rows(); ++k) {
        if (std::abs(w.vectors.row(k).norm() - 1.0) > 1e-12) {
            throw Error(ErrorCode::ParseError, "projection vectors must have unit norm");
        }
    }
    return w;
}

Json spec_json(const FeatureMapSpec& spec) {
    Json j;
    j["id"] = spec.id();
    j["n"] = spec.n;
    j["d"] = spec.d;
    j["p"] = spec.p;
    j["q"] = spec.q;
    j["m"] = spec.m;
    j["mode"] = to_string(spec.projections.mode);
    if (spec.box) {
        j["domain_box"] = {{"lower", detail::vector_to_json(spec.box->lower)},
                           {"upper", detail::vector_to_json(spec.box->upper)}};
    } else {
        j["domain_box"] = nullptr;
    }
    j["multi_indices"] = spec.multi_indices;
    j["projections"] = projection_set_json(spec.projections);
    return j;
}

FeatureMapSpec spec_from(const Json& j) {
    std::optional<DomainBox> box;
    if (j.contains("domain_box") && !j.at("domain_box").is_null()) {
        box = DomainBox{detail::vector_from_json(j.at("domain_box").at("lower")),
                        detail::vector_from_json(j.at("domain_box").at("upper"))};
    }
    FeatureMapSpec spec = FeatureMapSpec::build(j.at("n").get<std::size_t>(), j.at("d").get<std::size_t>(),
                                                projection_mode_from_string(j.at("mode").get<std::string>()), box);
    if (j.contains("projections")) {
        const ProjectionSet stored = projection_set_from(j.at("projections"));
        if (!(stored == spec.projections)) {
            throw Error(ErrorCode::ParseError, "stored projection vectors differ from the deterministic construction");
        }
    }
    for (const char* key : {"p", "q", "m"}) {
        if (!j.contains(key)) continue;
        const std::size_t expected = key[0] == 'p' ? spec.p : key[0] == 'q' ? spec.q : spec.m;
        if (j.at(key).get<std::size_t>() != expected) {
            throw Error(ErrorCode::ParseError, std::string("stored ") + key + " disagrees with (n, d, mode)");
        }
    }
    return spec;
}

template <typename F>
auto parse_guarded(std::string_view text, F&& f) {
    const Json j = detail::parse_json(text);
    try {
        return f(j);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string to_json(const ProjectionSet& w, int indent) { return projection_set_json(w).dump(indent); }

ProjectionSet projection_set_from_json(std::string_view text) {
    return parse_guarded(text, [](const Json& j) { return projection_set_from(j); });
}

std::string to_json(const FeatureMapSpec& spec, int indent) { return spec_json(spec).dump(indent); }

FeatureMapSpec spec_from_json(std::string_view text) {
    return parse_guarded(text, [](const Json& j) { return spec_from(j); });
}

std::string features_to_json(const FeatureMapSpec& spec, std::span<const ParticleConfiguration> inputs,
                             std::span<const FeatureVector> features, int indent) {
    if (inputs.size() != features.size()) throw Error(ErrorCode::DimensionMismatch, "inputs and features differ in count");
    Json j;
    j["spec"] = spec_json(spec);
    j["inputs"] = Json::array();
    for (const auto& x : inputs) j["inputs"].push_back(detail::matrix_to_json(x.coords()));
    j["features"] = Json::array();
    for (const auto& y : features) j["features"].push_back(detail::vector_to_json(y.values));
    return j.dump(indent);
}

void write_features_csv(std::ostream& os, const FeatureMapSpec& spec, std::span<const ParticleConfiguration> inputs,
                        std::span<const FeatureVector> features) {
    if (inputs.size() != features.size()) throw Error(ErrorCode::DimensionMismatch, "inputs and features differ in count");
    bool first = true;
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j < spec.d; ++j) {
            os << (first ? "" : ",") << "x" << i + 1 << "_" << j + 1;
            first = false;
        }
    }
    for (std::size_t k = 0; k < spec.m; ++k) os << ",eta" << k + 1;
    os << '\n';
    for (std::size_t r = 0; r < inputs.size(); ++r) {
        const Vector flat = flatten(inputs[r].coords());
        first = true;
        for (Eigen::Index k = 0; k < flat.size(); ++k) {
            os << (first ? "" : ",") << format_double(flat(k));
            first = false;
        }
        for (Eigen::Index k = 0; k < features[r].values.size(); ++k) os << ',' << format_double(features[r].values(k));
        os << '\n';
    }
}

std::vector<ParticleConfiguration> read_configurations_csv(std::istream& is, std::size_t n, std::size_t d) {
    std::vector<ParticleConfiguration> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::vector<double> values;
        std::stringstream ss(line);
        std::string field;
        bool numeric = true;
        while (std::getline(ss, field, ',')) {
            try {
                std::size_t used = 0;
                values.push_back(std::stod(field, &used));
                if (field.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
            } catch (const std::exception&) {
                numeric = false;
            }
            if (!numeric) break;
        }
        if (!numeric) {
            if (out.empty() && values.empty()) continue;  // header row
            throw Error(ErrorCode::ParseError, "non-numeric field on line " + std::to_string(line_no));
        }
        if (values.size() != n * d) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + " has " +
                                                   std::to_string(values.size()) + " fields, expected " +
                                                   std::to_string(n * d));
        }
        out.emplace_back(unflatten(Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())), n, d));
    }
    return out;
}

std::string to_json(const JacobianResult& result, int indent) {
    Json j;
    j["method"] = to_string(result.method);
    if (result.step) {
        j["step"] = *result.step;
    } else {
        j["step"] = nullptr;
    }
    j["rows"] = result.matrix.rows();
    j["cols"] = result.matrix.cols();
    j["numerical_rank"] = result.numerical_rank;
    j["rank_tolerance"] = result.rank_tolerance;
    j["singular_values"] = detail::vector_to_json(result.singular_values);
    j["matrix"] = detail::matrix_to_json(result.matrix);
    return j.dump(indent);
}

void write_jacobian_csv(std::ostream& os, const JacobianResult& result) {
    for (Eigen::Index i = 0; i < result.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < result.matrix.cols(); ++j) {
            os << (j == 0 ? "" : ",") << format_double(result.matrix(i, j));
        }
        os << '\n';
    }
}

std::string to_json(const OddModel& model, int indent) {
    Json j;
    j["spec"] = spec_json(model.spec);
    j["feature_count"] = model.feature_count;
    j["input_dim"] = model.input_dim;
    j["bandwidth"] = model.bandwidth;
    j["ridge"] = model.ridge;
    j["seed"] = model.seed;
    j["frequencies"] = detail::matrix_to_json(model.frequencies);
    j["phases"] = detail::vector_to_json(model.phases);
    j["weights"] = detail::vector_to_json(model.weights);
    return j.dump(indent);
}

OddModel model_from_json(std::string_view text) {
    return parse_guarded(text, [](const Json& j) {
        OddModel model;
        model.spec = spec_from(j.at("spec"));
        model.feature_count = j.at("feature_count").get<std::size_t>();
        model.input_dim = j.at("input_dim").get<std::size_t>();
        model.bandwidth = j.at("bandwidth").get<double>();
        model.ridge = j.at("ridge").get<double>();
        model.seed = j.at("seed").get<std::uint64_t>();
        model.frequencies = detail::matrix_from_json(j.at("frequencies"));
        model.phases = detail::vector_from_json(j.at("phases"));
        model.weights = detail::vector_from_json(j.at("weights"));
        const auto fc = static_cast<Eigen::Index>(model.feature_count);
        if (model.input_dim != model.spec.m || model.frequencies.rows() != fc ||
            model.frequencies.cols() != static_cast<Eigen::Index>(model.input_dim) || model.phases.size() != fc ||
            model.weights.size() != fc) {
            throw Error(ErrorCode::ParseError, "model arrays are inconsistent with feature_count / input_dim");
        }
        return model;
    });
}

void write_curve_csv(std::ostream& os, std::span<const CurvePoint> curve) {
    os << "eps,value,closed_form,rel_error\n";
    for (const auto& pt : curve) {
        os << format_double(pt.eps) << ',' << format_double(pt.value) << ',' << format_double(pt.closed_form) << ','
           << format_double(pt.rel_error) << '\n';
    }
}

}  // namespace antisym
