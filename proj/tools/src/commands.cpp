// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <antisym/calculus.hpp>
#include <antisym/error.hpp>
#include <antisym/random.hpp>
#include <antisym/report.hpp>
#include <antisym/serialize.hpp>
#include <antisym/verify.hpp>

#include <json.hpp>

#include <fstream>
#include <cstdio>
#include <functional>
#include <sstream>

namespace antisym::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kSaltDefaultPoint = 0xE1;

std::string fmt(double v) { return format_double(v); }

std::string point_text(const Matrix& x) {
    const Vector flat = flatten(x);
    std::string s = "(";
    for (Eigen::Index k = 0; k < flat.size(); ++k) s += (k ? ", " : "") + fmt(flat(k));
    return s + ")";
}

Json parse_core_json(const std::string& text) { return Json::parse(text); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<ParticleConfiguration> read_configurations(const std::string& path, std::size_t n, std::size_t d) {
    std::istringstream in(read_file(path));
    return read_configurations_csv(in, n, d);
}

std::string formula_trace(const FeatureMapSpec& spec, ProjectionMode mode) {
    std::ostringstream os;
    const std::size_t n = spec.n;
    const std::size_t d = spec.d;
    if (mode == ProjectionMode::Paper) {
        os << "p = n(n-1)/2 * (d-1) + 1 = " << n * (n - 1) / 2 << " * " << d - 1 << " + 1 = " << spec.p << '\n';
    } else {
        os << "p = d n + 1 = " << d << " * " << n << " + 1 = " << spec.p << '\n';
    }
    os << "q = C(n+d, d) - 1 = C(" << n + d << ", " << d << ") - 1 = " << spec.q << '\n';
    os << "m = p (q + 1) = " << spec.p << " * " << spec.q + 1 << " = " << spec.m << '\n';
    return os.str();
}

/// Verdict for one Jacobian evaluation and whether it matches the expected structure.
std::pair<std::string, bool> jacobian_verdict(const JacobianResult& r, const Matrix& x) {
    const std::size_t cols = static_cast<std::size_t>(r.matrix.cols());
    const bool singular = in_singular_locus(x);
    std::string head = "rank " + std::to_string(r.numerical_rank) + " of " + std::to_string(cols) + ": ";
    if (singular) {
        if (r.numerical_rank < cols) return {head + "column-rank-deficient on the collision locus", true};
        return {head + "full column rank on the collision locus (unexpected)", false};
    }
    if (r.numerical_rank == cols) return {head + "full column rank", true};
    return {head + "rank-deficient off the collision locus (unexpected)", false};
}

std::vector<Matrix> jacobian_points(const RunConfig& c, const FeatureMapSpec& spec) {
    std::vector<Matrix> points;
    for (const Vector& flat : c.points) points.push_back(unflatten(flat, c.n, c.d));
    if (!points.empty()) return points;
    // One distinct configuration and the same configuration with particle 2 moved onto particle 1.
    auto rng = trial_rng(c.seed, kSaltDefaultPoint, 0);
    Matrix x = sample_distinct_in_box(spec.domain(), c.n, c.tolerances.distinct_gap, rng);
    points.push_back(x);
    if (c.n >= 2) {
        x.row(1) = x.row(0);
        points.push_back(x);
    }
    return points;
}

Outcome jacobian_report(const RunConfig& c, bool json) {
    const FeatureMapSpec spec = build_spec(c);
    Outcome o;
    Json all = Json::array();
    std::ostringstream console;
    const auto points = jacobian_points(c, spec);
    for (std::size_t k = 0; k < points.size(); ++k) {
        const JacobianResult r = jacobian(spec, points[k], c.jacobian_method);
        const auto [verdict, expected] = jacobian_verdict(r, points[k]);
        if (!expected) o.exit_code = 1;
        Json entry;
        Json coords = Json::array();
        for (Eigen::Index i = 0; i < points[k].rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < points[k].cols(); ++j) row.push_back(points[k](i, j));
            coords.push_back(row);
        }
        entry["x"] = coords;
        entry["in_collision_locus"] = in_singular_locus(points[k]);
        entry["verdict"] = verdict;
        entry["jacobian"] = parse_core_json(to_json(r, -1));
        all.push_back(entry);

        std::ostringstream csv;
        write_jacobian_csv(csv, r);
        o.artifacts.push_back({"jacobian_" + std::to_string(k) + ".csv", csv.str()});

        console << "x = " << point_text(points[k]) << '\n' << verdict << '\n' << "singular values:";
        for (Eigen::Index i = 0; i < r.singular_values.size(); ++i) console << ' ' << fmt(r.singular_values(i));
        console << "\nrank tolerance: " << fmt(r.rank_tolerance) << '\n';
    }
    Json doc;
    doc["spec_id"] = spec.id();
    doc["method"] = std::string(to_string(c.jacobian_method));
    doc["points"] = all;
    o.artifacts.push_back({"jacobian.json", dump(doc)});
    o.console = json ? dump(doc) : console.str();
    return o;
}

Outcome curve_report(const RunConfig& c, const std::string& which, bool json) {
    const auto curve = which == "lipschitz" ? lipschitz_ratio_curve(c.eps_list) : c1_obstruction_curve(c.eps_list);
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    Outcome o;
    o.artifacts.push_back({which + ".csv", csv.str()});
    if (json) {
        Json rows = Json::array();
        for (const auto& pt : curve) {
            rows.push_back({{"eps", pt.eps}, {"value", pt.value}, {"closed_form", pt.closed_form}, {"rel_error", pt.rel_error}});
        }
        o.console = dump(Json{{"curve", which}, {"points", rows}});
    } else {
        o.console = csv.str();
    }
    return o;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cmd_basis(const RunConfig& c, const BasisArgs& args, bool json) {
    std::vector<ParticleConfiguration> inputs;
    if (!args.eval_path.empty()) inputs = read_configurations(args.eval_path, c.n, c.d);

    const FeatureMapSpec spec = build_spec(c);
    Outcome o;
    const std::string spec_json = to_json(spec) + "\n";
    o.artifacts.push_back({"spec.json", spec_json});
    std::ostringstream console;
    console << "p=" << spec.p << " q=" << spec.q << " m=" << spec.m << '\n' << formula_trace(spec, c.projection_mode);
    if (!args.eval_path.empty()) {
        const auto features = eval_eta_batch(spec, inputs);
        std::ostringstream csv;
        write_features_csv(csv, spec, inputs, features);
        o.artifacts.push_back({"features.csv", csv.str()});
        o.artifacts.push_back({"features.json", features_to_json(spec, inputs, features) + "\n"});
        if (c.output_dir.empty()) console << csv.str();
    }
    o.console = json ? spec_json : console.str();
    return o;
}

Outcome cmd_verify(const RunConfig& c, bool json) {
    const FeatureMapSpec spec = build_spec(c);
    const FeatureMap map = mutate(FeatureMap::standard(spec), c.mutation);
    using Certifier = std::function<CertificationReport(const FeatureMap&, std::size_t, std::uint64_t, const Tolerances&)>;
    const std::vector<Certifier> certifiers{certify_antisymmetry, certify_psi_symmetry, certify_zero_iff_collision,
                                            certify_orbit_separation, certify_psi_separation};
    std::vector<CertificationReport> reports;
    for (const auto& certify : certifiers) reports.push_back(certify(map, c.trials, c.seed, c.tolerances));

    Outcome o;
    Json summary;
    summary["spec_id"] = spec.id();
    summary["seed"] = c.seed;
    summary["trials"] = c.trials;
    summary["mutation"] = std::string(to_string(c.mutation));
    Json rows = Json::array();
    bool all_passed = true;
    std::ostringstream console;
    console << "spec " << spec.id() << ", seed " << c.seed << ", mutation " << to_string(c.mutation) << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%-20s %8s %9s %-24s %s\n", "property", "checks", "failures", "worst", "tolerance");
    console << line;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        const std::string name(to_string(r.property));
        o.artifacts.push_back({"verify_" + name + ".json", to_json(r) + "\n"});
        rows.push_back({{"property", name},
                        {"checks", r.trials},
                        {"failures", r.failures},
                        {"worst_violation", r.worst_violation},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed()}});
        std::snprintf(line, sizeof line, "%-20s %8zu %9zu %-24s %s\n", name.c_str(), r.trials, r.failures,
                      fmt(r.worst_violation).c_str(), fmt(r.tolerance).c_str());
        console << line;
    }
    for (const auto& r : reports) {
        if (r.passed()) continue;
        console << "witnesses for " << to_string(r.property) << ":\n";
        for (std::size_t k = 0; k < r.witnesses.size() && k < 3; ++k) {
            const Witness& w = r.witnesses[k];
            console << "  x = " << point_text(w.x);
            if (w.x_prime) console << ", x' = " << point_text(*w.x_prime);
            console << ", violation " << fmt(w.violation) << (w.note.empty() ? "" : ", " + w.note) << '\n';
        }
    }
    console << "verdict: " << (all_passed ? "PASS" : "FAIL") << '\n';
    summary["properties"] = rows;
    summary["passed"] = all_passed;
    o.artifacts.push_back({"verify_summary.json", dump(summary)});
    o.exit_code = all_passed ? 0 : 1;
    o.console = json ? dump(summary) : console.str();
    return o;
}

Outcome cmd_jacobian(const RunConfig& c, bool json) { return jacobian_report(c, json); }

Outcome cmd_fit(const RunConfig& c, bool json) {
    if (c.target == TargetKind::Custom) throw Error(ErrorCode::ParseError, "custom targets cannot be configured from the CLI");
    if ((c.target == TargetKind::AbsDiff || c.target == TargetKind::Pow43Diff) && (c.n != 2 || c.d != 1)) {
        throw Error(ErrorCode::ParseError, "abs-diff and pow43-diff targets need n=2, d=1");
    }
    const FeatureMapSpec spec = build_spec(c);
    TargetFunction target = c.target == TargetKind::Slater    ? TargetFunction::slater_sine(c.n, c.d)
                            : c.target == TargetKind::AbsDiff ? TargetFunction::abs_diff()
                                                              : TargetFunction::pow43_diff(Pow43Domain::RealCubeRoot);
    FitConfig fc = c.fit;
    fc.seed = c.seed;
    const FitResult fit = fit_odd_model(spec, target, fc);
    const bool ok = fit.meets_threshold(fc.rmse_threshold);

    Json summary;
    summary["spec_id"] = spec.id();
    summary["target"] = std::string(to_string(c.target));
    summary["seed"] = c.seed;
    summary["samples"] = fc.samples;
    summary["holdout_samples"] = fc.holdout_samples;
    summary["feature_count"] = fc.feature_count;
    summary["ridge"] = fc.ridge;
    summary["bandwidth"] = fit.model.bandwidth;
    summary["train_rmse"] = fit.train_rmse;
    summary["holdout_rmse"] = fit.holdout_rmse;
    summary["condition_estimate"] = fit.condition_estimate;
    summary["rmse_threshold"] = fc.rmse_threshold;
    summary["meets_threshold"] = ok;

    Outcome o;
    o.artifacts.push_back({"model.json", to_json(fit.model) + "\n"});
    o.artifacts.push_back({"fit.json", dump(summary)});
    std::ostringstream console;
    console << "target " << to_string(c.target) << ", spec " << spec.id() << '\n'
            << "train rmse " << fmt(fit.train_rmse) << '\n'
            << "held-out rmse " << fmt(fit.holdout_rmse) << " (threshold " << fmt(fc.rmse_threshold) << ")\n"
            << "condition estimate " << fmt(fit.condition_estimate) << '\n'
            << "verdict: " << (ok ? "PASS" : "FAIL") << '\n';
    o.console = json ? dump(summary) : console.str();
    o.exit_code = ok ? 0 : 1;
    return o;
}

Outcome cmd_predict(const RunConfig&, const PredictArgs& args, bool json) {
    const OddModel model = model_from_json(read_file(args.model_path));
    const auto inputs = read_configurations(args.input_path, model.spec.n, model.spec.d);

    std::ostringstream csv;
    for (std::size_t i = 0; i < model.spec.n; ++i) {
        for (std::size_t j = 0; j < model.spec.d; ++j) csv << "x" << i + 1 << "_" << j + 1 << ',';
    }
    csv << "prediction\n";
    Json preds = Json::array();
    for (const auto& x : inputs) {
        const double g = model.predict_configuration(x);
        const Vector flat = flatten(x.coords());
        for (Eigen::Index k = 0; k < flat.size(); ++k) csv << fmt(flat(k)) << ',';
        csv << fmt(g) << '\n';
        preds.push_back(g);
    }
    Outcome o;
    o.artifacts.push_back({"predictions.csv", csv.str()});
    o.console = json ? dump(Json{{"spec_id", model.spec.id()}, {"predictions", preds}}) : csv.str();
    return o;
}

Outcome cmd_demo(const RunConfig& c, const std::string& which, bool json) {
    if (which == "jacobian") return jacobian_report(c, json);
    return curve_report(c, which, json);
}

}  // namespace antisym::cli
