// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym_cli/cli.hpp>
#include <antisym_cli/run_config.hpp>

#include "commands.hpp"

#include <antisym/error.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace antisym::cli {

namespace {

namespace fs = std::filesystem;

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    bool json = false;
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
    std::optional<std::string> mode;
    std::vector<std::string> box;
    std::vector<std::string> tol;

    std::optional<std::size_t> trials;
    std::optional<std::string> mutate;
    std::vector<std::string> points;
    std::optional<std::string> method;
    std::vector<double> eps;
    std::optional<std::string> target;
    std::optional<std::size_t> samples;
    std::optional<std::size_t> features;
    std::optional<double> ridge;
    std::optional<std::size_t> holdout;
    std::optional<double> threshold;
};

void apply_overrides(RunConfig& c, const Overrides& o) {
    if (o.seed) c.seed = *o.seed;
    if (o.out) c.output_dir = *o.out;
    if (o.n) c.n = *o.n;
    if (o.d) c.d = *o.d;
    if (o.mode) c.projection_mode = projection_mode_from_string(*o.mode);
    if (!o.box.empty()) {
        DomainBox b{Vector(static_cast<Eigen::Index>(o.box.size())), Vector(static_cast<Eigen::Index>(o.box.size()))};
        for (std::size_t k = 0; k < o.box.size(); ++k) {
            const auto [lo, hi] = parse_interval(o.box[k]);
            b.lower(static_cast<Eigen::Index>(k)) = lo;
            b.upper(static_cast<Eigen::Index>(k)) = hi;
        }
        c.domain_box = b;
    }
    for (const std::string& entry : o.tol) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "--tol expects name=value, got '" + entry + "'");
        const std::string json = "{\"tolerances\":{\"" + entry.substr(0, eq) + "\":" + entry.substr(eq + 1) + "}}";
        apply_config_json(c, json);
    }
    if (o.trials) c.trials = *o.trials;
    if (o.mutate) c.mutation = mutation_from_string(*o.mutate);
    if (o.method) apply_config_json(c, "{\"jacobian\":{\"method\":\"" + *o.method + "\"}}");
    if (!o.eps.empty()) c.eps_list = o.eps;
    if (o.target) c.target = target_kind_from_string(*o.target);
    if (o.samples) c.fit.samples = *o.samples;
    if (o.features) c.fit.feature_count = *o.features;
    if (o.ridge) c.fit.ridge = *o.ridge;
    if (o.holdout) c.fit.holdout_samples = *o.holdout;
    if (o.threshold) c.fit.rmse_threshold = *o.threshold;
    if (!o.points.empty()) {
        c.points.clear();
        for (const std::string& p : o.points) c.points.push_back(flatten(parse_point(p, c.n, c.d)));
    }
}

/// Writes every artifact through a temporary file; on failure removes what was written.
void write_artifacts(const std::string& dir, const std::vector<Artifact>& artifacts) {
    std::vector<fs::path> written;
    try {
        fs::create_directories(dir);
        for (const Artifact& a : artifacts) {
            const fs::path target = fs::path(dir) / a.name;
            const fs::path tmp = fs::path(dir) / (a.name + ".tmp");
            {
                std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
                if (!os) throw Error(ErrorCode::IoError, "cannot open '" + tmp.string() + "' for writing");
                os << a.content;
                if (!os.flush()) throw Error(ErrorCode::IoError, "write to '" + tmp.string() + "' failed");
            }
            fs::rename(tmp, target);
            written.push_back(target);
        }
    } catch (const fs::filesystem_error& e) {
        for (const auto& p : written) fs::remove(p);
        throw Error(ErrorCode::IoError, e.what());
    } catch (...) {
        for (const auto& p : written) fs::remove(p);
        throw;
    }
}

int exit_code_for(ErrorCode code) {
    // Numerical breakdown during a run is a failed check, everything else is a usage or input problem.
    return code == ErrorCode::IllConditioned ? kExitCheckFailed : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Anti-symmetric feature maps: construction, certification, Jacobians and odd-model fits."};
    app.name("antisym");
    app.fallthrough();
    app.require_subcommand(1);
    Overrides o;

    app.add_option("--config", o.config_path, "JSON run configuration");
    app.add_option("--seed", o.seed, "64-bit seed for every randomized step");
    app.add_option("--out", o.out, "output directory for artifacts");
    app.add_flag("--json", o.json, "print JSON instead of text");
    app.add_option("--n", o.n, "number of particles");
    app.add_option("--d", o.d, "spatial dimension");
    app.add_option("--mode", o.mode, "projection count: paper or improved");
    app.add_option("--box", o.box, "domain interval lo:hi, once per coordinate (use --box=-1:1 for negative bounds)");
    app.add_option("--tol", o.tol, "tolerance override name=value");

    BasisArgs basis_args;
    auto* basis = app.add_subcommand("basis", "build the feature map and print its sizes");
    basis->add_option("--eval", basis_args.eval_path, "CSV of configurations to evaluate");

    auto* verify = app.add_subcommand("verify", "run every structural certifier");
    verify->add_option("--trials", o.trials, "samples per certifier");
    verify->add_option("--mutate", o.mutate, "sign-flip, dropped-factor, dropped-block or duplicated-psi");

    auto* jac = app.add_subcommand("jacobian", "Jacobian rank and spectrum at configured points");
    jac->add_option("--point", o.points, "configuration as n*d comma-separated numbers");
    jac->add_option("--method", o.method, "exact or fd");

    auto* fit = app.add_subcommand("fit", "fit an odd random-feature model g with f = g(eta(x))");
    fit->add_option("--target", o.target, "slater, abs-diff or pow43-diff");
    fit->add_option("--samples", o.samples, "training samples");
    fit->add_option("--features", o.features, "number of random sine features");
    fit->add_option("--ridge", o.ridge, "ridge parameter");
    fit->add_option("--holdout", o.holdout, "held-out samples");
    fit->add_option("--threshold", o.threshold, "held-out RMSE threshold");

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "evaluate a saved model on configurations");
    predict->add_option("--model", predict_args.model_path, "model JSON written by fit")->required();
    predict->add_option("--input", predict_args.input_path, "CSV of configurations")->required();

    std::string which;
    auto* demo = app.add_subcommand("demo", "regularity curves and Jacobian rank demo");
    demo->add_option("which", which, "lipschitz, c1 or jacobian")
        ->required()
        ->check(CLI::IsMember({"lipschitz", "c1", "jacobian"}));
    demo->add_option("--eps", o.eps, "eps values for the curves");
    demo->add_option("--point", o.points, "configuration for the jacobian demo");
    demo->add_option("--method", o.method, "exact or fd");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        RunConfig config;
        if (!o.config_path.empty()) apply_config_json(config, read_file(o.config_path));
        apply_overrides(config, o);
        validate(config);

        Outcome result;
        if (*basis) {
            result = cmd_basis(config, basis_args, o.json);
        } else if (*verify) {
            result = cmd_verify(config, o.json);
        } else if (*jac) {
            result = cmd_jacobian(config, o.json);
        } else if (*fit) {
            result = cmd_fit(config, o.json);
        } else if (*predict) {
            result = cmd_predict(config, predict_args, o.json);
        } else {
            result = cmd_demo(config, which, o.json);
        }
        if (!config.output_dir.empty()) write_artifacts(config.output_dir, result.artifacts);
        out << result.console;
        return result.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace antisym::cli
