// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/represent.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace antisym {

namespace {

constexpr std::uint64_t kSaltTrain = 0xF1;
constexpr std::uint64_t kSaltHoldout = 0xF2;
constexpr std::uint64_t kSaltFrequencies = 0xF3;
constexpr std::uint64_t kSaltWeights = 0xF4;
constexpr std::uint64_t kSaltWellDefinedPositive = 0xF5;
constexpr std::uint64_t kSaltWellDefinedCollision = 0xF6;

// Box-Muller on the library's own uniform draws; portable across standard libraries.
double standard_normal(std::mt19937_64& rng) {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform(rng, 0.0, 1.0);
    const double u2 = uniform(rng, 0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Matrix gaussian_rows(std::size_t rows, std::size_t cols, double scale, std::uint64_t seed, std::uint64_t salt) {
    Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        auto rng = trial_rng(seed, salt, static_cast<std::uint64_t>(r));
        for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = scale * standard_normal(rng);
    }
    return out;
}

// t^{4/3} as (cbrt t)^4.
double pow43(double t) {
    const double c = std::cbrt(t);
    const double c2 = c * c;
    return c2 * c2;
}

void check_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw Error(ErrorCode::NonpositiveEps, "eps must be a positive finite number");
    }
}

double relative_error(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

struct PairImages {
    Vector eta_x;
    Vector eta_x_prime;
    Matrix x;
    Matrix x_prime;
};

// The pair x = (2 eps, 0), x' = (eps, -eps) on the line-pair map.
PairImages regularity_pair(double eps) {
    check_eps(eps);
    static const FeatureMapSpec spec = line_pair_spec();
    PairImages out;
    out.x = Matrix{{2.0 * eps}, {0.0}};
    out.x_prime = Matrix{{eps}, {-eps}};
    out.eta_x = eval_eta(spec, out.x).values;
    out.eta_x_prime = eval_eta(spec, out.x_prime).values;
    return out;
}

}  // namespace

std::string_view to_string(TargetKind kind) noexcept {
    switch (kind) {
        case TargetKind::Slater: return "slater";
        case TargetKind::AbsDiff: return "abs-diff";
        case TargetKind::Pow43Diff: return "pow43-diff";
        case TargetKind::Custom: return "custom";
    }
    return "unknown";
}

TargetKind target_kind_from_string(std::string_view name) {
    for (TargetKind k : {TargetKind::Slater, TargetKind::AbsDiff, TargetKind::Pow43Diff, TargetKind::Custom}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorCode::ParseError, "unknown target kind '" + std::string(name) + "'");
}

TargetFunction TargetFunction::slater_sine(std::size_t n, std::size_t d) {
    std::vector<Orbital> orbitals;
    for (std::size_t a = 1; a <= n; ++a) {
        const double freq = static_cast<double>(a) * std::numbers::pi;
        orbitals.emplace_back([freq](const Vector& point) { return std::sin(freq * point.mean()); });
    }
    return slater(n, d, std::move(orbitals));
}

TargetFunction TargetFunction::slater(std::size_t n, std::size_t d, std::vector<Orbital> orbitals) {
    if (orbitals.size() != n) throw Error(ErrorCode::InvalidArgument, "a Slater target needs exactly n orbitals");
    TargetFunction t;
    t.kind = TargetKind::Slater;
    t.n = n;
    t.d = d;
    t.orbitals = std::move(orbitals);
    return t;
}

TargetFunction TargetFunction::abs_diff() {
    TargetFunction t;
    t.kind = TargetKind::AbsDiff;
    t.n = 2;
    t.d = 1;
    return t;
}

TargetFunction TargetFunction::pow43_diff(Pow43Domain domain) {
    TargetFunction t;
    t.kind = TargetKind::Pow43Diff;
    t.n = 2;
    t.d = 1;
    t.pow43_domain = domain;
    return t;
}

TargetFunction TargetFunction::make_custom(std::size_t n, std::size_t d, std::function<double(const Matrix&)> f) {
    TargetFunction t;
    t.kind = TargetKind::Custom;
    t.n = n;
    t.d = d;
    t.custom = std::move(f);
    return t;
}

double eval_target(const TargetFunction& t, const ParticleConfiguration& x) {
    if (x.n() != t.n || x.d() != t.d) {
        throw Error(ErrorCode::DimensionMismatch, "configuration shape differs from the target's (n, d)");
    }
    const Matrix& c = x.coords();
    switch (t.kind) {
        case TargetKind::Slater: {
            Matrix m(c.rows(), c.rows());
            for (Eigen::Index a = 0; a < c.rows(); ++a) {
                for (Eigen::Index b = 0; b < c.rows(); ++b) {
                    m(a, b) = t.orbitals[static_cast<std::size_t>(a)](c.row(b).transpose());
                }
            }
            return m.determinant();
        }
        case TargetKind::AbsDiff:
            return std::abs(c(0, 0)) - std::abs(c(1, 0));
        case TargetKind::Pow43Diff:
            if (t.pow43_domain == Pow43Domain::NonNegative && (c.array() < 0.0).any()) {
                throw Error(ErrorCode::DomainViolation, "x^{4/3} target is restricted to non-negative coordinates");
            }
            return pow43(c(0, 0)) - pow43(c(1, 0));
        case TargetKind::Custom:
            if (!t.custom) throw Error(ErrorCode::InvalidArgument, "custom target has no function");
            return t.custom(c);
    }
    return 0.0;
}

Vector OddModel::features(const Vector& y) const {
    if (static_cast<std::size_t>(y.size()) != input_dim) {
        throw Error(ErrorCode::DimensionMismatch, "feature vector length differs from the model's input dimension");
    }
    Vector z = frequencies * y + phases;
    return z.array().sin().matrix();
}

double OddModel::predict(const Vector& y) const { return weights.dot(features(y)); }

double OddModel::predict_configuration(const ParticleConfiguration& x) const {
    return predict(eval_eta(spec, x).values);
}

OddModel random_odd_model(const FeatureMapSpec& spec, std::size_t feature_count, double bandwidth, double weight_scale,
                          std::uint64_t seed) {
    OddModel model;
    model.spec = spec;
    model.feature_count = feature_count;
    model.input_dim = spec.m;
    model.bandwidth = bandwidth;
    model.seed = seed;
    model.frequencies = gaussian_rows(feature_count, spec.m, bandwidth, seed, kSaltFrequencies);
    model.phases = Vector::Zero(static_cast<Eigen::Index>(feature_count));
    model.weights = gaussian_rows(1, feature_count, weight_scale, seed, kSaltWeights).row(0).transpose();
    return model;
}

FitResult fit_odd_model(const FeatureMapSpec& spec, const TargetFunction& t, const FitConfig& config) {
    if (config.feature_count < 1) throw Error(ErrorCode::InvalidArgument, "feature_count must be >= 1");
    if (config.samples < config.feature_count) throw Error(ErrorCode::InvalidArgument, "samples must be >= feature_count");
    if (!(config.ridge > 0.0)) throw Error(ErrorCode::InvalidArgument, "ridge must be > 0");
    if (t.n != spec.n || t.d != spec.d) throw Error(ErrorCode::DimensionMismatch, "target and spec disagree on (n, d)");

    const DomainBox box = spec.domain();
    auto draw = [&](std::size_t count, std::uint64_t salt, Matrix& ys, Vector& fs) {
        ys.resize(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(spec.m));
        fs.resize(static_cast<Eigen::Index>(count));
        for (std::size_t s = 0; s < count; ++s) {
            auto rng = trial_rng(config.seed, salt, s);
            const ParticleConfiguration x(sample_in_box(box, spec.n, rng));
            ys.row(static_cast<Eigen::Index>(s)) = eval_eta(spec, x).values.transpose();
            fs(static_cast<Eigen::Index>(s)) = eval_target(t, x);
        }
    };
    Matrix y_train;
    Vector f_train;
    Matrix y_hold;
    Vector f_hold;
    draw(config.samples, kSaltTrain, y_train, f_train);
    draw(config.holdout_samples, kSaltHoldout, y_hold, f_hold);

    std::vector<double> norms(config.samples);
    for (std::size_t s = 0; s < config.samples; ++s) norms[s] = y_train.row(static_cast<Eigen::Index>(s)).norm();
    std::nth_element(norms.begin(), norms.begin() + static_cast<std::ptrdiff_t>(norms.size() / 2), norms.end());
    const double median = norms[norms.size() / 2];

    FitResult result;
    OddModel& model = result.model;
    model = random_odd_model(spec, config.feature_count, median > 0.0 ? 1.0 / median : 1.0, 0.0, config.seed);
    model.ridge = config.ridge;

    auto design = [&model](const Matrix& ys) {
        Matrix phi(ys.rows(), static_cast<Eigen::Index>(model.feature_count));
        for (Eigen::Index s = 0; s < ys.rows(); ++s) phi.row(s) = model.features(ys.row(s).transpose()).transpose();
        return phi;
    };
    const Matrix phi = design(y_train);
    const double inv_n = 1.0 / static_cast<double>(config.samples);
    Matrix normal = (phi.transpose() * phi) * inv_n;
    normal.diagonal().array() += config.ridge;
    const Vector rhs = (phi.transpose() * f_train) * inv_n;

    Eigen::SelfAdjointEigenSolver<Matrix> eig(normal, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    result.condition_estimate = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (!(result.condition_estimate <= config.max_condition)) {
        throw Error(ErrorCode::IllConditioned, "normal equations condition estimate " +
                                                   std::to_string(result.condition_estimate) + " exceeds limit");
    }
    model.weights = normal.ldlt().solve(rhs);

    auto rmse = [&model, &design](const Matrix& ys, const Vector& fs) {
        if (ys.rows() == 0) return 0.0;
        const Vector residual = design(ys) * model.weights - fs;
        return std::sqrt(residual.squaredNorm() / static_cast<double>(ys.rows()));
    };
    result.train_rmse = rmse(y_train, f_train);
    result.holdout_rmse = rmse(y_hold, f_hold);
    return result;
}

CertificationReport check_well_defined(const FeatureMapSpec& spec, const TargetFunction& t, std::size_t trials,
                                       std::uint64_t seed, double tol) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
    CertificationReport r;
    r.property = Property::OddWellDefined;
    r.spec_id = spec.id();
    r.seed = seed;
    r.tolerance = tol;
    r.tolerances["fiber"] = tol;
    const DomainBox box = spec.domain();
    const std::vector<Permutation> evens = spec.n <= 4 ? even_permutations(spec.n) : std::vector<Permutation>{};

    for (std::size_t s = 0; s < trials; ++s) {
        auto rng = trial_rng(seed, kSaltWellDefinedPositive, s);
        const Matrix x = sample_in_box(box, spec.n, rng);
        const double f0 = eval_target(t, x);
        std::vector<Permutation> plan = evens;
        if (plan.empty()) plan.push_back(random_even_permutation(spec.n, rng));
        double worst = 0.0;
        Matrix worst_image = x;
        for (const auto& perm : plan) {
            const Matrix moved = permute_rows(x, perm);
            const double v = std::abs(eval_target(t, moved) - f0);
            if (v > worst) {
                worst = v;
                worst_image = moved;
            }
        }
        r.record(worst, worst > tol, x, worst_image, "f differs across an eta fiber");
    }
    if (spec.n >= 2) {
        for (std::size_t s = 0; s < trials; ++s) {
            auto rng = trial_rng(seed, kSaltWellDefinedCollision, s);
            Matrix x = sample_in_box(box, spec.n, rng);
            const auto i = static_cast<Eigen::Index>(rng() % spec.n);
            auto j = static_cast<Eigen::Index>(rng() % (spec.n - 1));
            if (j >= i) ++j;
            x.row(j) = x.row(i);
            const double v = std::abs(eval_target(t, x));
            r.record(v, v > tol, x, std::nullopt, "f nonzero on the collision fiber eta = 0");
        }
    }
    r.trials = spec.n >= 2 ? 2 * trials : trials;
    return r;
}

FeatureMapSpec line_pair_spec() { return FeatureMapSpec::build(2, 1, ProjectionMode::Paper); }

std::vector<CurvePoint> lipschitz_ratio_curve(std::span<const double> eps_list) {
    const TargetFunction f = TargetFunction::abs_diff();
    std::vector<CurvePoint> curve;
    for (double eps : eps_list) {
        const PairImages pair = regularity_pair(eps);
        const double df = std::abs(eval_target(f, pair.x) - eval_target(f, pair.x_prime));
        CurvePoint pt;
        pt.eps = eps;
        pt.value = df / (pair.eta_x - pair.eta_x_prime).norm();
        pt.closed_form = 1.0 / (2.0 * eps * std::sqrt(1.0 + eps * eps));
        pt.rel_error = relative_error(pt.value, pt.closed_form);
        curve.push_back(pt);
    }
    return curve;
}

std::vector<CurvePoint> c1_obstruction_curve(std::span<const double> eps_list) {
    // x' = (eps, -eps) has a negative coordinate, so t^{4/3} is read through the real cube root.
    const TargetFunction f = TargetFunction::pow43_diff(Pow43Domain::RealCubeRoot);
    std::vector<CurvePoint> curve;
    for (double eps : eps_list) {
        const PairImages pair = regularity_pair(eps);
        const double df = eval_target(f, pair.x) - eval_target(f, pair.x_prime);
        CurvePoint pt;
        pt.eps = eps;
        pt.value = df / (pair.eta_x - pair.eta_x_prime).norm();
        pt.closed_form = std::pow(2.0, 4.0 / 3.0) / (4.0 * std::pow(eps, 2.0 / 3.0) * std::sqrt(1.0 + eps * eps));
        pt.rel_error = relative_error(pt.value, pt.closed_form);
        curve.push_back(pt);
    }
    return curve;
}

}  // namespace antisym
