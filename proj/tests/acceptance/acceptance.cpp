// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Each criterion also has a wall-clock
// budget that counts toward its verdict.

#include <antisym/calculus.hpp>
#include <antisym/error.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/represent.hpp>
#include <antisym/verify.hpp>
#include <antisym_cli/cli.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace antisym;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

// ---------------------------------------------------------------------------

Outcome golden_values() {
    Outcome o;
    const auto spec = FeatureMapSpec::build(2, 1);
    const Vector a = eval_eta(spec, Matrix{{0.2}, {0.0}}).values;
    const Vector b = eval_eta(spec, Matrix{{0.1}, {-0.1}}).values;
    const double ea[] = {0.2, 0.04, 0.008};
    const double eb[] = {0.2, 0.0, 0.004};
    for (int k = 0; k < 3; ++k) {
        o.require(eb[k] == 0.0 ? b(k) == 0.0 : rel_close(b(k), eb[k], 1e-15), "eta(0.1,-0.1)[" + std::to_string(k) + "]");
        o.require(rel_close(a(k), ea[k], 1e-15), "eta(0.2,0)[" + std::to_string(k) + "]");
    }
    return o;
}

Outcome counting() {
    Outcome o;
    struct Row {
        std::size_t n, d;
        ProjectionMode mode;
        std::size_t p, q, m;
    };
    const Row rows[] = {{2, 1, ProjectionMode::Paper, 1, 2, 3},
                        {3, 2, ProjectionMode::Paper, 4, 9, 40},
                        {4, 3, ProjectionMode::Paper, 13, 34, 455},
                        {3, 2, ProjectionMode::Improved, 7, 9, 70}};
    for (const auto& r : rows) {
        const auto s = FeatureMapSpec::build(r.n, r.d, r.mode);
        o.require(s.p == r.p && s.q == r.q && s.m == r.m,
                  "(n,d)=(" + std::to_string(r.n) + "," + std::to_string(r.d) + ") gave p=" + std::to_string(s.p) +
                      " q=" + std::to_string(s.q) + " m=" + std::to_string(s.m));
    }
    return o;
}

Outcome eta_certification() {
    Outcome o;
    std::size_t total = 0;
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 2}, {4, 3}}) {
        const auto map = FeatureMap::standard(FeatureMapSpec::build(n, d));
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
        const auto a = certify_antisymmetry(map, 1000, 1);
        const auto z = certify_zero_iff_collision(map, 1000, 2);
        const auto s = certify_orbit_separation(map, 1000, 3);
        o.require(a.passed(), "anti-symmetry " + tag + " failures=" + std::to_string(a.failures));
        o.require(z.passed(), "zero-iff-collision " + tag + " failures=" + std::to_string(z.failures));
        o.require(s.passed(), "orbit separation " + tag + " failures=" + std::to_string(s.failures));
        total += a.trials + z.trials + s.trials;
    }
    const auto spec = FeatureMapSpec::build(3, 2);
    for (auto m : {Mutation::SignFlip, Mutation::DroppedFactor, Mutation::DroppedBlock, Mutation::DuplicatedPsi}) {
        const auto map = mutate(FeatureMap::standard(spec), m);
        // The full certifier suite, as run by `antisym verify`; a corrupted psi block is
        // the psi-separation certifier's responsibility.
        const std::size_t caught = certify_antisymmetry(map, 200, 4).failures +
                                   certify_psi_symmetry(map, 200, 4).failures +
                                   certify_zero_iff_collision(map, 200, 5).failures +
                                   certify_orbit_separation(map, 200, 6).failures +
                                   certify_psi_separation(map, 200, 6).failures;
        o.require(caught >= 1, std::string("mutation ") + std::string(to_string(m)) + " not detected");
    }
    if (o.ok) o.detail = std::to_string(total) + " checks, 4 mutations detected";
    return o;
}

Outcome psi_certification() {
    Outcome o;
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {4, 2}}) {
        const auto map = FeatureMap::standard(FeatureMapSpec::build(n, d));
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
        const auto sym = certify_psi_symmetry(map, 500, 7);
        const auto sep = certify_psi_separation(map, 500, 8);
        o.require(sym.passed(), "psi symmetry " + tag + " failures=" + std::to_string(sym.failures));
        o.require(sep.passed(), "psi separation " + tag + " failures=" + std::to_string(sep.failures));
    }
    return o;
}

Outcome singular_locus() {
    Outcome o;
    double worst = 0.0;
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 2}}) {
        const auto spec = FeatureMapSpec::build(n, d);
        for (std::uint64_t t = 0; t < 100; ++t) {
            auto rng = trial_rng(9, n, t);
            Matrix x = sample_in_box(spec.domain(), n, rng);
            const auto i = static_cast<Eigen::Index>(rng() % n);
            auto j = static_cast<Eigen::Index>(rng() % (n - 1));
            if (j >= i) ++j;
            x.row(j) = x.row(i);
            const auto r = jacobian(spec, x, JacobianMethod::ExactPolynomial);
            const double bound = 1e-8 * (1.0 + r.matrix.cwiseAbs().maxCoeff());
            const double residual = check_singular_column_pairs(spec, x);
            worst = std::max(worst, residual / bound);
            o.require(residual <= bound, "column-pair residual " + num(residual));
            o.require(r.numerical_rank <= n * d - d, "rank " + std::to_string(r.numerical_rank) + " on the locus");
        }
    }
    const Matrix expected{{1.0, -1.0}, {2.0, -2.0}, {2.0, -2.0}};
    for (auto method : {JacobianMethod::ExactPolynomial, JacobianMethod::CentralDifference}) {
        const auto r = jacobian(FeatureMapSpec::build(2, 1), Matrix{{1.0}, {1.0}}, method);
        o.require((r.matrix - expected).cwiseAbs().maxCoeff() <= 1e-6, "hand Jacobian at (1,1)");
        o.require(r.numerical_rank == 1, "rank at (1,1) is " + std::to_string(r.numerical_rank));
    }
    if (o.ok) o.detail = "worst residual/bound " + num(worst);
    return o;
}

Outcome full_rank() {
    Outcome o;
    double smallest = 1.0;
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 2}}) {
        const auto r = check_full_rank_off_singular(FeatureMapSpec::build(n, d), 100, 10, 1e-8, 1e-3);
        o.require(r.passed(), "failures=" + std::to_string(r.failures));
        smallest = std::min(smallest, r.metrics.at("min_sigma_ratio"));
    }
    if (o.ok) o.detail = "min sigma_min/sigma_max " + num(smallest);
    return o;
}

Outcome product_rule() {
    Outcome o;
    const auto spec = FeatureMapSpec::build(3, 2);
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto rng = trial_rng(11, 0, t);
        const Matrix x = sample_in_box(spec.domain(), 3, rng);
        const double bound = 1e-5 * (1.0 + exact_jacobian_eta(spec, x).cwiseAbs().maxCoeff());
        const double residual = check_product_rule_blocks(spec, x);
        worst = std::max(worst, residual);
        o.require(residual <= bound, "block residual " + num(residual));
    }
    if (o.ok) o.detail = "max residual " + num(worst);
    return o;
}

const std::vector<double> kEpsGrid{1e-1, 1e-2, 1e-3, 1e-4};

Outcome lipschitz() {
    Outcome o;
    const auto curve = lipschitz_ratio_curve(kEpsGrid);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        o.require(curve[i].rel_error <= 1e-12, "rel error " + num(curve[i].rel_error) + " at eps " + num(curve[i].eps));
        if (i > 0) o.require(curve[i].value > curve[i - 1].value, "ratio not increasing");
    }
    o.require(std::abs(curve[2].value - 499.99975) <= 1e-5, "ratio at 1e-3 is " + num(curve[2].value));
    if (o.ok) o.detail = "ratio at 1e-3 = " + num(curve[2].value);
    return o;
}

Outcome c1_obstruction() {
    Outcome o;
    const auto curve = c1_obstruction_curve(kEpsGrid);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        o.require(curve[i].rel_error <= 1e-12, "rel error " + num(curve[i].rel_error) + " at eps " + num(curve[i].eps));
        if (i > 0) o.require(curve[i].value > curve[i - 1].value, "quotient not increasing");
    }
    const std::vector<double> tiny{1e-8};
    const double scaled = c1_obstruction_curve(tiny)[0].value * std::pow(1e-8, 2.0 / 3.0);
    const double limit = std::pow(2.0, 4.0 / 3.0) / 4.0;
    o.require(std::abs(scaled - limit) <= 1e-6, "q(1e-8) eps^{2/3} = " + num(scaled));
    if (o.ok) o.detail = "q(1e-8) eps^{2/3} = " + num(scaled);
    return o;
}

Outcome odd_fit() {
    Outcome o;
    const auto spec = FeatureMapSpec::build(2, 1);
    FitConfig cfg;
    cfg.samples = 2000;
    cfg.feature_count = 500;
    cfg.ridge = 1e-8;
    const FitResult fit = fit_odd_model(spec, TargetFunction::slater_sine(2, 1), cfg);
    o.require(fit.holdout_rmse <= cfg.rmse_threshold,
              "held-out RMSE " + num(fit.holdout_rmse) + " > " + num(cfg.rmse_threshold) + " (train " +
                  num(fit.train_rmse) + ")");

    const OddModel& g = fit.model;
    double worst_odd = 0.0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        auto rng = trial_rng(12, 0, t);
        Vector y(static_cast<Eigen::Index>(spec.m));
        for (Eigen::Index k = 0; k < y.size(); ++k) y(k) = uniform(rng, -2.0, 2.0);
        worst_odd = std::max(worst_odd, std::abs(g.predict(y) + g.predict(-y)));
    }
    o.require(worst_odd <= 1e-14, "g(y)+g(-y) reached " + num(worst_odd));

    double worst_anti = 0.0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        auto rng = trial_rng(12, 1, t);
        const Matrix x = sample_in_box(spec.domain(), 2, rng);
        const Permutation sigma = random_permutation(2, rng);
        const double base = g.predict_configuration(x);
        worst_anti = std::max(worst_anti, std::abs(g.predict_configuration(permute_rows(x, sigma)) - signature(sigma) * base));
    }
    o.require(worst_anti <= 1e-10, "anti-symmetry defect " + num(worst_anti));
    const std::string metrics = "odd defect " + num(worst_odd) + ", anti-symmetry defect " + num(worst_anti);
    o.detail = o.ok ? "held-out RMSE " + num(fit.holdout_rmse) + ", " + metrics : o.detail + "; " + metrics;
    return o;
}

// ---------------------------------------------------------------------------

int run_tool(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    return cli::run_cli(args, out, err);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism(const fs::path& work) {
    Outcome o;
    fs::remove_all(work);
    fs::create_directories(work);
    {
        std::ofstream csv(work / "points.csv");
        csv << "x1_1,x2_1\n0.2,0\n0.1,-0.1\n0.5,0.25\n0.3,0.3\n";
    }
    const std::string points = (work / "points.csv").string();
    const std::vector<std::vector<std::string>> commands{
        {"basis", "--n", "3", "--d", "2"},
        {"basis", "--eval", points},
        {"verify", "--trials", "200", "--n", "3", "--d", "2", "--seed", "5"},
        {"jacobian", "--n", "3", "--d", "2", "--seed", "6"},
        {"jacobian", "--point", "1,1", "--point", "1,2"},
        {"demo", "lipschitz"},
        {"demo", "c1"},
        {"fit", "--samples", "400", "--features", "100", "--ridge", "1e-6", "--seed", "7", "--threshold", "1"},
    };
    std::size_t files = 0;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        for (const char* run : {"a", "b"}) {
            auto args = commands[c];
            args.push_back("--out");
            args.push_back((work / run / std::to_string(c)).string());
            o.require(run_tool(args) == 0, "command " + std::to_string(c) + " exited nonzero");
        }
    }
    // predict uses the fitted model from each run.
    const std::size_t fit_index = commands.size() - 1;
    for (const char* run : {"a", "b"}) {
        const fs::path model = work / run / std::to_string(fit_index) / "model.json";
        o.require(run_tool({"predict", "--model", model.string(), "--input", points, "--out",
                            (work / run / "predict").string()}) == 0,
                  "predict exited nonzero");
    }
    for (const auto& entry : fs::recursive_directory_iterator(work / "a")) {
        if (!entry.is_regular_file()) continue;
        const fs::path rel = fs::relative(entry.path(), work / "a");
        const fs::path twin = work / "b" / rel;
        o.require(fs::exists(twin) && slurp(entry.path()) == slurp(twin), "artifact differs: " + rel.string());
        ++files;
    }
    o.require(files >= 15, "only " + std::to_string(files) + " artifacts produced");
    if (o.ok) o.detail = std::to_string(files) + " artifacts byte-identical across two runs";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    fs::path work = fs::temp_directory_path() / "antisym_acceptance";
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--work-dir") work = argv[i + 1];
    }

    struct Criterion {
        int id;
        const char* title;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden eta values", 1.0, golden_values},
        {2, "projection, power-sum and feature counts", 1.0, counting},
        {3, "eta certification and mutation detection", 60.0, eta_certification},
        {4, "psi symmetry and separation", 30.0, psi_certification},
        {5, "Jacobian rank drop on the collision locus", 30.0, singular_locus},
        {6, "full column rank off the collision locus", 60.0, full_rank},
        {7, "product-rule block identity", 10.0, product_rule},
        {8, "Lipschitz ratio counterexample", 1.0, lipschitz},
        {9, "C1 difference-quotient counterexample", 1.0, c1_obstruction},
        {10, "odd model fit of a Slater determinant", 120.0, odd_fit},
        {11, "byte-identical reruns of the CLI", 120.0, [&work] { return determinism(work); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) o.require(false, "runtime " + num(seconds) + " s over budget " + num(c.budget_seconds) + " s");
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  AC" << c.id << "  " << c.title << "  [" << num(seconds) << " s]";
        if (!o.detail.empty()) std::cout << "  " << o.detail;
        std::cout << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
