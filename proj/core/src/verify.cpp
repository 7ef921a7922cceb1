// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/verify.hpp>

#include <cmath>
#include <string>
#include <utility>

namespace antisym {

namespace {

// Stream salts keep the certifiers' random draws independent of each other.
constexpr std::uint64_t kSaltAntisymmetry = 0xA1;
constexpr std::uint64_t kSaltPsiSymmetry = 0xA2;
constexpr std::uint64_t kSaltCollisionForward = 0xB1;
constexpr std::uint64_t kSaltCollisionReverse = 0xB2;
constexpr std::uint64_t kSaltOrbitPositive = 0xC1;
constexpr std::uint64_t kSaltOrbitNegative = 0xC2;
constexpr std::uint64_t kSaltPsiPositive = 0xD1;
constexpr std::uint64_t kSaltPsiNegative = 0xD2;

constexpr int kMaxPairAttempts = 10000;

double inf_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void require_trials(std::size_t trials) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "certifiers need trials >= 1");
}

CertificationReport make_report(Property property, const FeatureMap& map, std::uint64_t seed, double tolerance) {
    CertificationReport r;
    r.property = property;
    r.spec_id = map.spec.id();
    r.seed = seed;
    r.tolerance = tolerance;
    return r;
}

void store_tolerances(CertificationReport& r, const Tolerances& tol) {
    r.tolerances["equality"] = tol.equality;
    r.tolerances["zero"] = tol.zero;
    r.tolerances["separation"] = tol.separation;
    r.tolerances["distinct_gap"] = tol.distinct_gap;
    r.tolerances["orbit_match"] = tol.orbit_match;
}

std::vector<Permutation> permutation_plan(std::size_t n, std::mt19937_64& rng) {
    if (n <= kExhaustivePermutationMaxN) return all_permutations(n);
    std::vector<Permutation> plan;
    plan.reserve(kRandomPermutationsPerSample);
    for (std::size_t i = 0; i < kRandomPermutationsPerSample; ++i) plan.push_back(random_permutation(n, rng));
    return plan;
}

void force_duplicate(Matrix& x, std::mt19937_64& rng) {
    const auto n = static_cast<std::size_t>(x.rows());
    if (n < 2) return;
    const std::size_t i = static_cast<std::size_t>(rng() % n);
    std::size_t j = static_cast<std::size_t>(rng() % (n - 1));
    if (j >= i) ++j;
    x.row(static_cast<Eigen::Index>(j)) = x.row(static_cast<Eigen::Index>(i));
}

/// |a - b|_inf / max(|a|_inf, |b|_inf), and 0 when both vectors vanish. High-degree
/// features of nearby particles can be tiny in absolute terms, so the gap is
/// measured against their own scale.
double relative_gap(const Vector& a, const Vector& b) {
    const double scale = std::max(inf_norm(a), inf_norm(b));
    return scale > 0.0 ? inf_norm(a - b) / scale : 0.0;
}

bool min_gap_ok(const Matrix& x, double gap, bool require_distinct) {
    return !require_distinct || min_pairwise_distance(x) >= gap;
}

// x' = x + s with one shift s for every particle; all projected differences, hence
// every phi_k, are unchanged.
std::optional<Matrix> translated_partner(const Matrix& x, const DomainBox& box, double gap, bool require_distinct,
                                         std::mt19937_64& rng) {
    Matrix out = x;
    double largest = 0.0;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double lo = box.lower(j) - x.col(j).minCoeff();
        const double hi = box.upper(j) - x.col(j).maxCoeff();
        const double s = uniform(rng, lo, hi);
        out.col(j).array() += s;
        largest = std::max(largest, std::abs(s));
    }
    if (largest < gap || !box.contains(out) || !min_gap_ok(out, gap, require_distinct)) return std::nullopt;
    return out;
}

// x'_i = x_i + delta, x'_j = x_j - delta: every degree-1 power sum is unchanged.
std::optional<Matrix> transfer_partner(const Matrix& x, const DomainBox& box, double gap, bool require_distinct,
                                       std::mt19937_64& rng) {
    const auto n = static_cast<std::size_t>(x.rows());
    if (n < 2) return std::nullopt;
    const auto i = static_cast<Eigen::Index>(rng() % n);
    auto j = static_cast<Eigen::Index>(rng() % (n - 1));
    if (j >= i) ++j;
    Matrix out = x;
    double largest = 0.0;
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const double r = 0.25 * (box.upper(c) - box.lower(c));
        const double delta = uniform(rng, -r, r);
        out(i, c) += delta;
        out(j, c) -= delta;
        largest = std::max(largest, std::abs(delta));
    }
    if (largest < gap || !box.contains(out) || !min_gap_ok(out, gap, require_distinct)) return std::nullopt;
    return out;
}

struct Pair {
    Matrix x;
    Matrix x_prime;
    const char* kind;
};

// Draws a pair of configurations on different orbits. `kind` records how the
// partner was built, which rotates with the trial index.
Pair off_orbit_pair(const FeatureMapSpec& spec, std::size_t trial, const Tolerances& tol, bool require_distinct,
                    bool allow_duplicates, std::mt19937_64& rng) {
    const DomainBox box = spec.domain();
    const std::size_t kind = trial % 3;
    for (int attempt = 0; attempt < kMaxPairAttempts; ++attempt) {
        Matrix x = require_distinct ? sample_distinct_in_box(box, spec.n, tol.distinct_gap, rng)
                                    : sample_in_box(box, spec.n, rng);
        if (allow_duplicates && trial % 4 == 3) force_duplicate(x, rng);
        std::optional<Matrix> partner;
        const char* label = "independent";
        if (kind == 0) {
            partner = require_distinct ? sample_distinct_in_box(box, spec.n, tol.distinct_gap, rng)
                                       : sample_in_box(box, spec.n, rng);
        } else if (kind == 1) {
            partner = translated_partner(x, box, tol.distinct_gap, require_distinct, rng);
            label = "translated";
        } else {
            partner = transfer_partner(x, box, tol.distinct_gap, require_distinct, rng);
            label = "transfer";
        }
        if (!partner) continue;
        if (same_orbit(x, *partner, tol.orbit_match)) continue;
        return Pair{std::move(x), std::move(*partner), label};
    }
    throw Error(ErrorCode::InvalidArgument, "could not draw an off-orbit pair inside the domain");
}

CertificationReport certify_invariance(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                       const Tolerances& tol, Property property) {
    require_trials(trials);
    const bool antisym = property == Property::AntiSymmetry;
    const auto& f = antisym ? map.eta : map.psi;
    CertificationReport r = make_report(property, map, seed, tol.equality);
    store_tolerances(r, tol);
    const DomainBox box = map.spec.domain();
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, antisym ? kSaltAntisymmetry : kSaltPsiSymmetry, t);
        const Matrix x = sample_in_box(box, map.spec.n, rng);
        const Vector y = f(x);
        const double scale = 1.0 + inf_norm(y);
        double worst = 0.0;
        Matrix worst_image = x;
        for (const auto& perm : permutation_plan(map.spec.n, rng)) {
            const Matrix moved = permute_rows(x, perm);
            const double sign = antisym ? static_cast<double>(signature(perm)) : 1.0;
            const double v = inf_norm(f(moved) - sign * y) / scale;
            if (v > worst) {
                worst = v;
                worst_image = moved;
            }
        }
        r.record(worst, worst > tol.equality, x, worst_image, "max permutation mismatch");
    }
    r.trials = trials;
    return r;
}

}  // namespace

FeatureMap FeatureMap::standard(FeatureMapSpec spec) {
    FeatureMap map;
    map.spec = std::move(spec);
    map.eta = [s = map.spec](const Matrix& x) { return eval_eta(s, ParticleConfiguration(x)).values; };
    map.psi = [s = map.spec](const Matrix& x) { return eval_psi(s, ParticleConfiguration(x)); };
    return map;
}

std::string_view to_string(Mutation mutation) noexcept {
    switch (mutation) {
        case Mutation::None: return "none";
        case Mutation::SignFlip: return "sign-flip";
        case Mutation::DroppedFactor: return "dropped-factor";
        case Mutation::DroppedBlock: return "dropped-block";
        case Mutation::DuplicatedPsi: return "duplicated-psi";
    }
    return "unknown";
}

Mutation mutation_from_string(std::string_view name) {
    for (Mutation m : {Mutation::None, Mutation::SignFlip, Mutation::DroppedFactor, Mutation::DroppedBlock,
                       Mutation::DuplicatedPsi}) {
        if (to_string(m) == name) return m;
    }
    throw Error(ErrorCode::ParseError, "unknown mutation '" + std::string(name) + "'");
}

FeatureMap mutate(FeatureMap map, Mutation mutation) {
    const auto p = static_cast<Eigen::Index>(map.spec.p);
    auto eta = map.eta;
    auto psi = map.psi;
    switch (mutation) {
        case Mutation::None:
            break;
        case Mutation::SignFlip:
            map.eta = [eta](const Matrix& x) {
                Vector y = eta(x);
                y(0) = std::abs(y(0));
                return y;
            };
            break;
        case Mutation::DroppedFactor:
            map.eta = [eta, psi, p](const Matrix& x) {
                Vector y = eta(x);
                y.segment(p, p).setConstant(psi(x)(0));
                return y;
            };
            break;
        case Mutation::DroppedBlock:
            map.eta = [eta, p](const Matrix& x) {
                Vector y = eta(x);
                y.tail(y.size() - p).setZero();
                return y;
            };
            break;
        case Mutation::DuplicatedPsi: {
            std::vector<bool> high_degree;
            for (const auto& alpha : map.spec.multi_indices) {
                std::uint32_t degree = 0;
                for (auto a : alpha) degree += a;
                high_degree.push_back(degree >= 2);
            }
            auto collapsed = [psi, high_degree](const Matrix& x) {
                Vector v = psi(x);
                for (std::size_t l = 0; l < high_degree.size(); ++l) {
                    if (high_degree[l]) v(static_cast<Eigen::Index>(l)) = v(0);
                }
                return v;
            };
            map.psi = collapsed;
            map.eta = [eta, collapsed, p](const Matrix& x) {
                return assemble_eta(eta(x).head(p), collapsed(x));
            };
            break;
        }
    }
    return map;
}

CertificationReport certify_antisymmetry(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                         const Tolerances& tol) {
    return certify_invariance(map, trials, seed, tol, Property::AntiSymmetry);
}

CertificationReport certify_psi_symmetry(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                         const Tolerances& tol) {
    return certify_invariance(map, trials, seed, tol, Property::SymmetryPsi);
}

CertificationReport certify_zero_iff_collision(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                               const Tolerances& tol) {
    require_trials(trials);
    CertificationReport r = make_report(Property::ZeroIffCollision, map, seed, tol.zero);
    store_tolerances(r, tol);
    const DomainBox box = map.spec.domain();
    const double pairs = static_cast<double>(map.spec.n * (map.spec.n - 1) / 2);

    // Forward: a forced duplicate pair must give eta = 0. The violation is
    // |eta|_inf / (1 + |x|_inf)^{n(n-1)/2}, compared against tol.zero.
    if (map.spec.n >= 2) {
        for (std::size_t t = 0; t < trials; ++t) {
            auto rng = trial_rng(seed, kSaltCollisionForward, t);
            Matrix x = sample_in_box(box, map.spec.n, rng);
            force_duplicate(x, rng);
            const double scale = std::pow(1.0 + x.cwiseAbs().maxCoeff(), pairs);
            const double v = inf_norm(map.eta(x)) / scale;
            r.record(v, v > tol.zero, x, std::nullopt, "eta nonzero on a collision");
        }
    }

    // Reverse: well-separated particles must give eta != 0.
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, kSaltCollisionReverse, t);
        const Matrix x = sample_distinct_in_box(box, map.spec.n, tol.distinct_gap, rng);
        const double norm = inf_norm(map.eta(x));
        r.track_min("min_norm_distinct", norm);
        r.record(0.0, !(norm > 0.0), x, std::nullopt, "eta vanishes on distinct particles");
    }
    r.trials = map.spec.n >= 2 ? 2 * trials : trials;
    return r;
}

CertificationReport certify_orbit_separation(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                             const Tolerances& tol) {
    require_trials(trials);
    CertificationReport r = make_report(Property::OrbitSeparation, map, seed, tol.equality);
    store_tolerances(r, tol);
    const DomainBox box = map.spec.domain();
    const std::size_t n = map.spec.n;

    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, kSaltOrbitPositive, t);
        const Matrix x = sample_distinct_in_box(box, n, tol.distinct_gap, rng);
        const Matrix moved = permute_rows(x, random_even_permutation(n, rng));
        const Vector y = map.eta(x);
        const double v = inf_norm(map.eta(moved) - y) / (1.0 + inf_norm(y));
        r.record(v, v > tol.equality, x, moved, "even permutation changed eta");
    }

    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, kSaltOrbitNegative, t);
        Pair pair = off_orbit_pair(map.spec, t, tol, /*require_distinct=*/true, /*allow_duplicates=*/false, rng);
        const double gap = relative_gap(map.eta(pair.x), map.eta(pair.x_prime));
        r.track_min("min_separation_gap", gap);
        r.record(0.0, !(gap > tol.separation), pair.x, pair.x_prime,
                 std::string("distinct orbits share features (") + pair.kind + ")");
    }
    r.trials = 2 * trials;
    return r;
}

CertificationReport certify_psi_separation(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                           const Tolerances& tol) {
    require_trials(trials);
    CertificationReport r = make_report(Property::PsiSeparation, map, seed, tol.equality);
    store_tolerances(r, tol);
    const DomainBox box = map.spec.domain();
    const std::size_t n = map.spec.n;

    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, kSaltPsiPositive, t);
        Matrix x = sample_in_box(box, n, rng);
        if (t % 4 == 3) force_duplicate(x, rng);
        const Matrix moved = permute_rows(x, random_permutation(n, rng));
        const Vector v0 = map.psi(x);
        const double v = inf_norm(map.psi(moved) - v0) / (1.0 + inf_norm(v0));
        r.record(v, v > tol.equality, x, moved, "permutation changed psi");
    }

    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, kSaltPsiNegative, t);
        Pair pair = off_orbit_pair(map.spec, t, tol, /*require_distinct=*/false, /*allow_duplicates=*/true, rng);
        const double gap = relative_gap(map.psi(pair.x), map.psi(pair.x_prime));
        r.track_min("min_separation_gap", gap);
        r.record(0.0, !(gap > tol.separation), pair.x, pair.x_prime,
                 std::string("distinct multisets share psi (") + pair.kind + ")");
    }
    r.trials = 2 * trials;
    return r;
}

}  // namespace antisym
