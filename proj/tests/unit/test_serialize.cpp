// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <antisym/error.hpp>
#include <antisym/random.hpp>
#include <antisym/serialize.hpp>

#include <sstream>

using namespace antisym;

namespace {

ErrorCode parse_error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("format_double keeps 17 significant digits", "[serialize]") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("projection sets round-trip", "[serialize]") {
    const auto w = build_projection_set(3, 2, ProjectionMode::Improved);
    CHECK(projection_set_from_json(to_json(w)) == w);
    CHECK(parse_error_code([] { (void)projection_set_from_json("{"); }) == ErrorCode::ParseError);
}

TEST_CASE("specs round-trip", "[serialize]") {
    for (auto mode : {ProjectionMode::Paper, ProjectionMode::Improved}) {
        const auto spec = FeatureMapSpec::build(3, 2, mode);
        const auto back = spec_from_json(to_json(spec));
        CHECK(back == spec);
        CHECK(back.id() == spec.id());
    }
    const auto boxed = FeatureMapSpec::build(2, 2, ProjectionMode::Paper, DomainBox{Vector{{0.0, 0.0}}, Vector{{2.0, 1.0}}});
    CHECK(spec_from_json(to_json(boxed)) == boxed);
}

TEST_CASE("tampered spec JSON is rejected", "[serialize]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    std::string text = to_json(spec, -1);
    const auto pos = text.find("\"m\":3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"m\":4");
    CHECK(parse_error_code([&] { (void)spec_from_json(text); }) == ErrorCode::ParseError);
    CHECK(parse_error_code([] { (void)spec_from_json("[]"); }) == ErrorCode::ParseError);
}

TEST_CASE("models round-trip bit for bit", "[serialize]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    const OddModel g = random_odd_model(spec, 20, 0.7, 1.0, 5);
    const OddModel back = model_from_json(to_json(g));
    CHECK(back.frequencies == g.frequencies);
    CHECK(back.weights == g.weights);
    CHECK(back.phases == g.phases);
    CHECK(back.bandwidth == g.bandwidth);
    CHECK(back.seed == g.seed);
    CHECK(back.spec == g.spec);
    const Matrix x{{0.3}, {-0.2}};
    CHECK(back.predict_configuration(x) == g.predict_configuration(x));
    CHECK(to_json(back) == to_json(g));
}

TEST_CASE("feature CSV output", "[serialize]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    const std::vector<ParticleConfiguration> xs{Matrix{{1.0}, {0.5}}, Matrix{{0.0}, {0.0}}};
    const auto ys = eval_eta_batch(spec, xs);
    std::ostringstream os;
    write_features_csv(os, spec, xs, ys);
    CHECK(os.str() == "x1_1,x2_1,eta1,eta2,eta3\n1,0.5,0.5,0.75,0.625\n0,0,0,0,0\n");
}

TEST_CASE("configuration CSV input", "[serialize]") {
    std::istringstream in("x1_1,x1_2,x2_1,x2_2\n# comment\n\n0.1,0.2,0.3,0.4\r\n-1,1,0.5,0\n");
    const auto xs = read_configurations_csv(in, 2, 2);
    REQUIRE(xs.size() == 2);
    CHECK(xs[0].coords() == Matrix{{0.1, 0.2}, {0.3, 0.4}});
    CHECK(xs[1].coords() == Matrix{{-1.0, 1.0}, {0.5, 0.0}});

    std::istringstream short_row("0.1,0.2,0.3\n");
    CHECK(parse_error_code([&] { (void)read_configurations_csv(short_row, 2, 2); }) == ErrorCode::ParseError);
    std::istringstream junk("0.1,0.2\n0.3,abc\n");
    CHECK(parse_error_code([&] { (void)read_configurations_csv(junk, 2, 1); }) == ErrorCode::ParseError);
}

TEST_CASE("features CSV round-trips inputs exactly", "[serialize][property]") {
    const auto spec = FeatureMapSpec::build(3, 2);
    std::vector<ParticleConfiguration> xs;
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto rng = trial_rng(3, 0, t);
        xs.emplace_back(sample_in_box(DomainBox::symmetric_unit(2), 3, rng));
    }
    std::ostringstream os;
    for (const auto& x : xs) {
        const Vector flat = flatten(x.coords());
        for (Eigen::Index k = 0; k < flat.size(); ++k) os << (k ? "," : "") << format_double(flat(k));
        os << '\n';
    }
    std::istringstream in(os.str());
    const auto back = read_configurations_csv(in, 3, 2);
    REQUIRE(back.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(back[i].coords() == xs[i].coords());
}

TEST_CASE("Jacobian and curve encodings", "[serialize]") {
    const auto r = jacobian(FeatureMapSpec::build(2, 1), Matrix{{1.0}, {1.0}}, JacobianMethod::ExactPolynomial);
    std::ostringstream csv;
    write_jacobian_csv(csv, r);
    CHECK(csv.str() == "1,-1\n2,-2\n2,-2\n");
    const std::string js = to_json(r, -1);
    CHECK(js.find("\"numerical_rank\":1") != std::string::npos);
    CHECK(js.find("\"step\":null") != std::string::npos);

    const std::vector<CurvePoint> curve{{0.5, 1.0, 1.0, 0.0}};
    std::ostringstream cs;
    write_curve_csv(cs, curve);
    CHECK(cs.str() == "eps,value,closed_form,rel_error\n0.5,1,1,0\n");
}
