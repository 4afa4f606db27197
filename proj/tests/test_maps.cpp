#include <doctest.h>

#include "levilab/catalog.hpp"
#include "levilab/errors.hpp"
#include "levilab/io.hpp"
#include "levilab/maps.hpp"
#include "support.hpp"

using namespace levilab;
using namespace levilab::testing;

namespace {

/// Monomials whose degree in z_2, z_3 is even, so pullback by the ball shift
/// keeps half-integer radical powers.
HermitianExpr random_even_polynomial(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(0, 2);
    TermMap out;
    for (int t = 0; t < 3; ++t) {
        Monomial m{{deg(rng), deg(rng), deg(rng)}, {deg(rng), deg(rng), deg(rng)}, {}, {}};
        if ((m.alpha[1] + m.alpha[2] + m.beta[1] + m.beta[2]) % 2 != 0)
            ++m.beta[2];
        out[m] += random_coefficient(rng);
    }
    return {3, std::move(out), {}};
}

/// Closed-form ball shift for the oracle comparison.
Point ball_shift_closed_form(std::complex<double> a, const Point& z)
{
    const std::complex<double> b = 1.0 - std::conj(a) * z[0];
    const double c = 1 - std::norm(a);
    return make_point({(z[0] - a) / b, z[1] * std::sqrt(std::sqrt(c)) / std::sqrt(b), z[2] * std::sqrt(std::sqrt(c)) / std::sqrt(b)});
}

} // namespace

TEST_CASE("radical maps reject antiholomorphic components")
{
    CHECK_THROWS_AS(RadicalMap::from_terms("bad", 1, {{MapTerm{HermitianExpr::zbar(1, 0), {}}}}), PreconditionError);
    const RadicalMap id = RadicalMap::identity(2);
    CHECK(id.name() == "id");
    CHECK_FALSE(id.has_radicals());
    const HermitianExpr e = HermitianExpr::z(2, 0) * HermitianExpr::zbar(2, 1);
    CHECK(pullback(e, id) == e);
}

TEST_CASE("compiled ball shift matches the closed form")
{
    const RadicalMap f = ball_shift_family(3);
    CHECK(f.has_radicals());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Point a = random_point(rng, 1, 0.95);
        const Point z = random_point(rng, 3, 0.5);
        const Point got = CompiledMap(f, {{"a", a[0]}})(z);
        CHECK((got - ball_shift_closed_form(a[0], z)).norm() <= 1e-12);
    }
    CHECK_THROWS_AS(CompiledMap{f}, UnassignedParameter);
}

TEST_CASE("ball shift multiplier identity holds exactly and fails when mutated")
{
    const CatalogEntry e = circular_quartic(3);
    const MapFamily& f = e.family("ball-shift");
    const MultiplierCheck ok = multiplier_identity_check(f.map, e.domain, e.domain.rho(), *f.multiplier, f.battery);
    CHECK(ok.pass);
    REQUIRE(ok.outcomes.size() == 5);
    for (const auto& o : ok.outcomes) {
        CHECK(o.exact_checked);
        CHECK(o.identity_holds);
        CHECK(o.residual_terms == 0);
        CHECK(o.multiplier_positive);
    }
    CHECK(ok.sweep_max_residual <= 1e-9);

    const HermitianExpr wrong = scale(*f.multiplier, rational(1, 2));
    const MultiplierCheck bad = multiplier_identity_check(f.map, e.domain, e.domain.rho(), wrong, f.battery);
    CHECK_FALSE(bad.pass);
    CHECK(bad.outcomes.at(0).residual_terms > 0);

    std::vector<ExactParams> outside{{{"a", rational(3, 2)}}};
    CHECK_THROWS_AS(multiplier_identity_check(f.map, e.domain, e.domain.rho(), *f.multiplier, outside),
                    PreconditionError);
}

TEST_CASE("ball shift works in higher dimension")
{
    const CatalogEntry e = circular_quartic(4);
    const MapFamily& f = e.family("ball-shift");
    MultiplierOptions opts;
    opts.sweep_parameters = 10;
    CHECK(multiplier_identity_check(f.map, e.domain, e.domain.rho(), *f.multiplier, f.battery, opts).pass);
    for (const auto& m : e.linear_automorphisms)
        CHECK(equivalent(substitute_linear(e.domain.rho(), m), e.domain.rho()));
}

TEST_CASE("pullback respects products")
{
    const RadicalMap f = specialize(ball_shift_family(3), {{"a", gaussian(1, 3, 1, 4)}});
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const HermitianExpr e1 = random_even_polynomial(rng);
        const HermitianExpr e2 = random_even_polynomial(rng);
        CHECK(equivalent(pullback(e1 * e2, f), pullback(e1, f) * pullback(e2, f)));
        CHECK(equivalent(pullback(e1 + e2, f), pullback(e1, f) + pullback(e2, f)));
    }
    // odd total degree in z_2 leaves a quarter power
    CHECK_THROWS_AS(pullback(HermitianExpr::z(3, 1), f), PairingError);
}

TEST_CASE("pullback agrees with numeric composition")
{
    const RadicalMap f = specialize(ball_shift_family(3), {{"a", rational(1, 2)}});
    const CompiledMap fc(f);
    const HermitianExpr rho = circular_quartic_rho(3);
    const HermitianExpr pulled = pullback(rho, f);
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const Point z = random_point(rng, 3, 0.6);
        CHECK(std::abs(evaluate(pulled, z) - evaluate(rho, fc(z))) <= 1e-10);
    }
}

TEST_CASE("composed ball shifts preserve the domain")
{
    const CatalogEntry e = circular_quartic(3);
    const RadicalMap& f = e.family("ball-shift").map;
    const auto g = compose_numeric(CompiledMap(f, {{"a", 0.6}}), CompiledMap(f, {{"a", -0.3}}));
    for (const Point& p : sample_interior(e.domain, 300, 5))
        CHECK(e.domain.value(g(p)) < 0);
    for (const Point& p : sample_boundary(e.domain, 300, 5).points)
        CHECK(std::abs(e.domain.value(g(p))) <= 1e-9);
}

TEST_CASE("exact and numeric layers agree on sign preservation")
{
    const CatalogEntry e = circular_quartic(3);
    const MapFamily& f = e.family("ball-shift");
    SignScanOptions so;
    so.interior_samples = 300;
    so.boundary_samples = 300;
    for (const auto& params : f.battery) {
        const SignPreservation s = sign_preservation_scan(CompiledMap(f.map, to_numeric(params)), e.domain, e.domain, so);
        CHECK(s.pass);
        CHECK(s.max_boundary_abs <= 1e-9);
    }
}

TEST_CASE("Cayley realization")
{
    const CatalogEntry src = nonpseudoconvex_bounded();
    const CatalogEntry dst = nonpseudoconvex_unbounded();
    const MapFamily& f = src.family("cayley");
    CHECK(f.target == dst.domain.name());
    MultiplierOptions opts;
    opts.sweep_parameters = 1;
    const MultiplierCheck m = multiplier_identity_check(f.map, src.domain, dst.domain.rho(), *f.multiplier, f.battery, opts);
    CHECK(m.pass);

    const CompiledMap fc(f.map);
    for (const Point& p : sample_interior(src.domain, 200, 6)) {
        const Point w = fc(p);
        CHECK(dst.domain.value(w) < 0);
        CHECK((cayley_inverse(w) - p).norm() <= 1e-9);
    }
    SignScanOptions so;
    so.interior_samples = 300;
    so.boundary_samples = 300;
    CHECK(sign_preservation_scan(fc, src.domain, dst.domain, so).pass);
}

TEST_CASE("real shift keeps the bounded domain")
{
    const CatalogEntry e = nonpseudoconvex_bounded();
    const MapFamily& f = e.family("real-shift");
    SignScanOptions so;
    so.interior_samples = 300;
    so.boundary_samples = 300;
    for (double a : {0.5, -0.4, 0.9})
        CHECK(sign_preservation_scan(CompiledMap(f.map, {{"a", a}}), e.domain, e.domain, so).pass);
    CHECK_THROWS_AS(CompiledMap(f.map, {{"a", std::complex<double>(0.1, 0.2)}}), PreconditionError);

    MultiplierOptions mo;
    mo.exact = false;
    mo.sweep_parameters = 20;
    CHECK(multiplier_identity_check(f.map, e.domain, e.domain.rho(), *f.multiplier, f.battery, mo).pass);
}

TEST_CASE("retraction of the bounded domain onto the disc")
{
    const DomainSpec d = nonpseudoconvex_bounded().domain;
    const RetractionReport r = retraction_check(d, {0.0, 0.25, 0.5, 0.75, 1.0}, 500, 7);
    CHECK(r.pass);
    CHECK(r.collapses_to_disc);
    CHECK(r.max_value < 0);
}

TEST_CASE("gradient identity holds exactly and detects mutations")
{
    const HermitianExpr phi = nonpseudoconvex_phi();
    CHECK(phi.size() == 7);
    CHECK(is_real(phi));
    CHECK(is_identically_zero(gradient_identity_residual(phi)));

    const GradientIdentityReport r = gradient_identity_check(nonpseudoconvex_bounded().domain, 100, 3);
    CHECK(r.pass);
    CHECK(r.normalized_terms == 0);
    CHECK(r.numeric_pass);

    const int n = 2;
    const HermitianExpr mutated = phi + HermitianExpr::z(n, 1) * HermitianExpr::zbar(n, 1);
    CHECK_FALSE(is_identically_zero(gradient_identity_residual(mutated)));
}

TEST_CASE("orbits approach the boundary")
{
    const CatalogEntry e = circular_quartic(3);
    std::vector<ParamValues> seq;
    for (int k = 1; k <= 6; ++k)
        seq.push_back({{"a", 1 - std::pow(10.0, -k)}});
    const OrbitReport o = orbit(e.family("ball-shift").map, e.domain, Point::Zero(3), seq);
    CHECK(o.strictly_decreasing);
    REQUIRE(o.distances.size() == 6);
    for (int k = 1; k <= 6; ++k)
        CHECK(o.distances[static_cast<std::size_t>(k - 1)] == doctest::Approx(std::pow(10.0, -k)).epsilon(1e-4));
    CHECK((o.limit_estimate - make_point({-1.0, 0.0, 0.0})).norm() <= 1e-5);
}

TEST_CASE("parameter inventories")
{
    CHECK(disc_inventory().dimension == 3);
    const ParameterInventory three = circular_quartic_inventory(3);
    CHECK(three.dimension == 4);
    CHECK(three.components == 4);
    CHECK(circular_quartic_inventory(4).dimension == 9);
    CHECK(circular_quartic_inventory(5).dimension == 16);
    CHECK_THROWS_AS(circular_quartic_inventory(2), PreconditionError);
}

TEST_CASE("maps survive a JSON round trip")
{
    for (const RadicalMap& f : {ball_shift_family(3), real_shift_family(), cayley_realization()}) {
        const RadicalMap g = map_from_json(Json::parse(to_json(f).dump()));
        CHECK(to_json(g) == to_json(f));
        const ParamValues params = f.params().empty() ? ParamValues{} : ParamValues{{"a", 0.25}};
        const Point z = make_point({{-0.2, 0.1}, {0.1, 0.05}, 0.0}).head(f.n_in());
        CHECK((CompiledMap(f, params)(z) - CompiledMap(g, params)(z)).norm() <= 1e-15);
    }
}
