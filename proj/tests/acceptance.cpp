// Acceptance run: one line per criterion, nonzero exit when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "levilab/catalog.hpp"
#include "levilab/suites.hpp"
#include "support.hpp"

using namespace levilab;
using namespace levilab::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;
    std::function<Outcome()> run;
};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome ball_shift_identity()
{
    const CatalogEntry e = circular_quartic(3);
    const MapFamily& f = e.family("ball-shift");
    MultiplierOptions opts;
    opts.sweep_parameters = 0;
    const MultiplierCheck m = multiplier_identity_check(f.map, e.domain, e.domain.rho(), *f.multiplier, f.battery, opts);
    bool all_exact = m.outcomes.size() == 5;
    std::size_t residual = 0;
    for (const auto& o : m.outcomes) {
        all_exact = all_exact && o.exact_checked && o.identity_holds;
        residual += o.residual_terms;
    }
    return {m.pass && all_exact, "5 specializations, residual terms " + std::to_string(residual)};
}

Outcome gradient_identity()
{
    const HermitianExpr r = gradient_identity_residual(nonpseudoconvex_phi());
    const GradientIdentityReport g = gradient_identity_check(nonpseudoconvex_bounded().domain, 0);
    return {g.pass && g.normalized_terms == 0 && is_identically_zero(r),
            "normalized residual terms " + std::to_string(g.normalized_terms)};
}

Outcome canonical_levi()
{
    const DomainSpec d = nonpseudoconvex_unbounded().domain;
    const Point p = make_point({-0.75, 1.0});
    const double v = canonical_tangent_levi(d, p);
    return {std::abs(d.value(p)) == 0.0 && std::abs(v + 1) <= 1e-9, "value " + fmt(v)};
}

Outcome stratification()
{
    const CatalogEntry e = circular_quartic(3);
    std::size_t witnesses = 0;
    double min_eig = 1e300;
    std::size_t evaluated = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const BoundarySample b = sample_boundary(e.domain, 10000, seed);
        const StratificationReport s = stratify(e.domain, b.points, e.loci);
        witnesses += s.witnesses.size() + s.degenerate_points.size();
        min_eig = std::min(min_eig, s.min_eigenvalue);
        evaluated += s.sample_size;
    }
    return {evaluated == 50000 && witnesses == 0 && min_eig >= -1e-9,
            std::to_string(evaluated) + " samples, witnesses " + std::to_string(witnesses) + ", min eigenvalue " +
                fmt(min_eig)};
}

Outcome dimension_exclusion()
{
    const std::set<int> dims = achievable_dims(3);
    const bool all_odd = std::all_of(dims.begin(), dims.end(), [](int d) { return d % 2 == 1; });
    std::ostringstream os;
    for (int d : dims)
        os << d << ' ';
    return {dims == std::set<int>{3, 5, 7, 9, 11, 15} && all_odd && dims.count(4) == 0, "achievable " + os.str()};
}

Outcome lattice()
{
    const InvarianceLattice lat = torus_invariance_lattice(circular_quartic(3).domain);
    IntMatrix expected(2, 3);
    expected << 1, 0, 0, 0, 1, 1;
    const ExponentPair witness{{0, 0, 2}, {0, 2, 0}};
    const bool found =
        std::find(lat.witness_violations.begin(), lat.witness_violations.end(), witness) != lat.witness_violations.end();
    return {lat.rank == 2 && lat.basis == expected && found,
            "rank " + std::to_string(lat.rank) + (found ? ", witness z3^2 conj(z2)^2 reported" : ", witness missing")};
}

Outcome orbit_decay()
{
    const CatalogEntry e = circular_quartic(3);
    std::vector<ParamValues> seq;
    for (int k = 1; k <= 6; ++k)
        seq.push_back({{"a", 1 - std::pow(10.0, -k)}});
    const OrbitReport o = orbit(e.family("ball-shift").map, e.domain, Point::Zero(3), seq);
    return {o.strictly_decreasing && o.distances.back() < 1e-5, "final distance " + fmt(o.distances.back())};
}

Outcome cayley_and_retraction()
{
    const CatalogEntry src = nonpseudoconvex_bounded();
    const CatalogEntry dst = nonpseudoconvex_unbounded();
    SignScanOptions so;
    so.interior_samples = 1000;
    so.boundary_samples = 1000;
    so.boundary_tolerance = 1e-6;
    const SignPreservation s = sign_preservation_scan(CompiledMap(src.family("cayley").map), src.domain, dst.domain, so);
    const RetractionReport r = retraction_check(src.domain, {0.0, 0.25, 0.5, 0.75, 1.0}, 1000, 0);
    return {s.pass && s.interior_checked == 1000 && s.boundary_checked == 1000 && r.pass,
            "max interior " + fmt(s.max_interior_value) + ", max |boundary| " + fmt(s.max_boundary_abs) +
                ", retraction " + (r.pass ? "ok" : "failed")};
}

Outcome cauchy()
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::complex<double>> c(8);
        for (auto& x : c)
            x = {u(rng), u(rng)};
        auto f = [&](std::complex<double>, std::complex<double> z) {
            std::complex<double> v = 0;
            for (std::size_t k = c.size(); k-- > 0;)
                v = v * z + c[k];
            return v;
        };
        const std::complex<double> rho(0.5 * u(rng), 0.5 * u(rng));
        std::complex<double> exact = 0;
        std::complex<double> zk = 1;
        for (std::size_t k = 1; k < c.size(); ++k) {
            exact += static_cast<double>(k) * c[k] * zk;
            zk *= rho;
        }
        worst = std::max(worst, std::abs(cauchy_derivative_numeric(f, std::complex<double>(0), rho, 1.0) - exact));
    }
    std::vector<std::complex<double>> mus;
    for (int k = 1; k <= 8; ++k)
        mus.push_back(1 - std::pow(10.0, -k));
    const DecayTable t = decay_scan(1, 1, 1, mus, 0.5);
    return {worst <= 1e-10 && t.strictly_decreasing && t.final_ratio < 1e-6,
            "quadrature error " + fmt(worst) + ", decay ratio " + fmt(t.final_ratio)};
}

Outcome algebra_properties()
{
    std::mt19937_64 rng(10);
    double worst = 0;
    bool involution = true;
    bool hermitian = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 2;
        const HermitianExpr e = random_expression(rng, n);
        const Point p = random_point(rng, n, 0.8);
        const CompiledExpr<double> f(e);
        for (int j = 0; j < n; ++j) {
            for (Wirtinger kind : {Wirtinger::holo, Wirtinger::anti}) {
                const std::complex<double> exact = evaluate(wirtinger(e, j, kind), p);
                const std::complex<double> approx = finite_wirtinger(f, p, j, kind);
                worst = std::max(worst, std::abs(exact - approx) / std::max(1.0, std::abs(exact)));
            }
        }
        involution = involution && conjugate(conjugate(e)) == e;
        const HermitianExpr rho = e + conjugate(e);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                hermitian = hermitian && equivalent(wirtinger(wirtinger(rho, j, Wirtinger::holo), k, Wirtinger::anti),
                                                    conjugate(wirtinger(wirtinger(rho, k, Wirtinger::holo), j, Wirtinger::anti)));
    }
    SuiteOptions opts;
    opts.samples = 2000;
    const bool deterministic = circular_quartic_suite(opts).to_json().dump() == circular_quartic_suite(opts).to_json().dump() &&
                               nonpseudoconvex_suite(opts).to_json().dump() == nonpseudoconvex_suite(opts).to_json().dump();
    return {worst <= 1e-6 && involution && hermitian && deterministic,
            "max relative Wirtinger error " + fmt(worst) + (involution ? "" : ", involution broken") +
                (hermitian ? "" : ", non-Hermitian Levi matrix") + (deterministic ? "" : ", reports differ")};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "exact ball-shift multiplier identity at the parameter battery", 5, ball_shift_identity},
        {2, "gradient identity residual normalizes to zero", 5, gradient_identity},
        {3, "canonical-tangent Levi value -1 at (-3/4, 1)", 1, canonical_levi},
        {4, "stratification, 10^4 samples x seeds 0-4", 60, stratification},
        {5, "achievable dimensions for n = 3 exclude 4", 1, dimension_exclusion},
        {6, "torus lattice rank 2 and non-Reinhardt witness", 1, lattice},
        {7, "orbit of 0 approaches the boundary", 10, orbit_decay},
        {8, "Cayley sign preservation and retraction", 30, cayley_and_retraction},
        {9, "Cauchy quadrature and bound decay", 5, cauchy},
        {10, "algebra property suite and report determinism", 60, algebra_properties},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.time_limit;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("criterion %2d %s | %s | %s | %.2f s (limit %.0f s)\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                    o.detail.c_str(), seconds, c.time_limit);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
