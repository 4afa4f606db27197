#include <doctest.h>

#include <cstdlib>

#include <Eigen/LU>

#include "levilab/catalog.hpp"
#include "levilab/errors.hpp"
#include "levilab/geometry.hpp"
#include "levilab/lattice.hpp"
#include "support.hpp"

using namespace levilab;
using namespace levilab::testing;

namespace {

HermitianExpr ball_rho(int n)
{
    HermitianExpr rho = HermitianExpr::constant(n, -1);
    for (int j = 0; j < n; ++j)
        rho = rho + HermitianExpr::z(n, j) * HermitianExpr::zbar(n, j);
    return rho;
}

DomainSpec unit_ball(int n) { return DomainSpec("ball", ball_rho(n), {Point::Zero(n)}); }

Point unit_vector(int n, int j)
{
    Point p = Point::Zero(n);
    p[j] = 1;
    return p;
}

} // namespace

TEST_CASE("domain construction validates its input")
{
    CHECK_THROWS_AS(DomainSpec("bad", HermitianExpr::z(1, 0), {Point::Zero(1)}), PreconditionError);
    CHECK_THROWS_AS(DomainSpec("outside", ball_rho(2), {make_point({2.0, 0.0})}), PreconditionError);
    CHECK_THROWS_AS(DomainSpec("param", ball_rho(1) + HermitianExpr::param(1, "a", ParamKind::real), {Point::Zero(1)}),
                    PreconditionError);
}

TEST_CASE("sphere has identity Levi form on its complex tangent space")
{
    const DomainSpec ball = unit_ball(3);
    std::mt19937_64 rng(21);
    for (const Point& p : sample_boundary(ball, 50, 1).points) {
        const LeviReport r = levi_restricted(ball, p);
        CHECK(r.levi_matrix.isApprox(Eigen::MatrixXcd::Identity(3, 3), 1e-12));
        REQUIRE(r.restricted_eigenvalues.size() == 2);
        CHECK(r.restricted_eigenvalues[0] == doctest::Approx(1).epsilon(1e-12));
        CHECK(r.restricted_eigenvalues[1] == doctest::Approx(1).epsilon(1e-12));
        CHECK(r.rank == 2);
        CHECK(r.signature.positive == 2);
        CHECK((r.grad.transpose() * r.tangent_basis).norm() <= 1e-12);
    }
    CHECK_THROWS_AS(levi_restricted(ball, make_point({0.5, 0.0, 0.0})), PreconditionError);
}

TEST_CASE("Levi matrices are Hermitian for real defining functions")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const HermitianExpr e = random_polynomial(rng, 3);
        const HermitianExpr rho = e + conjugate(e);
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                const HermitianExpr ljk = wirtinger(wirtinger(rho, j, Wirtinger::holo), k, Wirtinger::anti);
                const HermitianExpr lkj = wirtinger(wirtinger(rho, k, Wirtinger::holo), j, Wirtinger::anti);
                CHECK(equivalent(ljk, conjugate(lkj)));
            }
        }
    }
    const DomainSpec d = circular_quartic(3).domain;
    for (const Point& p : sample_boundary(d, 100, 3).points) {
        const Eigen::MatrixXcd l = d.levi_matrix(p);
        CHECK((l - l.adjoint()).norm() <= 1e-12 * (1 + l.norm()));
    }
}

TEST_CASE("numeric gradient agrees with the compiled Wirtinger gradient")
{
    const DomainSpec d = circular_quartic(3).domain;
    const CompiledExpr<double> f(d.rho());
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Point p = random_point(rng, 3, 0.6);
        const Eigen::VectorXcd g = d.gradient(p);
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(g[j] - finite_wirtinger(f, p, j, Wirtinger::holo)) <= 1e-6 * std::max(1.0, std::abs(g[j])));
    }
}

TEST_CASE("ray exits and boundary distance on the unit ball")
{
    const DomainSpec ball = unit_ball(3);
    for (int j = 0; j < 3; ++j) {
        const auto t = ray_exit_distance(ball, Point::Zero(3), unit_vector(3, j));
        REQUIRE(t.has_value());
        CHECK(*t == doctest::Approx(1).epsilon(1e-9));
    }
    const Point p = make_point({0.5, 0.0, 0.0});
    CHECK(boundary_distance(ball, p) == doctest::Approx(0.5).epsilon(1e-8));

    const DomainSpec half = nonpseudoconvex_unbounded().domain;
    CHECK_FALSE(ray_exit_distance(half, make_point({-1.0, 0.0}), make_point({-1.0, 0.0})).has_value());
    CHECK(ray_exit_distance(half, make_point({-1.0, 0.0}), make_point({1.0, 0.0})).has_value());
}

TEST_CASE("boundary sampling lands on the boundary and ignores the thread count")
{
    const DomainSpec d = circular_quartic(3).domain;
    ::setenv("LEVILAB_THREADS", "1", 1);
    const BoundarySample one = sample_boundary(d, 500, 9);
    ::setenv("LEVILAB_THREADS", "4", 1);
    const BoundarySample four = sample_boundary(d, 500, 9);
    ::unsetenv("LEVILAB_THREADS");
    REQUIRE(one.points.size() == 500);
    REQUIRE(four.points.size() == 500);
    for (std::size_t i = 0; i < one.points.size(); ++i) {
        CHECK(one.points[i] == four.points[i]);
        CHECK(std::abs(d.value(one.points[i])) <= 1e-9);
    }
    const BoundarySample other = sample_boundary(d, 500, 10);
    CHECK_FALSE(other.points[0] == one.points[0]);

    for (const Point& p : sample_interior(d, 200, 4))
        CHECK(d.value(p) < 0);
}

TEST_CASE("stratification of the circular quartic domain")
{
    const CatalogEntry e = circular_quartic(3);
    const StratificationReport s = stratify(e.domain, sample_boundary(e.domain, 2000, 0).points, e.loci);
    CHECK(s.sample_size == 2000);
    CHECK(s.witnesses.empty());
    CHECK(s.degenerate_points.empty());
    CHECK(s.min_eigenvalue >= -1e-9);
    CHECK(s.rank_counts.count(2) == 1);

    // points on the loci themselves have the advertised ranks
    const LeviReport rank0 = levi_restricted(e.domain, make_point({{0.6, 0.8}, 0.0, 0.0}));
    CHECK(rank0.rank == 0);
    const double w = std::pow(1.0 / 12.0, 0.25);
    const Point diag = make_point({std::sqrt(0.5), w, w});
    REQUIRE(std::abs(e.domain.value(diag)) <= 1e-12);
    CHECK(levi_restricted(e.domain, diag).rank == 1);

    // without loci the rank-deficient samples near them become witnesses
    const std::vector<Point> on_loci{make_point({{0.6, 0.8}, 0.0, 0.0}), diag};
    CHECK(stratify(e.domain, on_loci, {}).witnesses.size() == 2);
    CHECK(stratify(e.domain, on_loci, e.loci).witnesses.empty());
}

TEST_CASE("pseudoconvexity and gradient scans")
{
    const CatalogEntry e = circular_quartic(3);
    const auto pts = sample_boundary(e.domain, 1000, 2).points;
    CHECK(pseudoconvexity_scan(e.domain, pts).min_eigenvalue >= -1e-9);
    CHECK(gradient_scan(e.domain, pts).min_norm > 0.5);

    const CatalogEntry np = nonpseudoconvex_bounded();
    const auto npts = sample_boundary(np.domain, 1000, 2).points;
    CHECK(pseudoconvexity_scan(np.domain, npts).min_eigenvalue < -0.1);
    const GradientScan g = gradient_scan(np.domain, npts);
    CHECK(g.min_norm > 1e-6);
}

TEST_CASE("canonical tangent Levi value on the unbounded model")
{
    const DomainSpec d = nonpseudoconvex_unbounded().domain;
    CHECK(canonical_tangent_levi(d, make_point({-0.75, 1.0})) == doctest::Approx(-1).epsilon(1e-12));
    CHECK_THROWS_AS(canonical_tangent_levi(circular_quartic(3).domain, Point::Zero(3)), PreconditionError);
}

TEST_CASE("torus invariance lattice")
{
    const DomainSpec d = circular_quartic(3).domain;
    const InvarianceLattice lat = torus_invariance_lattice(d);
    IntMatrix expected(2, 3);
    expected << 1, 0, 0, 0, 1, 1;
    CHECK(lat.rank == 2);
    CHECK(lat.basis == expected);
    CHECK(lat.circular);
    CHECK_FALSE(lat.reinhardt);

    // dropping the cross term leaves a Reinhardt domain
    const int n = 3;
    HermitianExpr mutated = HermitianExpr::constant(n, -1) + HermitianExpr::z(n, 0) * HermitianExpr::zbar(n, 0);
    for (int j = 1; j < 3; ++j)
        mutated = mutated + pow(HermitianExpr::z(n, j) * HermitianExpr::zbar(n, j), 2);
    const InvarianceLattice m = torus_invariance_lattice(mutated);
    CHECK(m.rank == 3);
    CHECK(m.reinhardt);
    CHECK(m.witness_violations.empty());

    CHECK(torus_invariance_lattice(nonpseudoconvex_unbounded().domain).rank == 0);
    CHECK_THROWS_AS(torus_invariance_lattice(nonpseudoconvex_phi()), PreconditionError);
}

TEST_CASE("integer kernel is a saturated kernel basis")
{
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + trial % 3;
        const int cols = 2 + trial % 4;
        IntMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                a(r, c) = entry(rng);
        const IntMatrix k = integer_kernel(a);
        const Eigen::MatrixXd ad = a.cast<double>();
        const long rank_a = Eigen::FullPivLU<Eigen::MatrixXd>(ad).rank();
        CHECK(k.rows() == cols - rank_a);
        if (k.rows() == 0)
            continue;
        CHECK((a * k.transpose()).isZero());
        CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(k.cast<double>()).rank() == k.rows());
        // Hermite form is idempotent
        CHECK(hermite_normal_form(k) == k);
    }
}

TEST_CASE("boundedness certificate and sampling")
{
    const CatalogEntry e = circular_quartic(3);
    const BoundednessReport r = boundedness_certificate(e.domain, *e.certificate);
    CHECK(r.identity_holds);
    CHECK(r.bounded);
    REQUIRE(r.box.size() == 3);
    for (const auto& b : r.box)
        CHECK((b && *b <= 1.0 + 1e-12));

    BoundednessCertificate wrong = *e.certificate;
    wrong.constant = 2;
    CHECK_FALSE(boundedness_certificate(e.domain, wrong).identity_holds);

    const SampledBoundedness s = boundedness_sampling(e.domain, 500, 1);
    CHECK(s.unbounded_directions.empty());
    CHECK(s.max_norm <= 1.5);
    CHECK_FALSE(boundedness_sampling(nonpseudoconvex_unbounded().domain, 100, 1).unbounded_directions.empty());
}
