#include <doctest.h>

#include "levilab/errors.hpp"
#include "levilab/hermitian_expr.hpp"
#include "support.hpp"

using namespace levilab;
using namespace levilab::testing;

namespace {

std::complex<double> eval(const HermitianExpr& e, const Point& p) { return evaluate(e, p); }

} // namespace

TEST_CASE("gaussian rationals form a field")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational a = random_coefficient(rng);
        const GaussianRational b = random_coefficient(rng);
        const GaussianRational c = random_coefficient(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(parse_gaussian(a.to_string()) == a);
    }
    CHECK(pow(gaussian(0, 1, 1, 1), 4) == GaussianRational(1));
    CHECK(pow(rational(2), -3) == rational(1, 8));
    CHECK(parse_gaussian("1/2-3/4i") == gaussian(1, 2, -3, 4));
    CHECK_THROWS_AS(parse_gaussian("1/0"), PreconditionError);
}

TEST_CASE("normalization combines like terms and drops zeros")
{
    const int n = 2;
    const HermitianExpr z1 = HermitianExpr::z(n, 0);
    const HermitianExpr w1 = HermitianExpr::zbar(n, 0);
    CHECK((z1 * w1 - w1 * z1).is_zero());
    CHECK((z1 + z1).size() == 1);
    CHECK(pow(z1 + w1, 2).size() == 3);
    CHECK(pow(z1 + w1, 2).homogeneous_degree() == 2);
    CHECK((z1 + HermitianExpr::constant(n, 1)).homogeneous_degree() == -1);
}

TEST_CASE("conjugation is an involution and a ring map")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const HermitianExpr a = random_expression(rng, 2);
        const HermitianExpr b = random_expression(rng, 2);
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(equivalent(conjugate(a * b), conjugate(a) * conjugate(b)));
        CHECK(is_real(a + conjugate(a)));
        const Point p = random_point(rng, 2);
        CHECK(std::abs(eval(conjugate(a), p) - std::conj(eval(a, p))) <= 1e-9 * (1 + std::abs(eval(a, p))));
    }
    CHECK_FALSE(is_real(HermitianExpr::constant(1, GaussianRational::i()) * HermitianExpr::z(1, 0) *
                        HermitianExpr::zbar(1, 0)));
}

TEST_CASE("ring axioms hold on random expressions")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const HermitianExpr a = random_expression(rng, 2);
        const HermitianExpr b = random_expression(rng, 2);
        const HermitianExpr c = random_expression(rng, 2);
        CHECK(equivalent(a * b, b * a));
        CHECK(equivalent((a + b) + c, a + (b + c)));
        CHECK(equivalent(a * (b + c), a * b + a * c));
        CHECK(equivalent((a * b) * c, a * (b * c)));
        CHECK(is_identically_zero(a - a));
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const HermitianExpr a = random_expression(rng, 3);
        const HermitianExpr b = random_expression(rng, 3);
        const Point p = random_point(rng, 3);
        const auto va = eval(a, p);
        const auto vb = eval(b, p);
        const double scale = 1 + std::abs(va) * std::abs(vb) + std::abs(va) + std::abs(vb);
        CHECK(std::abs(eval(a * b, p) - va * vb) <= 1e-10 * scale);
        CHECK(std::abs(eval(a + b, p) - (va + vb)) <= 1e-10 * scale);
    }
}

TEST_CASE("Wirtinger derivatives match central differences")
{
    std::mt19937_64 rng(15);
    int compared = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 2;
        const HermitianExpr e = random_expression(rng, n);
        const Point p = random_point(rng, n, 0.8);
        const CompiledExpr<double> f(e);
        for (int j = 0; j < n; ++j) {
            for (Wirtinger kind : {Wirtinger::holo, Wirtinger::anti}) {
                const std::complex<double> exact = evaluate(wirtinger(e, j, kind), p);
                const std::complex<double> approx = finite_wirtinger(f, p, j, kind);
                CHECK(std::abs(exact - approx) <= 1e-6 * std::max(1.0, std::abs(exact)));
                ++compared;
            }
        }
    }
    CHECK(compared >= 400);
}

TEST_CASE("Wirtinger derivative of |b| is b-bar^(1/2) / (2 b^(1/2))")
{
    const int n = 1;
    const BaseFactor b = shifted_one(n);
    const HermitianExpr d = wirtinger(HermitianExpr::radical(n, b, 1, 1), 0, Wirtinger::holo);
    const HermitianExpr expected = rational(1, 2) * HermitianExpr::radical(n, b, -1, 1);
    CHECK(equivalent(d, expected));
}

TEST_CASE("exact evaluation agrees with floating point")
{
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long> num(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const HermitianExpr e = random_polynomial(rng, 2);
        const std::vector<GaussianRational> q{gaussian(num(rng), 4, num(rng), 4), gaussian(num(rng), 4, num(rng), 4)};
        const Point p = make_point({q[0].to_complex(), q[1].to_complex()});
        CHECK(std::abs(evaluate_exact(e, q).to_complex() - eval(e, p)) <= 1e-12);
    }
}

TEST_CASE("clearing denominators returns an equivalent polynomial")
{
    const int n = 2;
    const BaseFactor b = shifted_one(n);
    const HermitianExpr e = HermitianExpr::z(n, 1) * HermitianExpr::radical(n, b, -2, -2) + HermitianExpr::zbar(n, 0);
    const Cleared c = clear_denominators(e);
    CHECK_FALSE(c.numerator.has_radicals());
    CHECK(equivalent(e * c.multiplier, c.numerator));
    CHECK_THROWS_AS(clear_denominators(HermitianExpr::radical(n, b, 1, 0)), PairingError);
}

TEST_CASE("quarter powers are rejected in expressions")
{
    const int n = 1;
    const BaseFactor b = shifted_one(n);
    Monomial m{{0}, {0}, {}, {{b.id, RadicalExponent{1, 0}}}};
    Registry reg;
    reg.bases[b.id] = b;
    CHECK_THROWS_AS(HermitianExpr(n, TermMap{{m, GaussianRational(1)}}, reg), PairingError);
}

TEST_CASE("specialization matches numeric parameter binding")
{
    const int n = 2;
    const HermitianExpr a = HermitianExpr::param(n, "a", ParamKind::complex);
    const HermitianExpr abar = HermitianExpr::param(n, "a", ParamKind::complex, true);
    const HermitianExpr u = HermitianExpr::param(n, "u", ParamKind::unimodular);
    const HermitianExpr e = a * HermitianExpr::z(n, 0) + abar * HermitianExpr::zbar(n, 1) + u * conjugate(u) +
                            u * HermitianExpr::z(n, 1);
    const GaussianRational av = gaussian(1, 3, -1, 2);
    const GaussianRational uv = gaussian(3, 5, 4, 5);
    const HermitianExpr s = specialize(e, {{"a", av}, {"u", uv}});
    CHECK_FALSE(s.has_params());
    const Point p = make_point({{0.2, -0.1}, {0.4, 0.3}});
    CHECK(std::abs(eval(s, p) - evaluate(e, p, {{"a", av.to_complex()}, {"u", uv.to_complex()}})) <= 1e-12);
    CHECK_THROWS_AS(specialize(e, {{"a", av}, {"u", rational(1, 2)}}), PreconditionError);
}

TEST_CASE("linear substitution composes pointwise")
{
    std::mt19937_64 rng(17);
    Eigen::MatrixXcd m(2, 2);
    m << std::complex<double>(0.5, 0.25), 1.0, std::complex<double>(0, -1), 0.75;
    const LinearSubstitution sub = LinearSubstitution::from_complex(m);
    for (int trial = 0; trial < 20; ++trial) {
        const HermitianExpr e = random_polynomial(rng, 2);
        const Point p = random_point(rng, 2);
        const Point mp = m * p;
        CHECK(std::abs(eval(substitute_linear(e, sub), p) - eval(e, mp)) <= 1e-10 * (1 + std::abs(eval(e, mp))));
    }
    const LinearSubstitution swap = LinearSubstitution::signed_permutation({1, 0}, {1, -1});
    const HermitianExpr e = HermitianExpr::z(2, 0) * HermitianExpr::zbar(2, 1);
    CHECK(substitute_linear(e, swap) == -(HermitianExpr::z(2, 1) * HermitianExpr::zbar(2, 0)));
    Eigen::MatrixXcd irrational(1, 1);
    irrational << std::sqrt(2.0);
    CHECK_THROWS_AS(LinearSubstitution::from_complex(irrational), PreconditionError);
}

TEST_CASE("dimension mismatches are reported")
{
    CHECK_THROWS_AS(HermitianExpr::z(2, 0) + HermitianExpr::z(3, 0), DimensionMismatch);
    CHECK_THROWS_AS(evaluate(HermitianExpr::z(2, 0), make_point({1.0})), DimensionMismatch);
}
