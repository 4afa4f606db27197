#pragma once

#include <complex>
#include <random>

#include "levilab/evaluate.hpp"
#include "levilab/hermitian_expr.hpp"

namespace levilab::testing {

inline GaussianRational random_coefficient(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    return gaussian(num(rng), den(rng), num(rng), den(rng));
}

/// Polynomial in z, conj(z) with `terms` random monomials of partial degree <= max_deg.
inline HermitianExpr random_polynomial(std::mt19937_64& rng, int n, int terms = 4, int max_deg = 2)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    TermMap out;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int j = 0; j < n; ++j) {
            m.alpha.push_back(deg(rng));
            m.beta.push_back(deg(rng));
        }
        out[m] += random_coefficient(rng);
    }
    return {n, std::move(out), {}};
}

/// 2 + z_1 stays in the right half-plane on the unit polydisc.
inline BaseFactor shifted_one(int n)
{
    return make_base("2+z1", HermitianExpr::constant(n, 2) + HermitianExpr::z(n, 0), Branch::principal);
}

/// Random polynomial, sometimes multiplied by a half-integer power of 2 + z_1.
inline HermitianExpr random_expression(std::mt19937_64& rng, int n)
{
    HermitianExpr e = random_polynomial(rng, n);
    std::uniform_int_distribution<int> half(-2, 2);
    if (rng() % 2 == 0)
        e = e * HermitianExpr::radical(n, shifted_one(n), half(rng), half(rng));
    return e;
}

/// Uniform point in the polydisc of radius r.
inline Point random_point(std::mt19937_64& rng, int n, double r = 0.9)
{
    std::uniform_real_distribution<double> u(-1, 1);
    Point p(n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> z;
        do
            z = {u(rng), u(rng)};
        while (std::abs(z) >= 1);
        p[j] = r * z;
    }
    return p;
}

/// Central-difference Wirtinger derivative d/dz_j or d/dconj(z_j).
template <typename F>
std::complex<double> finite_wirtinger(F&& f, const Point& p, int j, Wirtinger kind, double h = 1e-6)
{
    Point px = p, mx = p, py = p, my = p;
    px[j] += h;
    mx[j] -= h;
    py[j] += std::complex<double>(0, h);
    my[j] -= std::complex<double>(0, h);
    const std::complex<double> dx = (f(px) - f(mx)) / (2 * h);
    const std::complex<double> dy = (f(py) - f(my)) / (2 * h);
    const std::complex<double> i(0, 1);
    return kind == Wirtinger::holo ? 0.5 * (dx - i * dy) : 0.5 * (dx + i * dy);
}

} // namespace levilab::testing
