#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "levilab/errors.hpp"

namespace levilab {

/// Block structure of a normalized hyperbolic Reinhardt domain: blocks
/// 1..s are ball blocks, s+1..t translation blocks, t+1..p rotation blocks.
/// Exponent data is left symbolic since it does not enter the dimension.
struct NormalizedSignature {
    int n = 0;
    int s = 0;
    int t = 0;
    int p = 0;
    std::vector<int> blocks;

    auto operator<=>(const NormalizedSignature&) const = default;
    std::string blocks_string() const;
};

enum class BlockKind { ball, translation, rotation };

/// All shapes with 0 <= s <= t <= p <= n and positive block sizes summing
/// to n, ordered lexicographically on (s, t, p, blocks). Empty for n <= 0.
std::vector<NormalizedSignature> enumerate_signatures(int n);

/// Number of shapes without listing them: sum over compositions of n into p
/// parts of the (p+1)(p+2)/2 choices of (s, t).
std::size_t count_signatures(int n);

BlockKind block_kind(const NormalizedSignature& sig, int block);

/// Real dimension of the block's factor: SU(m,1) and U(m) x C^m give m^2 + 2m,
/// U(m) gives m^2.
int block_contribution(BlockKind kind, int size);

struct DimReport {
    NormalizedSignature signature;
    std::vector<int> contributions;
    int total = 0;
};

DimReport dim_aut0(const NormalizedSignature& sig);

/// Distinct dim_aut0 values over all shapes; throws PreconditionError for n < 1.
std::set<int> achievable_dims(int n);

enum class CaseVerdict { not_simply_connected, not_hyperbolic, pseudoconvex, model_domain };

std::string to_string(CaseVerdict v);

/// One row of the case analysis for the one-dimensional slice D_1 of a
/// normalized domain with t = 1, p = 2, n_1 = n_2 = 1.
struct SliceCase {
    std::string label;
    std::string slice;
    std::string condition;
    CaseVerdict verdict;
};

std::vector<SliceCase> slice_cases();

/// {|z_1| < 1, |z_2| < R / (1 - |z_1|^2)^gamma}.
struct ModelDomain {
    double R = 1;
    double gamma = 1;

    /// Throws PreconditionError unless R > 0 and gamma > 0.
    ModelDomain(double R_, double gamma_);

    bool contains(std::complex<double> z1, std::complex<double> z2) const;
    /// Radius of the z_2 fibre over z_1 (infinite outside the disc is not
    /// meaningful; requires |z_1| < 1).
    double fibre_radius(std::complex<double> z1) const;
};

/// R_mu = R / (2 (1 - |mu|^2)^gamma).
double cauchy_radius(double R, double gamma, std::complex<double> mu);

/// M R_mu / (R_mu - rho_abs)^2 under |mu| < 1, M > 0, R, gamma > 0,
/// 0 <= rho_abs <= R/2 and R_mu > rho_abs.
double cauchy_bound(double M, double R, double gamma, std::complex<double> mu, double rho_abs);

/// (1 / 2 pi i) \oint f(mu, zeta) / (zeta - rho)^2 d zeta over |zeta| = radius
/// by the trapezoidal rule.
template <typename Scalar = double, typename F>
std::complex<Scalar> cauchy_derivative_numeric(F&& f, std::complex<Scalar> mu, std::complex<Scalar> rho, Scalar radius,
                                               int nodes = 512)
{
    if (!(radius > 0) || !(std::abs(rho) < radius))
        throw PreconditionError("cauchy_derivative_numeric: rho must lie inside the contour");
    if (nodes < 1)
        throw PreconditionError("cauchy_derivative_numeric: at least one node is required");
    const Scalar two_pi = Scalar(2) * std::acos(Scalar(-1));
    std::complex<Scalar> sum(0);
    for (int k = 0; k < nodes; ++k) {
        const std::complex<Scalar> zeta = std::polar(radius, two_pi * Scalar(k) / Scalar(nodes));
        const std::complex<Scalar> d = zeta - rho;
        // d zeta = i zeta d theta, so the 1/(2 pi i) and i cancel
        sum += f(mu, zeta) * zeta / (d * d);
    }
    return sum / Scalar(nodes);
}

struct DecayRow {
    std::complex<double> mu;
    double R_mu = 0;
    double bound = 0;
};

struct DecayTable {
    std::vector<DecayRow> rows;
    bool strictly_decreasing = false;
    /// bounds.back() / bounds.front()
    double final_ratio = 0;
};

/// cauchy_bound along a sequence with |mu| increasing to 1.
DecayTable decay_scan(double M, double R, double gamma, const std::vector<std::complex<double>>& mus, double rho_abs);

} // namespace levilab
