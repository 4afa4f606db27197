#include "levilab/reinhardt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace levilab {

std::string NormalizedSignature::blocks_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i)
        out += (i ? "," : "") + std::to_string(blocks[i]);
    return out + ")";
}

namespace {

void compositions(int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = 1; k <= remaining; ++k) {
        prefix.push_back(k);
        compositions(remaining - k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<NormalizedSignature> enumerate_signatures(int n)
{
    std::vector<NormalizedSignature> out;
    if (n <= 0)
        return out;
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    compositions(n, prefix, parts);
    for (int s = 0; s <= n; ++s)
        for (int t = s; t <= n; ++t)
            for (int p = std::max(t, 1); p <= n; ++p)
                for (const auto& blocks : parts)
                    if (static_cast<int>(blocks.size()) == p)
                        out.push_back({n, s, t, p, blocks});
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_signatures(int n)
{
    if (n <= 0)
        return 0;
    // compositions of n into p parts: C(n-1, p-1)
    std::size_t total = 0;
    std::size_t binom = 1;
    for (int p = 1; p <= n; ++p) {
        total += binom * static_cast<std::size_t>((p + 1) * (p + 2) / 2);
        binom = binom * static_cast<std::size_t>(n - p) / static_cast<std::size_t>(p);
    }
    return total;
}

BlockKind block_kind(const NormalizedSignature& sig, int block)
{
    if (block < 0 || block >= sig.p)
        throw PreconditionError("block_kind: block index out of range");
    if (block < sig.s)
        return BlockKind::ball;
    if (block < sig.t)
        return BlockKind::translation;
    return BlockKind::rotation;
}

int block_contribution(BlockKind kind, int size)
{
    if (size < 1)
        throw PreconditionError("block_contribution: block size must be positive");
    return kind == BlockKind::rotation ? size * size : size * size + 2 * size;
}

DimReport dim_aut0(const NormalizedSignature& sig)
{
    if (!(0 <= sig.s && sig.s <= sig.t && sig.t <= sig.p && sig.p <= sig.n) ||
        static_cast<int>(sig.blocks.size()) != sig.p)
        throw PreconditionError("dim_aut0: invalid signature shape");
    int sum = 0;
    for (int b : sig.blocks) {
        if (b < 1)
            throw PreconditionError("dim_aut0: block sizes must be positive");
        sum += b;
    }
    if (sum != sig.n)
        throw PreconditionError("dim_aut0: block sizes do not sum to n");

    DimReport r;
    r.signature = sig;
    for (int i = 0; i < sig.p; ++i) {
        r.contributions.push_back(block_contribution(block_kind(sig, i), sig.blocks[static_cast<std::size_t>(i)]));
        r.total += r.contributions.back();
    }
    return r;
}

std::set<int> achievable_dims(int n)
{
    if (n < 1)
        throw PreconditionError("achievable_dims: n must be positive");
    std::set<int> out;
    for (const auto& sig : enumerate_signatures(n))
        out.insert(dim_aut0(sig).total);
    return out;
}

std::string to_string(CaseVerdict v)
{
    switch (v) {
    case CaseVerdict::not_simply_connected:
        return "not-simply-connected";
    case CaseVerdict::not_hyperbolic:
        return "not-hyperbolic";
    case CaseVerdict::pseudoconvex:
        return "pseudoconvex";
    case CaseVerdict::model_domain:
        return "model-domain";
    }
    return "unknown";
}

std::vector<SliceCase> slice_cases()
{
    return {
        {"i", "0 < |z2| < R", "0 < R < inf", CaseVerdict::not_simply_connected},
        {"ii", "r < |z2| < R", "0 < r < R <= inf", CaseVerdict::not_simply_connected},
        {"iii", "|z2| < R", "s = 0", CaseVerdict::not_hyperbolic},
        {"iii", "|z2| < R", "s = 1, alpha >= 0", CaseVerdict::pseudoconvex},
        {"iii", "|z2| < R", "s = 1, alpha < 0 (gamma = -alpha)", CaseVerdict::model_domain},
    };
}

ModelDomain::ModelDomain(double R_, double gamma_) : R(R_), gamma(gamma_)
{
    if (!(R > 0) || !(gamma > 0))
        throw PreconditionError("ModelDomain: R and gamma must be positive");
}

bool ModelDomain::contains(std::complex<double> z1, std::complex<double> z2) const
{
    const double r2 = std::norm(z1);
    return r2 < 1 && std::abs(z2) * std::pow(1 - r2, gamma) < R;
}

double ModelDomain::fibre_radius(std::complex<double> z1) const
{
    const double r2 = std::norm(z1);
    if (!(r2 < 1))
        throw PreconditionError("ModelDomain::fibre_radius: z1 outside the unit disc");
    return R / std::pow(1 - r2, gamma);
}

double cauchy_radius(double R, double gamma, std::complex<double> mu)
{
    const double r2 = std::norm(mu);
    if (!(r2 < 1))
        throw PreconditionError("cauchy_radius: |mu| must be less than 1");
    if (!(R > 0) || !(gamma > 0))
        throw PreconditionError("cauchy_radius: R and gamma must be positive");
    return R / (2 * std::pow(1 - r2, gamma));
}

double cauchy_bound(double M, double R, double gamma, std::complex<double> mu, double rho_abs)
{
    if (!(M > 0))
        throw PreconditionError("cauchy_bound: M must be positive");
    if (!(rho_abs >= 0) || rho_abs > R / 2)
        throw PreconditionError("cauchy_bound: rho_abs must lie in [0, R/2]");
    const double r_mu = cauchy_radius(R, gamma, mu);
    if (!(r_mu > rho_abs))
        throw PreconditionError("cauchy_bound: R_mu must exceed rho_abs");
    const double gap = r_mu - rho_abs;
    return M * r_mu / (gap * gap);
}

DecayTable decay_scan(double M, double R, double gamma, const std::vector<std::complex<double>>& mus, double rho_abs)
{
    for (std::size_t i = 1; i < mus.size(); ++i)
        if (!(std::abs(mus[i]) > std::abs(mus[i - 1])))
            throw PreconditionError("decay_scan: |mu| must increase along the sequence");
    DecayTable out;
    for (const auto& mu : mus)
        out.rows.push_back({mu, cauchy_radius(R, gamma, mu), cauchy_bound(M, R, gamma, mu, rho_abs)});
    out.strictly_decreasing = !out.rows.empty();
    for (std::size_t i = 1; i < out.rows.size(); ++i)
        if (!(out.rows[i].bound < out.rows[i - 1].bound))
            out.strictly_decreasing = false;
    if (!out.rows.empty())
        out.final_ratio = out.rows.back().bound / out.rows.front().bound;
    return out;
}

} // namespace levilab
