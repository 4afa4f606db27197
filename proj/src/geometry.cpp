#include "levilab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "levilab/errors.hpp"
#include "levilab/parallel.hpp"

namespace levilab {

DomainSpec::DomainSpec(std::string name, HermitianExpr rho, std::vector<Point> interior_anchors,
                       std::vector<Point> known_bad_points, double bad_point_radius)
{
    auto data = std::make_shared<Data>();
    const int n = rho.dim();
    if (n < 1)
        throw PreconditionError("DomainSpec: dimension must be positive");
    if (rho.has_params())
        throw PreconditionError("DomainSpec: defining function must not carry free parameters");
    if (!is_real(rho))
        throw PreconditionError("DomainSpec: defining function of '" + name + "' is not real");
    if (interior_anchors.empty())
        throw PreconditionError("DomainSpec: at least one interior anchor is required");

    data->name = std::move(name);
    data->rho = std::move(rho);
    data->bad_points = std::move(known_bad_points);
    data->bad_radius = bad_point_radius;
    data->rho_c = CompiledExpr<double>(data->rho);
    for (int j = 0; j < n; ++j) {
        data->grad.push_back(wirtinger(data->rho, j, Wirtinger::holo));
        data->grad_c.emplace_back(data->grad.back());
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            data->levi.push_back(wirtinger(data->grad[static_cast<std::size_t>(j)], k, Wirtinger::anti));
            data->levi_c.emplace_back(data->levi.back());
        }
    }
    for (const auto& a : interior_anchors) {
        if (a.size() != n)
            throw DimensionMismatch("DomainSpec: anchor dimension differs from domain dimension");
        if (!(data->rho_c(a).real() < 0))
            throw PreconditionError("DomainSpec: anchor is not an interior point of '" + data->name + "'");
    }
    data->anchors = std::move(interior_anchors);
    data_ = std::move(data);
}

Eigen::VectorXcd DomainSpec::gradient(const Point& p) const
{
    Eigen::VectorXcd g(dim());
    for (int j = 0; j < dim(); ++j)
        g[j] = data_->grad_c[static_cast<std::size_t>(j)](p);
    return g;
}

Eigen::MatrixXcd DomainSpec::levi_matrix(const Point& p) const
{
    const int n = dim();
    Eigen::MatrixXcd l(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            l(j, k) = data_->levi_c[static_cast<std::size_t>(j * n + k)](p);
    return l;
}

bool DomainSpec::near_bad_point(const Point& p) const
{
    return std::any_of(data_->bad_points.begin(), data_->bad_points.end(),
                       [&](const Point& b) { return (p - b).norm() < data_->bad_radius; });
}

LeviReport levi_restricted(const DomainSpec& d, const Point& p, const LeviOptions& opts)
{
    LeviReport r;
    r.point = p;
    r.rho_value = d.value(p);
    if (std::abs(r.rho_value) > opts.boundary_tolerance)
        throw PreconditionError("levi_restricted: point is not on the boundary (|rho| = " +
                                std::to_string(std::abs(r.rho_value)) + ")");
    r.grad = d.gradient(p);
    if (r.grad.norm() < opts.gradient_tolerance)
        throw DegenerateGradient("levi_restricted: gradient vanishes at the point");
    r.levi_matrix = d.levi_matrix(p);
    r.tangent_basis = tangent_basis(r.grad);

    Eigen::MatrixXcd restricted = restricted_levi_matrix(r.levi_matrix, r.tangent_basis);
    restricted = (0.5 * (restricted + restricted.adjoint())).eval();
    if (restricted.rows() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(restricted, Eigen::EigenvaluesOnly);
        r.restricted_eigenvalues = solver.eigenvalues();
    } else {
        r.restricted_eigenvalues.resize(0);
    }
    const double spectral = r.restricted_eigenvalues.size() > 0 ? r.restricted_eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    r.zero_threshold = opts.rank_tolerance * (1.0 + spectral);
    for (double lambda : r.restricted_eigenvalues) {
        if (std::abs(lambda) < r.zero_threshold)
            ++r.signature.zero;
        else if (lambda > 0)
            ++r.signature.positive;
        else
            ++r.signature.negative;
    }
    r.rank = r.signature.positive + r.signature.negative;
    return r;
}

double canonical_tangent_levi(const DomainSpec& d, const Point& p)
{
    if (d.dim() != 2)
        throw PreconditionError("canonical_tangent_levi: only defined for two-dimensional domains");
    const Eigen::VectorXcd g = d.gradient(p);
    if (std::abs(g[0]) == 0.0)
        throw PreconditionError("canonical_tangent_levi: d rho / d z1 vanishes");
    Eigen::VectorXcd v(2);
    v << -g[1] / g[0], 1.0;
    const Eigen::MatrixXcd l = d.levi_matrix(p);
    return (v.transpose() * l * v.conjugate())(0, 0).real();
}

namespace {

Point random_direction(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> normal;
    Point dir(n);
    for (int k = 0; k < n; ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        dir[k] = {re, im};
    }
    return dir / dir.norm();
}

// rho along a ray; nullopt when evaluation fails (branch cut, pole)
std::optional<double> safe_value(const DomainSpec& d, const Point& p)
{
    try {
        const double v = d.value(p);
        if (std::isnan(v))
            return std::nullopt;
        return v;
    } catch (const Error&) {
        return std::nullopt;
    }
}

enum class RayOutcome { found, no_exit, failed };

struct RayResult {
    RayOutcome outcome = RayOutcome::failed;
    double t = 0;
    Point point;
};

RayResult march_ray(const DomainSpec& d, const Point& anchor, const Point& dir, const SamplerConfig& cfg)
{
    const double h = cfg.max_radius / cfg.march_steps;
    double lo = 0;
    double hi = -1;
    for (int k = 1; k <= cfg.march_steps; ++k) {
        const double t = k * h;
        auto v = safe_value(d, anchor + t * dir);
        if (!v)
            return {};
        if (*v >= 0) {
            hi = t;
            break;
        }
        lo = t;
    }
    if (hi < 0)
        return {RayOutcome::no_exit, 0, {}};
    for (int s = 0; s < cfg.bisection_steps; ++s) {
        const double mid = 0.5 * (lo + hi);
        auto v = safe_value(d, anchor + mid * dir);
        if (!v)
            return {};
        (*v >= 0 ? hi : lo) = mid;
    }
    auto vlo = safe_value(d, anchor + lo * dir);
    auto vhi = safe_value(d, anchor + hi * dir);
    if (!vlo || !vhi)
        return {};
    const double t = std::abs(*vlo) <= std::abs(*vhi) ? lo : hi;
    return {RayOutcome::found, t, anchor + t * dir};
}

const std::vector<Point>& anchors_of(const DomainSpec& d, const SamplerConfig& cfg)
{
    return cfg.anchors.empty() ? d.interior_anchors() : cfg.anchors;
}

} // namespace

BoundarySample sample_boundary(const DomainSpec& d, std::size_t count, std::uint64_t seed, const SamplerConfig& cfg)
{
    const auto& anchors = anchors_of(d, cfg);
    struct Slot {
        std::optional<Point> point;
        std::vector<Point> no_exit;
        std::size_t rejected = 0;
    };
    std::vector<Slot> slots(count);
    parallel_for(count, [&](std::size_t i) {
        auto rng = index_rng(seed, i);
        const Point& anchor = anchors[i % anchors.size()];
        Slot& slot = slots[i];
        for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
            const Point dir = random_direction(rng, d.dim());
            RayResult r = march_ray(d, anchor, dir, cfg);
            if (r.outcome == RayOutcome::no_exit) {
                slot.no_exit.push_back(dir);
                continue;
            }
            if (r.outcome == RayOutcome::failed)
                continue;
            if (d.near_bad_point(r.point)) {
                ++slot.rejected;
                continue;
            }
            if (std::abs(d.value(r.point)) > cfg.tolerance)
                continue;
            slot.point = r.point;
            break;
        }
    });

    BoundarySample out;
    for (std::size_t i = 0; i < count; ++i) {
        if (slots[i].point)
            out.points.push_back(*slots[i].point);
        else
            out.failed_indices.push_back(i);
        out.rejected_near_bad_points += slots[i].rejected;
        for (auto& dir : slots[i].no_exit)
            out.non_exiting_directions.push_back(std::move(dir));
    }
    return out;
}

std::vector<Point> sample_interior(const DomainSpec& d, std::size_t count, std::uint64_t seed, const SamplerConfig& cfg)
{
    const auto& anchors = anchors_of(d, cfg);
    std::vector<std::optional<Point>> slots(count);
    parallel_for(count, [&](std::size_t i) {
        auto rng = index_rng(seed ^ 0x5bd1e995ULL, i);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const Point& anchor = anchors[i % anchors.size()];
        for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
            const Point dir = random_direction(rng, d.dim());
            const double u = unit(rng);
            RayResult r = march_ray(d, anchor, dir, cfg);
            const double reach = r.outcome == RayOutcome::found ? r.t
                                 : r.outcome == RayOutcome::no_exit ? cfg.max_radius
                                                                    : -1.0;
            if (reach <= 0)
                continue;
            const Point p = anchor + u * reach * dir;
            auto v = safe_value(d, p);
            if (v && *v < 0 && !d.near_bad_point(p)) {
                slots[i] = p;
                break;
            }
        }
    });
    std::vector<Point> out;
    for (auto& s : slots)
        if (s)
            out.push_back(std::move(*s));
    return out;
}

std::optional<double> ray_exit_distance(const DomainSpec& d, const Point& p, const Point& dir_in, double max_distance)
{
    const Point dir = dir_in / dir_in.norm();
    auto outside = [&](double t) {
        auto v = safe_value(d, p + t * dir);
        return !v || *v >= 0;
    };
    double lo = 0;
    double hi = 1e-12;
    while (!outside(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > max_distance)
            return std::nullopt;
    }
    for (int s = 0; s < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++s) {
        const double mid = 0.5 * (lo + hi);
        (outside(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double boundary_distance(const DomainSpec& d, const Point& p, int random_probes, std::uint64_t seed)
{
    double best = std::numeric_limits<double>::infinity();
    const Eigen::VectorXcd g = d.gradient(p);
    if (g.norm() > 0) {
        if (auto t = ray_exit_distance(d, p, g.conjugate()))
            best = std::min(best, *t);
    }
    for (int k = 0; k < random_probes; ++k) {
        auto rng = index_rng(seed, static_cast<std::uint64_t>(k));
        if (auto t = ray_exit_distance(d, p, random_direction(rng, d.dim())))
            best = std::min(best, *t);
    }
    return best;
}

StratificationReport stratify(const DomainSpec& d, const std::vector<Point>& samples,
                              const std::vector<LocusPredicate>& loci, const LeviOptions& opts)
{
    std::vector<std::optional<LeviReport>> reports(samples.size());
    parallel_for(samples.size(), [&](std::size_t i) {
        try {
            reports[i] = levi_restricted(d, samples[i], opts);
        } catch (const DegenerateGradient&) {
        } catch (const PreconditionError&) {
        } catch (const BranchCutError&) {
        }
    });

    StratificationReport out;
    out.sample_size = samples.size();
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    const int full_rank = d.dim() - 1;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!reports[i]) {
            out.degenerate_points.push_back(samples[i]);
            continue;
        }
        const LeviReport& r = *reports[i];
        ++out.rank_counts[r.rank];
        out.representatives.try_emplace(r.rank, samples[i]);
        if (r.restricted_eigenvalues.size() > 0 && r.restricted_eigenvalues[0] < out.min_eigenvalue) {
            out.min_eigenvalue = r.restricted_eigenvalues[0];
            out.min_eigenvalue_point = samples[i];
        }
        if (r.rank >= full_rank)
            continue;
        bool explained = false;
        for (const auto& locus : loci) {
            if (locus.rank == r.rank && locus.distance(samples[i]) <= locus.tolerance) {
                ++out.locus_hits[locus.name];
                explained = true;
                break;
            }
        }
        if (!explained) {
            out.witnesses.push_back(samples[i]);
            out.witness_ranks.push_back(r.rank);
        }
    }
    return out;
}

PseudoconvexityScan pseudoconvexity_scan(const DomainSpec& d, const std::vector<Point>& samples, const LeviOptions& opts)
{
    std::vector<double> minima(samples.size(), std::numeric_limits<double>::infinity());
    parallel_for(samples.size(), [&](std::size_t i) {
        try {
            const LeviReport r = levi_restricted(d, samples[i], opts);
            if (r.restricted_eigenvalues.size() > 0)
                minima[i] = r.restricted_eigenvalues[0];
        } catch (const Error&) {
        }
    });
    PseudoconvexityScan out;
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(minima[i]))
            continue;
        ++out.evaluated;
        if (minima[i] < out.min_eigenvalue) {
            out.min_eigenvalue = minima[i];
            out.witness = samples[i];
        }
    }
    return out;
}

GradientScan gradient_scan(const DomainSpec& d, const std::vector<Point>& samples)
{
    GradientScan out;
    out.min_norm = std::numeric_limits<double>::infinity();
    for (const auto& p : samples) {
        if (d.near_bad_point(p)) {
            ++out.skipped_near_bad_points;
            continue;
        }
        const double g = d.gradient(p).norm();
        ++out.evaluated;
        if (g < out.min_norm) {
            out.min_norm = g;
            out.witness = p;
        }
    }
    return out;
}

InvarianceLattice torus_invariance_lattice(const HermitianExpr& rho)
{
    if (rho.has_radicals())
        throw PreconditionError("torus_invariance_lattice: defining function carries radicals");
    const int n = rho.dim();
    InvarianceLattice out;
    IntMatrix rows(static_cast<Eigen::Index>(rho.size()), n);
    Eigen::Index r = 0;
    bool circular = true;
    for (const auto& [m, c] : rho.terms()) {
        std::int64_t balance = 0;
        for (int k = 0; k < n; ++k) {
            rows(r, k) = m.alpha[static_cast<std::size_t>(k)] - m.beta[static_cast<std::size_t>(k)];
            balance += rows(r, k);
        }
        if (balance != 0)
            circular = false;
        if (m.alpha != m.beta)
            out.witness_violations.push_back({m.alpha, m.beta});
        ++r;
    }
    out.basis = integer_kernel(rows);
    out.rank = static_cast<int>(out.basis.rows());
    out.reinhardt = out.rank == n;
    out.circular = circular;
    return out;
}

HermitianExpr expand_certificate_term(int n, const CertificateTerm& term)
{
    HermitianExpr product = HermitianExpr::constant(n, 1);
    for (const auto& factor : term.factors) {
        HermitianExpr f = std::visit(
            [&](const auto& x) -> HermitianExpr {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, PositiveConstant>) {
                    if (!x.value.is_real() || sgn(x.value.re()) <= 0)
                        throw PreconditionError("certificate '" + term.label + "': constant is not positive");
                    return HermitianExpr::constant(n, x.value);
                } else if constexpr (std::is_same_v<T, ModulusPower>) {
                    if (x.k < 1)
                        throw PreconditionError("certificate '" + term.label + "': modulus power must be positive");
                    return pow(HermitianExpr::z(n, x.variable) * HermitianExpr::zbar(n, x.variable), x.k);
                } else if constexpr (std::is_same_v<T, BaseModulusPower>) {
                    return HermitianExpr::radical(n, x.base, x.k2, x.k2);
                } else {
                    if (x.value.dim() != n)
                        throw DimensionMismatch("certificate '" + term.label + "': square of wrong dimension");
                    if (!is_real(x.value))
                        throw PreconditionError("certificate '" + term.label + "': squared expression is not real");
                    return x.value * x.value;
                }
            },
            factor);
        product = product * f;
    }
    return product;
}

BoundednessReport boundedness_certificate(const DomainSpec& d, const BoundednessCertificate& cert)
{
    const int n = d.dim();
    if (!cert.constant.is_real() || sgn(cert.constant.re()) <= 0)
        throw PreconditionError("boundedness_certificate: constant must be positive");
    HermitianExpr sum(n);
    for (const auto& term : cert.terms)
        sum = sum + expand_certificate_term(n, term);

    BoundednessReport out;
    const HermitianExpr residual = d.rho() + HermitianExpr::constant(n, cert.constant) - sum;
    out.identity_holds = is_identically_zero(residual);
    if (!out.identity_holds)
        out.residual = residual.to_string();

    out.box.assign(static_cast<std::size_t>(n), std::nullopt);
    const double c = cert.constant.re().get_d();
    for (const auto& term : cert.terms) {
        double weight = 1.0;
        const ModulusPower* modulus = nullptr;
        bool simple = true;
        for (const auto& factor : term.factors) {
            if (const auto* pc = std::get_if<PositiveConstant>(&factor))
                weight *= pc->value.re().get_d();
            else if (const auto* mp = std::get_if<ModulusPower>(&factor); mp && !modulus)
                modulus = mp;
            else
                simple = false;
        }
        if (!simple || !modulus)
            continue;
        const double bound = std::pow(c / weight, 1.0 / (2.0 * modulus->k));
        auto& slot = out.box[static_cast<std::size_t>(modulus->variable)];
        slot = slot ? std::min(*slot, bound) : bound;
    }
    out.bounded = out.identity_holds && std::all_of(out.box.begin(), out.box.end(), [](const auto& b) { return b.has_value(); });
    return out;
}

SampledBoundedness boundedness_sampling(const DomainSpec& d, std::size_t budget, std::uint64_t seed,
                                        const SamplerConfig& cfg)
{
    SampledBoundedness out;
    const int n = d.dim();
    for (const auto& anchor : anchors_of(d, cfg)) {
        for (int k = 0; k < n; ++k) {
            for (std::complex<double> unit : {std::complex<double>(1, 0), std::complex<double>(-1, 0),
                                              std::complex<double>(0, 1), std::complex<double>(0, -1)}) {
                Point dir = Point::Zero(n);
                dir[k] = unit;
                ++out.probes;
                if (auto t = ray_exit_distance(d, anchor, dir, cfg.max_radius))
                    out.max_norm = std::max(out.max_norm, (anchor + *t * dir).norm());
                else
                    out.unbounded_directions.push_back(dir);
            }
        }
    }
    BoundarySample s = sample_boundary(d, budget, seed, cfg);
    out.probes += budget;
    for (const auto& p : s.points)
        out.max_norm = std::max(out.max_norm, p.norm());
    for (const auto& dir : s.non_exiting_directions)
        out.unbounded_directions.push_back(dir);
    return out;
}

} // namespace levilab
