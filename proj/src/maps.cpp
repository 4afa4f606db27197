#include "levilab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "levilab/detail/term_algebra.hpp"
#include "levilab/errors.hpp"
#include "levilab/parallel.hpp"

namespace levilab {

using namespace detail;

RadicalMap::RadicalMap(std::string name, int n_in, std::vector<TermMap> components, Registry registry,
                       std::string param_range)
    : name_(std::move(name)), n_in_(n_in), components_(std::move(components)), registry_(std::move(registry)),
      param_range_(std::move(param_range))
{
    for (std::size_t k = 0; k < components_.size(); ++k) {
        for (const auto& [m, c] : components_[k]) {
            if (static_cast<int>(m.alpha.size()) != n_in_)
                throw DimensionMismatch("RadicalMap '" + name_ + "': component arity differs from n_in");
            if (std::any_of(m.beta.begin(), m.beta.end(), [](int b) { return b != 0; }))
                throw PreconditionError("RadicalMap '" + name_ + "': component " + std::to_string(k + 1) +
                                        " depends on conj(z)");
            for (const auto& [id, r] : m.radicals) {
                auto it = registry_.bases.find(id);
                if (it == registry_.bases.end())
                    throw PreconditionError("RadicalMap '" + name_ + "': unregistered base '" + id + "'");
                if (r.anti != 0 && !it->second.real_positive)
                    throw PreconditionError("RadicalMap '" + name_ + "': component " + std::to_string(k + 1) +
                                            " carries a conjugate radical");
            }
        }
    }
    TermMap all;
    for (const auto& c : components_)
        for (const auto& [m, v] : c)
            all.emplace(m, v);
    Registry pruned = registry_;
    prune_registry(pruned, all);
    registry_.bases = pruned.bases;
}

RadicalMap RadicalMap::from_terms(std::string name, int n_in, const std::vector<std::vector<MapTerm>>& components,
                                  std::string param_range)
{
    Registry reg;
    std::vector<TermMap> out;
    for (const auto& component : components) {
        TermMap sum;
        for (const auto& term : component) {
            if (term.coefficient.dim() != n_in)
                throw DimensionMismatch("RadicalMap::from_terms: coefficient dimension differs from n_in");
            auto renames = merge_registry(reg, term.coefficient.registry());
            TermMap coeff = rename_bases(term.coefficient.terms(), renames, reg);
            Monomial head = unit_monomial(n_in);
            for (const auto& f : term.radicals) {
                const std::string id = register_base(reg, f.base);
                head.radicals.emplace_back(id, RadicalExponent{f.quarters, 0});
            }
            normalize_monomial(head, reg);
            TermMap factor;
            factor.emplace(head, GaussianRational(1));
            sum = term_sum(sum, term_product(coeff, factor, reg));
        }
        out.push_back(std::move(sum));
    }
    return {std::move(name), n_in, std::move(out), std::move(reg), std::move(param_range)};
}

RadicalMap RadicalMap::identity(int n)
{
    return linear("id", LinearSubstitution::identity(n));
}

RadicalMap RadicalMap::linear(std::string name, const LinearSubstitution& m)
{
    std::vector<std::vector<MapTerm>> components;
    for (int j = 0; j < m.n; ++j) {
        HermitianExpr image(m.n);
        for (int k = 0; k < m.n; ++k)
            image = image + m.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * HermitianExpr::z(m.n, k);
        components.push_back({MapTerm{image, {}}});
    }
    return from_terms(std::move(name), m.n, components);
}

bool RadicalMap::has_radicals() const
{
    return std::any_of(components_.begin(), components_.end(), [](const TermMap& t) { return detail::has_radicals(t); });
}

std::string RadicalMap::component_to_string(int k) const
{
    const TermMap& t = components_.at(static_cast<std::size_t>(k));
    if (t.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : t) {
        if (!out.empty())
            out += " + ";
        const std::string mono = monomial_to_string(m);
        out += "(" + c.to_string() + ")";
        if (!mono.empty())
            out += "*" + mono;
    }
    return out;
}

RadicalMap specialize(const RadicalMap& f, const ExactParams& values)
{
    Registry out_reg;
    std::vector<TermMap> components;
    for (const auto& c : f.components())
        components.push_back(specialize_terms(c, f.registry(), f.n_in(), values, out_reg));
    return {f.name(), f.n_in(), std::move(components), std::move(out_reg), f.param_range()};
}

HermitianExpr pullback(const HermitianExpr& e, const RadicalMap& f)
{
    if (e.dim() != f.n_out())
        throw DimensionMismatch("pullback: expression dimension differs from map target dimension");
    Registry out_reg = f.registry();
    TermMap out = compose(e.terms(), e.registry(), f.n_in(), f.components(), out_reg, f.name());
    return {f.n_in(), std::move(out), std::move(out_reg)};
}

CompiledMap::CompiledMap(const RadicalMap& f, const ParamValues& params) : n_in_(f.n_in())
{
    for (const auto& c : f.components())
        components_.emplace_back(f.n_in(), c, f.registry(), params);
}

Point CompiledMap::operator()(const Point& p) const
{
    if (p.size() != n_in_)
        throw DimensionMismatch("CompiledMap: point dimension differs from n_in");
    Point out(n_out());
    for (int k = 0; k < n_out(); ++k)
        out[k] = components_[static_cast<std::size_t>(k)](p);
    return out;
}

std::function<Point(const Point&)> compose_numeric(const CompiledMap& outer, const CompiledMap& inner)
{
    if (outer.n_in() != inner.n_out())
        throw DimensionMismatch("compose_numeric: inner target dimension differs from outer source dimension");
    return [outer, inner](const Point& p) { return outer(inner(p)); };
}

ParamValues to_numeric(const ExactParams& values)
{
    ParamValues out;
    for (const auto& [name, v] : values)
        out[name] = v.to_complex();
    return out;
}

namespace {

std::string truncated(const std::string& s, std::size_t limit = 4000)
{
    return s.size() <= limit ? s : s.substr(0, limit) + " ...";
}

ParamValues random_params(const std::map<std::string, ParamKind>& kinds, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ParamValues out;
    for (const auto& [name, kind] : kinds) {
        const double angle = 2 * std::numbers::pi * unit(rng);
        switch (kind) {
        case ParamKind::complex:
            out[name] = std::polar(0.95 * std::sqrt(unit(rng)), angle);
            break;
        case ParamKind::real:
            out[name] = 0.95 * (2 * unit(rng) - 1);
            break;
        case ParamKind::unimodular:
            out[name] = std::polar(1.0, angle);
            break;
        }
    }
    return out;
}

} // namespace

MultiplierCheck multiplier_identity_check(const RadicalMap& f, const DomainSpec& src, const HermitianExpr& rho_dst,
                                          const HermitianExpr& m, const std::vector<ExactParams>& battery,
                                          const MultiplierOptions& opts)
{
    if (f.n_in() != src.dim() || m.dim() != src.dim())
        throw DimensionMismatch("multiplier_identity_check: source dimensions disagree");
    if (rho_dst.dim() != f.n_out())
        throw DimensionMismatch("multiplier_identity_check: target dimension differs from map target");

    std::map<std::string, ParamKind> kinds = f.params();
    kinds.insert(m.registry().params.begin(), m.registry().params.end());
    kinds.insert(rho_dst.registry().params.begin(), rho_dst.registry().params.end());
    for (const auto& values : battery) {
        for (const auto& [name, v] : values) {
            auto it = kinds.find(name);
            if (it == kinds.end())
                throw PreconditionError("multiplier_identity_check: unknown parameter '" + name + "'");
            if (opts.require_unit_disc && it->second != ParamKind::unimodular && v.norm2() >= 1)
                throw PreconditionError("multiplier_identity_check: parameter '" + name + "' outside the unit disc");
        }
    }

    std::vector<Point> probe_points;
    {
        const std::size_t half = opts.positivity_samples / 2;
        BoundarySample b = sample_boundary(src, half, opts.seed);
        probe_points = b.points;
        auto inner = sample_interior(src, opts.positivity_samples - half, opts.seed);
        probe_points.insert(probe_points.end(), inner.begin(), inner.end());
    }

    MultiplierCheck out;
    out.outcomes.resize(battery.size());
    parallel_for(battery.size(), [&](std::size_t i) {
        SpecializationOutcome& o = out.outcomes[i];
        o.values = battery[i];
        const HermitianExpr ms = specialize(m, battery[i]);
        if (opts.exact) {
            const RadicalMap fs = specialize(f, battery[i]);
            const HermitianExpr ds = specialize(rho_dst, battery[i]);
            const HermitianExpr residual = pullback(ds, fs) - ms * src.rho();
            o.exact_checked = true;
            o.identity_holds = is_identically_zero(residual);
            if (!o.identity_holds) {
                o.residual_terms = residual.size();
                o.residual = truncated(residual.to_string());
            }
        }
        o.multiplier_positive = true;
        o.multiplier_min = std::numeric_limits<double>::infinity();
        try {
            const CompiledExpr<double> mc(ms);
            for (const auto& p : probe_points) {
                const std::complex<double> v = mc(p);
                o.multiplier_min = std::min(o.multiplier_min, v.real());
                if (!(v.real() > 0) || std::abs(v.imag()) > 1e-9 * (1 + std::abs(v)))
                    o.multiplier_positive = false;
            }
        } catch (const Error&) {
            o.multiplier_positive = false;
        }
    });

    if (opts.sweep_parameters > 0 && !probe_points.empty()) {
        std::vector<double> worst(opts.sweep_parameters, 0.0);
        std::vector<char> failed(opts.sweep_parameters, 0);
        parallel_for(opts.sweep_parameters, [&](std::size_t s) {
            auto rng = index_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL, s);
            const ParamValues pv = random_params(kinds, rng);
            try {
                const CompiledMap fc(f, pv);
                const CompiledExpr<double> mc(m, pv);
                const CompiledExpr<double> dc(rho_dst, pv);
                const CompiledExpr<double> sc(src.rho());
                for (std::size_t k = 0; k < opts.sweep_points_per_parameter; ++k) {
                    const Point& p = probe_points[(s * opts.sweep_points_per_parameter + k) % probe_points.size()];
                    const std::complex<double> lhs = dc(fc(p));
                    const std::complex<double> rhs = mc(p) * sc(p);
                    worst[s] = std::max(worst[s], std::abs(lhs - rhs) / (1 + std::abs(lhs) + std::abs(rhs)));
                }
            } catch (const Error&) {
                failed[s] = 1;
            }
        });
        out.sweep_evaluations = opts.sweep_parameters * opts.sweep_points_per_parameter;
        out.sweep_max_residual = *std::max_element(worst.begin(), worst.end());
        out.sweep_pass = out.sweep_max_residual <= opts.sweep_tolerance &&
                         std::none_of(failed.begin(), failed.end(), [](char c) { return c != 0; });
    }

    out.pass = out.sweep_pass && std::all_of(out.outcomes.begin(), out.outcomes.end(), [](const auto& o) {
                   return (o.identity_holds || !o.exact_checked) && o.multiplier_positive;
               });
    return out;
}

SignPreservation sign_preservation_scan(const CompiledMap& f, const DomainSpec& src, const DomainSpec& dst,
                                        const SignScanOptions& opts)
{
    if (f.n_in() != src.dim() || f.n_out() != dst.dim())
        throw DimensionMismatch("sign_preservation_scan: map does not connect the two domains");
    const std::vector<Point> inner = sample_interior(src, opts.interior_samples, opts.seed);
    const BoundarySample outer = sample_boundary(src, opts.boundary_samples, opts.seed + 1);

    enum class Status : char { ok, violation, branch };
    auto scan = [&](const std::vector<Point>& pts, std::vector<double>& values, std::vector<Status>& status,
                    bool boundary) {
        values.assign(pts.size(), 0.0);
        status.assign(pts.size(), Status::ok);
        parallel_for(pts.size(), [&](std::size_t i) {
            try {
                const double v = dst.value(f(pts[i]));
                values[i] = v;
                const bool bad = boundary ? !(std::abs(v) <= opts.boundary_tolerance) : !(v < 0);
                status[i] = bad ? Status::violation : Status::ok;
            } catch (const Error&) {
                status[i] = Status::branch;
            }
        });
    };

    SignPreservation out;
    std::vector<double> values;
    std::vector<Status> status;
    scan(inner, values, status, false);
    out.interior_checked = inner.size();
    out.max_interior_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (status[i] == Status::branch) {
            out.branch_failures.push_back(inner[i]);
            continue;
        }
        out.max_interior_value = std::max(out.max_interior_value, values[i]);
        if (status[i] == Status::violation)
            out.interior_witnesses.push_back(inner[i]);
    }
    scan(outer.points, values, status, true);
    out.boundary_checked = outer.points.size();
    for (std::size_t i = 0; i < outer.points.size(); ++i) {
        if (status[i] == Status::branch) {
            out.branch_failures.push_back(outer.points[i]);
            continue;
        }
        out.max_boundary_abs = std::max(out.max_boundary_abs, std::abs(values[i]));
        if (status[i] == Status::violation)
            out.boundary_witnesses.push_back(outer.points[i]);
    }
    out.pass = out.interior_checked > 0 && out.boundary_checked > 0 && out.interior_witnesses.empty() &&
               out.boundary_witnesses.empty() && out.branch_failures.empty();
    return out;
}

OrbitReport orbit(const RadicalMap& family, const DomainSpec& d, const Point& p0,
                  const std::vector<ParamValues>& sequence, int probes, std::uint64_t seed)
{
    if (family.n_in() != d.dim() || family.n_out() != d.dim())
        throw DimensionMismatch("orbit: family is not a self-map of the domain");
    if (!(d.value(p0) < 0))
        throw PreconditionError("orbit: starting point is not interior");
    OrbitReport out;
    out.params = sequence;
    out.points.resize(sequence.size());
    out.distances.resize(sequence.size());
    parallel_for(sequence.size(), [&](std::size_t i) {
        out.points[i] = CompiledMap(family, sequence[i])(p0);
        out.distances[i] = boundary_distance(d, out.points[i], probes, seed);
    });
    out.strictly_decreasing = !sequence.empty();
    for (std::size_t i = 1; i < out.distances.size(); ++i)
        if (!(out.distances[i] < out.distances[i - 1]))
            out.strictly_decreasing = false;
    if (!out.points.empty())
        out.limit_estimate = out.points.back();
    return out;
}

RetractionReport retraction_check(const DomainSpec& d, const std::vector<double>& taus, std::size_t samples,
                                  std::uint64_t seed)
{
    for (double tau : taus)
        if (!(tau >= 0 && tau <= 1))
            throw PreconditionError("retraction_check: tau must lie in [0, 1]");
    const std::vector<Point> pts = sample_interior(d, samples, seed);
    RetractionReport out;
    out.taus = taus;
    out.samples = pts.size();
    out.max_value = -std::numeric_limits<double>::infinity();
    for (double tau : taus) {
        std::vector<double> values(pts.size());
        std::vector<char> failed(pts.size(), 0);
        parallel_for(pts.size(), [&](std::size_t i) {
            Point q = pts[i];
            q.tail(q.size() - 1) *= tau;
            try {
                values[i] = d.value(q);
            } catch (const Error&) {
                failed[i] = 1;
            }
            if (tau == 0 && !(std::abs(q[0]) < 1))
                failed[i] = 2;
        });
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (failed[i] == 2)
                out.collapses_to_disc = false;
            if (failed[i] != 0 || !(values[i] < 0)) {
                out.witnesses.emplace_back(tau, pts[i]);
                continue;
            }
            out.max_value = std::max(out.max_value, values[i]);
        }
    }
    out.pass = out.samples > 0 && out.witnesses.empty() && out.collapses_to_disc;
    return out;
}

HermitianExpr gradient_identity_residual(const HermitianExpr& phi)
{
    if (phi.dim() != 2)
        throw DimensionMismatch("gradient_identity_residual: two-dimensional defining function expected");
    const int n = 2;
    const HermitianExpr z1 = HermitianExpr::z(n, 0);
    const HermitianExpr z2 = HermitianExpr::z(n, 1);
    const HermitianExpr one = HermitianExpr::constant(n, 1);
    return (z1 - one) * wirtinger(phi, 0, Wirtinger::holo) +
           rational(1, 2) * (z2 * wirtinger(phi, 1, Wirtinger::holo)) - one + HermitianExpr::zbar(n, 0) - phi;
}

GradientIdentityReport gradient_identity_check(const DomainSpec& d, std::size_t numeric_points, std::uint64_t seed,
                                               double tolerance)
{
    GradientIdentityReport out;
    out.residual = gradient_identity_residual(d.rho());
    out.normalized_terms = out.residual.is_zero()
                               ? 0
                               : clear_terms(out.residual.terms(), out.residual.registry(), out.residual.dim(), true)
                                     .numerator.size();
    out.pass = out.normalized_terms == 0;

    const BoundarySample s = sample_boundary(d, numeric_points, seed);
    out.numeric_points = s.points.size();
    for (const auto& p : s.points) {
        const Eigen::VectorXcd g = d.gradient(p);
        const std::complex<double> rhs = (-0.5 * p[1] * g[1] + 1.0 - std::conj(p[0])) / (p[0] - 1.0);
        out.numeric_max_diff = std::max(out.numeric_max_diff, std::abs(g[0] - rhs) / (1 + std::abs(g[0])));
    }
    out.numeric_pass = out.numeric_points > 0 && out.numeric_max_diff <= tolerance;
    return out;
}

ParameterInventory disc_inventory()
{
    return {"Aut(unit disc)", {{"translation parameter a in the disc", 2}, {"rotation", 1}}, 3, 1};
}

ParameterInventory circular_quartic_inventory(int n)
{
    if (n < 3)
        throw PreconditionError("circular_quartic_inventory: n must be at least 3");
    const int m = n - 2;
    ParameterInventory inv;
    inv.group = "Aut(circular quartic domain in C^" + std::to_string(n) + ")";
    inv.entries.push_back({"ball parameter a in B^" + std::to_string(m), 2 * m});
    inv.entries.push_back({m == 1 ? "phase phi_1 on z_1" : "unitary block U(" + std::to_string(m) + ")", m * m});
    inv.entries.push_back({"common phase phi_2 on the last two coordinates", 1});
    for (const auto& e : inv.entries)
        inv.dimension += e.real_dim;
    inv.components = 4;
    return inv;
}

} // namespace levilab
