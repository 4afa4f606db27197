#include "levilab/catalog.hpp"

#include <cmath>
#include <sstream>

#include "levilab/errors.hpp"

namespace levilab {

const MapFamily& CatalogEntry::family(const std::string& name) const
{
    for (const auto& f : families)
        if (f.name == name)
            return f;
    throw PreconditionError("catalog entry '" + domain.name() + "' has no family '" + name + "'");
}

namespace {

HermitianExpr modulus2(int n, int j)
{
    return HermitianExpr::z(n, j) * HermitianExpr::zbar(n, j);
}

HermitianExpr one(int n)
{
    return HermitianExpr::constant(n, 1);
}

Point origin(int n)
{
    return Point::Zero(n);
}

std::vector<ExactParams> disc_battery()
{
    return {{{"a", rational(1, 2)}},
            {{"a", rational(-2, 5)}},
            {{"a", gaussian(1, 3, 1, 3)}},
            {{"a", gaussian(0, 1, 3, 4)}},
            {{"a", rational(0)}}};
}

std::vector<ExactParams> interval_battery()
{
    return {{{"a", rational(1, 2)}},
            {{"a", rational(-2, 5)}},
            {{"a", rational(3, 4)}},
            {{"a", rational(-1, 3)}},
            {{"a", rational(0)}}};
}

} // namespace

HermitianExpr circular_quartic_rho(int n)
{
    if (n < 3)
        throw PreconditionError("circular_quartic: n must be at least 3");
    HermitianExpr rho = -one(n);
    for (int j = 0; j < n - 2; ++j)
        rho = rho + modulus2(n, j);
    const int u = n - 2;
    const int v = n - 1;
    const HermitianExpr cross = HermitianExpr::zbar(n, u) * HermitianExpr::z(n, v) +
                                HermitianExpr::zbar(n, v) * HermitianExpr::z(n, u);
    return rho + pow(modulus2(n, u), 2) + pow(modulus2(n, v), 2) + pow(cross, 2);
}

RadicalMap ball_shift_family(int n)
{
    if (n < 3)
        throw PreconditionError("ball_shift_family: n must be at least 3");
    const HermitianExpr a = HermitianExpr::param(n, "a", ParamKind::complex);
    const HermitianExpr abar = HermitianExpr::param(n, "a", ParamKind::complex, true);
    const BaseFactor B = make_base("1-conj(a)*z1", one(n) - abar * HermitianExpr::z(n, 0), Branch::principal);
    const BaseFactor C = make_base("1-|a|^2", one(n) - a * abar, Branch::principal, true);

    std::vector<std::vector<MapTerm>> comps;
    comps.push_back({MapTerm{HermitianExpr::z(n, 0) - a, {{B, -4}}}});
    for (int j = 1; j < n - 2; ++j)
        comps.push_back({MapTerm{HermitianExpr::z(n, j), {{C, 2}, {B, -4}}}});
    for (int j = n - 2; j < n; ++j)
        comps.push_back({MapTerm{HermitianExpr::z(n, j), {{C, 1}, {B, -2}}}});
    return RadicalMap::from_terms("ball-shift", n, comps, "a complex, |a| < 1");
}

HermitianExpr ball_shift_multiplier(int n)
{
    const HermitianExpr a = HermitianExpr::param(n, "a", ParamKind::complex);
    const HermitianExpr abar = HermitianExpr::param(n, "a", ParamKind::complex, true);
    const BaseFactor B = make_base("1-conj(a)*z1", one(n) - abar * HermitianExpr::z(n, 0), Branch::principal);
    return (one(n) - a * abar) * HermitianExpr::radical(n, B, -2, -2);
}

std::vector<LinearSubstitution> circular_quartic_linear_automorphisms(int n)
{
    if (n < 3)
        throw PreconditionError("circular_quartic_linear_automorphisms: n must be at least 3");
    const HermitianExpr u1 = HermitianExpr::param(n, "u1", ParamKind::unimodular);
    const HermitianExpr u2 = HermitianExpr::param(n, "u2", ParamKind::unimodular);
    std::vector<LinearSubstitution> out;
    for (bool swap : {false, true}) {
        for (int sign : {1, -1}) {
            LinearSubstitution m;
            m.n = n;
            m.entries.assign(static_cast<std::size_t>(n), std::vector<HermitianExpr>(static_cast<std::size_t>(n), HermitianExpr(n)));
            for (int j = 0; j < n - 2; ++j)
                m.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = u1;
            const auto u = static_cast<std::size_t>(n - 2);
            const auto v = static_cast<std::size_t>(n - 1);
            m.entries[u][swap ? v : u] = u2;
            m.entries[v][swap ? u : v] = GaussianRational(sign) * u2;
            out.push_back(std::move(m));
        }
    }
    return out;
}

CatalogEntry circular_quartic(int n)
{
    const HermitianExpr rho = circular_quartic_rho(n);
    CatalogEntry e{DomainSpec("circular-quartic-" + std::to_string(n), rho, {origin(n)}), {}, {}, {}, {}, {}, {}};
    e.description = "bounded circular domain with quartic coupling of the last two coordinates; non-Reinhardt";
    e.families.push_back({"ball-shift", ball_shift_family(n), e.domain.name(), ball_shift_multiplier(n), disc_battery()});
    e.linear_automorphisms = circular_quartic_linear_automorphisms(n);

    const int m = n - 2;
    e.loci.push_back({m - 1, "circle", [n](const Point& p) {
                          return std::abs(p.head(n - 2).norm() - 1) + std::abs(p[n - 2]) + std::abs(p[n - 1]);
                      }});
    e.loci.push_back({m, "diagonal", [n](const Point& p) {
                          return std::min(std::abs(p[n - 2] - p[n - 1]), std::abs(p[n - 2] + p[n - 1]));
                      }});

    BoundednessCertificate cert{rational(1), {}};
    for (int j = 0; j < n - 2; ++j)
        cert.terms.push_back({"|z" + std::to_string(j + 1) + "|^2", {ModulusPower{j, 1}}});
    cert.terms.push_back({"|z" + std::to_string(n - 1) + "|^4", {ModulusPower{n - 2, 2}}});
    cert.terms.push_back({"|z" + std::to_string(n) + "|^4", {ModulusPower{n - 1, 2}}});
    cert.terms.push_back({"cross^2", {RealSquare{HermitianExpr::zbar(n, n - 2) * HermitianExpr::z(n, n - 1) +
                                                 HermitianExpr::zbar(n, n - 1) * HermitianExpr::z(n, n - 2)}}});
    e.certificate = std::move(cert);

    e.manifest.lattice_rank = m + 1;
    e.manifest.circular = true;
    e.manifest.reinhardt = false;
    e.manifest.pseudoconvex = true;
    e.manifest.bounded = true;
    e.manifest.aut_dimension = circular_quartic_inventory(n).dimension;
    return e;
}

BaseFactor shifted_base()
{
    return make_base("z1-1", HermitianExpr::z(2, 0) - one(2));
}

namespace {

/// z_2^2/b - (3/2)|z_2|^2/|b| + conj(z_2)^2/conj(b), real-valued.
HermitianExpr nonpseudoconvex_inner()
{
    const int n = 2;
    const BaseFactor b = shifted_base();
    const HermitianExpr z2 = HermitianExpr::z(n, 1);
    const HermitianExpr w2 = HermitianExpr::zbar(n, 1);
    return z2 * z2 * HermitianExpr::radical(n, b, -2, 0) -
           rational(3, 2) * (z2 * w2) * HermitianExpr::radical(n, b, -1, -1) +
           w2 * w2 * HermitianExpr::radical(n, b, 0, -2);
}

} // namespace

HermitianExpr nonpseudoconvex_phi()
{
    const int n = 2;
    const HermitianExpr inner = nonpseudoconvex_inner();
    return modulus2(n, 0) + pow(modulus2(n, 1), 2) - one(n) +
           GaussianRational(8) * (HermitianExpr::radical(n, shifted_base(), 2, 2) * inner * inner);
}

RadicalMap real_shift_family()
{
    const int n = 2;
    const HermitianExpr a = HermitianExpr::param(n, "a", ParamKind::real);
    const BaseFactor B = make_base("1-a*z1", one(n) - a * HermitianExpr::z(n, 0), Branch::principal);
    const BaseFactor C = make_base("1-a^2", one(n) - a * a, Branch::principal, true);
    return RadicalMap::from_terms("real-shift", n,
                                  {{MapTerm{HermitianExpr::z(n, 0) - a, {{B, -4}}}},
                                   {MapTerm{HermitianExpr::z(n, 1), {{C, 1}, {B, -2}}}}},
                                  "a real, -1 < a < 1");
}

HermitianExpr real_shift_multiplier()
{
    const int n = 2;
    const HermitianExpr a = HermitianExpr::param(n, "a", ParamKind::real);
    const BaseFactor B = make_base("1-a*z1", one(n) - a * HermitianExpr::z(n, 0), Branch::principal);
    return (one(n) - a * a) * HermitianExpr::radical(n, B, -2, -2);
}

RadicalMap cayley_realization()
{
    const int n = 2;
    const BaseFactor b = shifted_base();
    const BaseFactor two = make_base("2", HermitianExpr::constant(n, 2), Branch::principal, true);
    return RadicalMap::from_terms("cayley", n,
                                  {{MapTerm{HermitianExpr::z(n, 0) + one(n), {{b, -4}}}},
                                   {MapTerm{HermitianExpr::z(n, 1), {{two, 2}, {b, -2}}}}});
}

HermitianExpr cayley_multiplier()
{
    return HermitianExpr::radical(2, shifted_base(), -2, -2);
}

Point cayley_inverse(const Point& w)
{
    if (w.size() != 2)
        throw DimensionMismatch("cayley_inverse: two coordinates expected");
    const std::complex<double> z1 = (w[0] + 1.0) / (w[0] - 1.0);
    const std::complex<double> root = detail::fractional_power(z1 - 1.0, 2, Branch::positive_axis_cut, "z1-1");
    return make_point({z1, w[1] * root / std::sqrt(2.0)});
}

CatalogEntry nonpseudoconvex_bounded()
{
    const int n = 2;
    CatalogEntry e{DomainSpec("nonpseudoconvex-bounded", nonpseudoconvex_phi(), {origin(n)}, {make_point({1.0, 0.0})}),
                   {}, {}, {}, {}, {}, {}};
    e.description = "bounded non-pseudoconvex domain, smooth except at (1, 0)";
    e.families.push_back({"real-shift", real_shift_family(), e.domain.name(), real_shift_multiplier(), interval_battery()});
    e.families.push_back({"cayley", cayley_realization(), "nonpseudoconvex-unbounded", cayley_multiplier(), {{}}});

    BoundednessCertificate cert{rational(1), {}};
    cert.terms.push_back({"|z1|^2", {ModulusPower{0, 1}}});
    cert.terms.push_back({"|z2|^4", {ModulusPower{1, 2}}});
    cert.terms.push_back({"8|z1-1|^2 inner^2",
                          {PositiveConstant{rational(8)}, BaseModulusPower{shifted_base(), 2},
                           RealSquare{nonpseudoconvex_inner()}}});
    e.certificate = std::move(cert);

    e.manifest.pseudoconvex = false;
    e.manifest.bounded = true;
    return e;
}

HermitianExpr nonpseudoconvex_model_polynomial()
{
    const int n = 2;
    const HermitianExpr z2 = HermitianExpr::z(n, 1);
    const HermitianExpr w2 = HermitianExpr::zbar(n, 1);
    const HermitianExpr q = z2 * z2 - rational(3, 2) * (z2 * w2) + w2 * w2;
    return rational(1, 4) * pow(z2 * w2, 2) + GaussianRational(2) * (q * q);
}

CatalogEntry halfspace_model(const HermitianExpr& P, const std::string& name)
{
    const int n = 2;
    if (P.dim() != n)
        throw DimensionMismatch("halfspace_model: P must be written in two variables");
    if (P.has_radicals() || P.has_params())
        throw PreconditionError("halfspace_model: P must be a polynomial without parameters");
    for (const auto& [m, c] : P.terms())
        if (m.alpha[0] != 0 || m.beta[0] != 0)
            throw PreconditionError("halfspace_model: P must depend on z2 only");
    if (!is_real(P))
        throw PreconditionError("halfspace_model: P is not real-valued");
    if (P.homogeneous_degree() <= 0)
        throw PreconditionError("halfspace_model: P must be homogeneous of positive degree");

    const HermitianExpr re_z1 = rational(1, 2) * (HermitianExpr::z(n, 0) + HermitianExpr::zbar(n, 0));
    CatalogEntry e{DomainSpec(name, re_z1 + P, {make_point({-1.0, 0.0})}), {}, {}, {}, {}, {}, {}};
    e.description = "unbounded model {Re z1 + P(z2) < 0}";
    e.manifest.bounded = false;
    return e;
}

CatalogEntry nonpseudoconvex_unbounded()
{
    CatalogEntry e = halfspace_model(nonpseudoconvex_model_polynomial(), "nonpseudoconvex-unbounded");
    e.description = "unbounded realization of nonpseudoconvex-bounded; negative Levi form at (-3/4, 1)";
    e.manifest.pseudoconvex = false;
    e.manifest.lattice_rank = 0;
    e.manifest.circular = false;
    e.manifest.reinhardt = false;
    return e;
}

CatalogEntry ellipsoid(const GaussianRational& alpha)
{
    if (!alpha.is_real() || sgn(alpha.re()) <= 0)
        throw PreconditionError("ellipsoid: alpha must be positive");
    if (alpha.re().get_den() != 1)
        throw PreconditionError("ellipsoid: exact mode requires an integer alpha; use ellipsoid_numeric");
    if (!alpha.re().get_num().fits_sint_p() || alpha.re().get_num() > 64)
        throw PreconditionError("ellipsoid: alpha too large");
    const int k = static_cast<int>(alpha.re().get_num().get_si());
    const int n = 2;
    const HermitianExpr rho = modulus2(n, 0) + pow(modulus2(n, 1), k) - one(n);
    CatalogEntry e{DomainSpec("ellipsoid-" + std::to_string(k), rho, {origin(n)}), {}, {}, {}, {}, {}, {}};
    e.description = "complex ellipsoid |z1|^2 + |z2|^" + std::to_string(2 * k) + " < 1";
    e.certificate = BoundednessCertificate{rational(1), {{"|z1|^2", {ModulusPower{0, 1}}},
                                                        {"|z2|^" + std::to_string(2 * k), {ModulusPower{1, k}}}}};
    e.manifest.lattice_rank = 2;
    e.manifest.circular = true;
    e.manifest.reinhardt = true;
    e.manifest.pseudoconvex = true;
    e.manifest.bounded = true;
    return e;
}

std::function<double(const Point&)> ellipsoid_numeric(double alpha)
{
    if (!(alpha > 0))
        throw PreconditionError("ellipsoid_numeric: alpha must be positive");
    return [alpha](const Point& p) {
        if (p.size() != 2)
            throw DimensionMismatch("ellipsoid_numeric: two coordinates expected");
        return std::norm(p[0]) + std::pow(std::abs(p[1]), 2 * alpha) - 1;
    };
}

ModelDomain model_domain(double R, double gamma)
{
    return {R, gamma};
}

std::vector<std::string> catalog_names()
{
    return {"circular-quartic-3", "circular-quartic-4", "nonpseudoconvex-bounded", "nonpseudoconvex-unbounded",
            "halfspace-quartic", "ellipsoid-1", "ellipsoid-2"};
}

CatalogEntry catalog_entry(const std::string& name)
{
    auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size())
            return std::nullopt;
        const std::string tail = name.substr(prefix.size());
        if (tail.find_first_not_of("0123456789") != std::string::npos || tail.size() > 3)
            return std::nullopt;
        return std::stoi(tail);
    };
    if (auto n = suffix_int("circular-quartic-"))
        return circular_quartic(*n);
    if (auto k = suffix_int("ellipsoid-"))
        return ellipsoid(rational(*k));
    if (name == "nonpseudoconvex-bounded")
        return nonpseudoconvex_bounded();
    if (name == "nonpseudoconvex-unbounded")
        return nonpseudoconvex_unbounded();
    if (name == "halfspace-quartic") {
        CatalogEntry e = halfspace_model(pow(modulus2(2, 1), 2), "halfspace-quartic");
        e.manifest.pseudoconvex = true;
        e.manifest.lattice_rank = 1;
        e.manifest.circular = false;
        e.manifest.reinhardt = false;
        return e;
    }
    throw PreconditionError("unknown catalog entry '" + name + "'");
}

std::vector<ManifestCheck> validate_manifest(const CatalogEntry& entry, std::size_t samples, std::uint64_t seed)
{
    std::vector<ManifestCheck> out;
    auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
    const DomainSpec& d = entry.domain;
    const Manifest& m = entry.manifest;

    if (m.lattice_rank || m.circular || m.reinhardt) {
        const InvarianceLattice lat = torus_invariance_lattice(d);
        if (m.lattice_rank)
            out.push_back({"lattice_rank", std::to_string(*m.lattice_rank), std::to_string(lat.rank),
                           lat.rank == *m.lattice_rank});
        if (m.circular)
            out.push_back({"circular", yes_no(*m.circular), yes_no(lat.circular), lat.circular == *m.circular});
        if (m.reinhardt)
            out.push_back({"reinhardt", yes_no(*m.reinhardt), yes_no(lat.reinhardt), lat.reinhardt == *m.reinhardt});
    }
    if (m.bounded) {
        bool observed = false;
        if (entry.certificate) {
            observed = boundedness_certificate(d, *entry.certificate).bounded;
        } else {
            const SampledBoundedness s = boundedness_sampling(d, samples / 4 + 1, seed);
            observed = s.unbounded_directions.empty();
        }
        out.push_back({"bounded", yes_no(*m.bounded), yes_no(observed), observed == *m.bounded});
    }
    if (m.pseudoconvex) {
        const BoundarySample b = sample_boundary(d, samples, seed);
        const PseudoconvexityScan scan = pseudoconvexity_scan(d, b.points);
        const bool observed = scan.min_eigenvalue >= -1e-9;
        std::ostringstream os;
        os << yes_no(observed) << " (min eigenvalue " << scan.min_eigenvalue << ")";
        out.push_back({"pseudoconvex", yes_no(*m.pseudoconvex), os.str(), observed == *m.pseudoconvex});
    }
    if (m.aut_dimension) {
        const int n = d.dim();
        const int observed = circular_quartic_inventory(n).dimension;
        out.push_back({"aut_dimension", std::to_string(*m.aut_dimension), std::to_string(observed),
                       observed == *m.aut_dimension});
    }
    return out;
}

} // namespace levilab
