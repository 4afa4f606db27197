#include "levilab/suites.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "levilab/errors.hpp"

namespace levilab {

namespace {

Json exponent_pair_json(const ExponentPair& e)
{
    return {{"alpha", e.alpha}, {"beta", e.beta}};
}

Json basis_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

Json complex_json(std::complex<double> z)
{
    return Json::array({z.real(), z.imag()});
}

Json params_json(const ParamValues& p)
{
    Json out = Json::object();
    for (const auto& [k, v] : p)
        out[k] = complex_json(v);
    return out;
}

Json exact_params_json(const ExactParams& p)
{
    Json out = Json::object();
    for (const auto& [k, v] : p)
        out[k] = v.to_string();
    return out;
}

/// Runs `body` and turns library errors into a FAIL record.
CheckRecord run_check(std::string id, std::string description, bool mandatory,
                      const std::function<void(CheckRecord&)>& body)
{
    CheckRecord c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.mandatory = mandatory;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.verdict = Verdict::fail;
        c.values["error"] = e.what();
    }
    return c;
}

Verdict pass_if(bool ok)
{
    return ok ? Verdict::pass : Verdict::fail;
}

Verdict evidence_if(bool ok)
{
    return ok ? Verdict::evidence : Verdict::fail;
}

Json multiplier_json(const MultiplierCheck& m)
{
    Json outcomes = Json::array();
    for (const auto& o : m.outcomes) {
        Json j{{"params", exact_params_json(o.values)},
               {"exact_checked", o.exact_checked},
               {"identity_holds", o.identity_holds},
               {"multiplier_positive", o.multiplier_positive},
               {"multiplier_min", o.multiplier_min}};
        if (!o.residual.empty())
            j["residual"] = o.residual;
        outcomes.push_back(std::move(j));
    }
    return {{"specializations", std::move(outcomes)},
            {"sweep_evaluations", m.sweep_evaluations},
            {"sweep_max_residual", m.sweep_max_residual}};
}

Json sign_json(const SignPreservation& s)
{
    return {{"interior_checked", s.interior_checked},
            {"boundary_checked", s.boundary_checked},
            {"max_interior_value", s.max_interior_value},
            {"max_boundary_abs", s.max_boundary_abs},
            {"interior_violations", s.interior_witnesses.size()},
            {"boundary_violations", s.boundary_witnesses.size()},
            {"branch_failures", s.branch_failures.size()}};
}

void add_witnesses(Json& out, const std::vector<Point>& pts, std::size_t limit = 10)
{
    for (std::size_t i = 0; i < pts.size() && i < limit; ++i)
        out.push_back(to_json(pts[i]));
}

std::vector<ParamValues> approach_sequence(double sign, int kmax)
{
    std::vector<ParamValues> seq;
    for (int k = 1; k <= kmax; ++k)
        seq.push_back({{"a", sign * (1 - std::pow(10.0, -k))}});
    return seq;
}

} // namespace

VerificationReport circular_quartic_suite(const SuiteOptions& opts)
{
    VerificationReport r;
    r.suite = "verify-thm1";
    r.parameters = {{"domain", "circular-quartic-3"}, {"samples", opts.samples}, {"seed", opts.seed}};

    const CatalogEntry entry = circular_quartic(3);
    const DomainSpec& d = entry.domain;
    const BoundarySample boundary = sample_boundary(d, opts.samples, opts.seed);

    r.checks.push_back(run_check("circularity_lattice", "torus-invariance lattice has rank 2, basis (1,0,0),(0,1,1)",
                                 true, [&](CheckRecord& c) {
                                     const InvarianceLattice lat = torus_invariance_lattice(d);
                                     IntMatrix expected(2, 3);
                                     expected << 1, 0, 0, 0, 1, 1;
                                     c.values = {{"rank", lat.rank},
                                                 {"basis", basis_json(lat.basis)},
                                                 {"circular", lat.circular},
                                                 {"reinhardt", lat.reinhardt}};
                                     c.verdict = pass_if(lat.rank == 2 && lat.basis == expected && lat.circular &&
                                                         !lat.reinhardt);
                                 }));

    r.checks.push_back(run_check("non_reinhardt_witness", "monomial z3^2 conj(z2)^2 breaks the full torus action",
                                 true, [&](CheckRecord& c) {
                                     const InvarianceLattice lat = torus_invariance_lattice(d);
                                     const ExponentPair target{{0, 0, 2}, {0, 2, 0}};
                                     bool found = false;
                                     for (const auto& w : lat.witness_violations) {
                                         c.witnesses.push_back(exponent_pair_json(w));
                                         found = found || w == target;
                                     }
                                     c.values = {{"violations", lat.witness_violations.size()}, {"target_found", found}};
                                     c.verdict = pass_if(found);
                                 }));

    r.checks.push_back(run_check("boundedness_certificate", "rho + 1 is a sum of evidently nonnegative terms", true,
                                 [&](CheckRecord& c) {
                                     const BoundednessReport b = boundedness_certificate(d, *entry.certificate);
                                     Json box = Json::array();
                                     for (const auto& x : b.box)
                                         box.push_back(x ? Json(*x) : Json(nullptr));
                                     c.values = {{"identity_holds", b.identity_holds}, {"box", box}};
                                     c.verdict = pass_if(b.bounded);
                                 }));

    r.checks.push_back(run_check("smoothness_scan", "gradient of rho stays away from zero on boundary samples", false,
                                 [&](CheckRecord& c) {
                                     const GradientScan g = gradient_scan(d, boundary.points);
                                     c.seed = opts.seed;
                                     c.values = {{"evaluated", g.evaluated}, {"min_gradient_norm", g.min_norm}};
                                     c.tolerances = {{"gradient_floor", opts.gradient_floor}};
                                     c.witnesses.push_back(to_json(g.witness));
                                     c.verdict = evidence_if(g.evaluated > 0 && g.min_norm >= opts.gradient_floor);
                                 }));

    r.checks.push_back(run_check("pseudoconvexity_scan", "restricted Levi eigenvalues are nonnegative on samples",
                                 false, [&](CheckRecord& c) {
                                     const PseudoconvexityScan s = pseudoconvexity_scan(d, boundary.points);
                                     c.seed = opts.seed;
                                     c.values = {{"evaluated", s.evaluated}, {"min_eigenvalue", s.min_eigenvalue}};
                                     c.tolerances = {{"eigenvalue_floor", opts.eigenvalue_floor}};
                                     c.witnesses.push_back(to_json(s.witness));
                                     c.verdict = evidence_if(s.evaluated > 0 && s.min_eigenvalue >= opts.eigenvalue_floor);
                                 }));

    r.checks.push_back(run_check("stratification", "deficient Levi rank only on the circle and diagonal loci", false,
                                 [&](CheckRecord& c) {
                                     const StratificationReport s = stratify(d, boundary.points, entry.loci);
                                     Json counts = Json::object();
                                     for (const auto& [rank, k] : s.rank_counts)
                                         counts[std::to_string(rank)] = k;
                                     Json hits = Json::object();
                                     for (const auto& [name, k] : s.locus_hits)
                                         hits[name] = k;
                                     c.seed = opts.seed;
                                     c.values = {{"sample_size", s.sample_size},
                                                 {"rank_counts", counts},
                                                 {"locus_hits", hits},
                                                 {"witness_count", s.witnesses.size()},
                                                 {"degenerate_points", s.degenerate_points.size()},
                                                 {"min_eigenvalue", s.min_eigenvalue}};
                                     c.tolerances = {{"locus_tolerance", 1e-6}, {"eigenvalue_floor", opts.eigenvalue_floor}};
                                     add_witnesses(c.witnesses, s.witnesses);
                                     c.verdict = evidence_if(s.witnesses.empty() && s.degenerate_points.empty() &&
                                                             s.min_eigenvalue >= opts.eigenvalue_floor);
                                 }));

    r.checks.push_back(run_check("ball_shift_multiplier",
                                 "|1 - conj(a) z1|^2 (rho o F_a) = (1 - |a|^2) rho exactly at the parameter battery", true,
                                 [&](CheckRecord& c) {
                                     const MapFamily& f = entry.family("ball-shift");
                                     MultiplierOptions mo;
                                     mo.seed = opts.seed;
                                     const MultiplierCheck m =
                                         multiplier_identity_check(f.map, d, d.rho(), *f.multiplier, f.battery, mo);
                                     c.seed = opts.seed;
                                     c.values = multiplier_json(m);
                                     c.tolerances = {{"exact", 0}, {"sweep", mo.sweep_tolerance}};
                                     c.verdict = pass_if(m.pass);
                                 }));

    r.checks.push_back(run_check("linear_automorphisms",
                                 "rho is invariant under the four phase/swap/sign linear families", true,
                                 [&](CheckRecord& c) {
                                     bool all = true;
                                     Json each = Json::array();
                                     for (const auto& m : entry.linear_automorphisms) {
                                         const bool ok = equivalent(substitute_linear(d.rho(), m), d.rho());
                                         each.push_back(ok);
                                         all = all && ok;
                                     }
                                     c.values = {{"families", entry.linear_automorphisms.size()}, {"invariant", each}};
                                     c.verdict = pass_if(all && entry.linear_automorphisms.size() == 4);
                                 }));

    r.checks.push_back(run_check("orbit_decay", "F_a(0) = (-a, 0, 0) approaches the boundary as a -> 1", true,
                                 [&](CheckRecord& c) {
                                     const auto seq = approach_sequence(1.0, 6);
                                     const OrbitReport o =
                                         orbit(entry.family("ball-shift").map, d, Point::Zero(3), seq, 32, opts.seed);
                                     bool closed_form = true;
                                     for (std::size_t i = 0; i < seq.size(); ++i) {
                                         const Point expected = make_point({-seq[i].at("a"), 0.0, 0.0});
                                         closed_form = closed_form && (o.points[i] - expected).norm() <= 1e-12;
                                     }
                                     c.seed = opts.seed;
                                     c.values = orbit_json(o, "ball-shift");
                                     c.values["closed_form_agrees"] = closed_form;
                                     c.tolerances = {{"final_distance", 1e-5}};
                                     c.verdict = pass_if(o.strictly_decreasing && o.distances.back() < 1e-5 && closed_form);
                                 }));

    r.checks.push_back(run_check("aut_dimension", "parameter count 4 with 4 components; 4 is not a Reinhardt dimension",
                                 true, [&](CheckRecord& c) {
                                     const ParameterInventory inv = circular_quartic_inventory(3);
                                     Json entries = Json::array();
                                     for (const auto& e : inv.entries)
                                         entries.push_back({{"name", e.name}, {"real_dim", e.real_dim}});
                                     const std::set<int> dims = achievable_dims(3);
                                     c.values = {{"dimension", inv.dimension},
                                                 {"components", inv.components},
                                                 {"inventory", entries},
                                                 {"reinhardt_dims_n3", dims}};
                                     c.verdict = pass_if(inv.dimension == 4 && inv.components == 4 && dims.count(4) == 0);
                                 }));
    return r;
}

VerificationReport nonpseudoconvex_suite(const SuiteOptions& opts)
{
    VerificationReport r;
    r.suite = "verify-thm2";
    r.parameters = {{"domain", "nonpseudoconvex-bounded"},
                    {"model", "nonpseudoconvex-unbounded"},
                    {"samples", opts.samples},
                    {"seed", opts.seed}};

    const CatalogEntry entry = nonpseudoconvex_bounded();
    const CatalogEntry model = nonpseudoconvex_unbounded();
    const DomainSpec& d = entry.domain;
    const BoundarySample boundary = sample_boundary(d, opts.samples, opts.seed);
    const std::size_t scan_samples = std::min<std::size_t>(opts.samples, 1000);

    r.checks.push_back(run_check("boundedness_certificate", "phi + 1 is a sum of evidently nonnegative terms", true,
                                 [&](CheckRecord& c) {
                                     const BoundednessReport b = boundedness_certificate(d, *entry.certificate);
                                     Json box = Json::array();
                                     for (const auto& x : b.box)
                                         box.push_back(x ? Json(*x) : Json(nullptr));
                                     c.values = {{"identity_holds", b.identity_holds}, {"box", box}};
                                     c.verdict = pass_if(b.bounded);
                                 }));

    r.checks.push_back(run_check("realness", "phi equals its conjugate and phi(0) = -1", true, [&](CheckRecord& c) {
        const bool real = is_real(d.rho());
        const double at_origin = d.value(Point::Zero(2));
        c.values = {{"is_real", real}, {"terms", d.rho().size()}, {"value_at_origin", at_origin}};
        c.verdict = pass_if(real && at_origin == -1.0);
    }));

    r.checks.push_back(run_check("gradient_identity",
                                 "(z1 - 1) phi_z1 + (z2/2) phi_z2 - 1 + conj(z1) equals phi, so vanishes on the boundary",
                                 true, [&](CheckRecord& c) {
                                     const GradientIdentityReport g = gradient_identity_check(d, 100, opts.seed);
                                     c.seed = opts.seed;
                                     c.values = {{"exact", g.pass},
                                                 {"residual_terms_raw", g.residual.size()},
                                                 {"residual_terms_normalized", g.normalized_terms},
                                                 {"numeric_points", g.numeric_points},
                                                 {"numeric_max_diff", g.numeric_max_diff}};
                                     if (!g.pass)
                                         c.values["residual"] = g.residual.to_string();
                                     c.tolerances = {{"exact", 0}, {"numeric", 1e-9}};
                                     c.verdict = pass_if(g.pass && g.numeric_pass);
                                 }));

    r.checks.push_back(run_check("smoothness_scan", "gradient nonvanishing on the boundary away from (1, 0)", false,
                                 [&](CheckRecord& c) {
                                     const GradientScan g = gradient_scan(d, boundary.points);
                                     const double at_minus_one = d.gradient(make_point({-1.0, 0.0})).norm();
                                     c.seed = opts.seed;
                                     c.values = {{"evaluated", g.evaluated},
                                                 {"skipped_near_bad_point", g.skipped_near_bad_points},
                                                 {"rejected_by_sampler", boundary.rejected_near_bad_points},
                                                 {"min_gradient_norm", g.min_norm},
                                                 {"gradient_norm_at_(-1,0)", at_minus_one}};
                                     c.tolerances = {{"gradient_floor", opts.gradient_floor}, {"exclusion_radius", d.bad_point_radius()}};
                                     c.witnesses.push_back(to_json(g.witness));
                                     c.verdict = evidence_if(g.evaluated > 0 && g.min_norm >= opts.gradient_floor &&
                                                             at_minus_one > 0);
                                 }));

    r.checks.push_back(run_check("real_shift_sign_preservation", "the real-shift map with a = 1/2 keeps the domain", true,
                                 [&](CheckRecord& c) {
                                     const MapFamily& f = entry.family("real-shift");
                                     SignScanOptions so;
                                     so.interior_samples = scan_samples;
                                     so.boundary_samples = scan_samples;
                                     so.boundary_tolerance = opts.boundary_tolerance;
                                     so.seed = opts.seed;
                                     const SignPreservation s = sign_preservation_scan(CompiledMap(f.map, {{"a", 0.5}}), d, d, so);
                                     MultiplierOptions mo;
                                     mo.exact = false;
                                     mo.seed = opts.seed;
                                     const MultiplierCheck m =
                                         multiplier_identity_check(f.map, d, d.rho(), *f.multiplier, f.battery, mo);
                                     c.seed = opts.seed;
                                     c.values = sign_json(s);
                                     c.values["multiplier_numeric"] = multiplier_json(m);
                                     c.tolerances = {{"boundary", opts.boundary_tolerance}, {"sweep", mo.sweep_tolerance}};
                                     add_witnesses(c.witnesses, s.interior_witnesses);
                                     add_witnesses(c.witnesses, s.boundary_witnesses);
                                     c.verdict = pass_if(s.pass && m.pass);
                                 }));

    r.checks.push_back(run_check("retraction", "(z1, tau z2) stays inside for tau in {0, 1/4, 1/2, 3/4, 1}", true,
                                 [&](CheckRecord& c) {
                                     const RetractionReport rr =
                                         retraction_check(d, {0.0, 0.25, 0.5, 0.75, 1.0}, scan_samples, opts.seed);
                                     c.seed = opts.seed;
                                     c.values = {{"taus", rr.taus},
                                                 {"samples", rr.samples},
                                                 {"max_value", rr.max_value},
                                                 {"collapses_to_disc", rr.collapses_to_disc}};
                                     for (std::size_t i = 0; i < rr.witnesses.size() && i < 10; ++i)
                                         c.witnesses.push_back({{"tau", rr.witnesses[i].first}, {"point", to_json(rr.witnesses[i].second)}});
                                     c.verdict = pass_if(rr.pass);
                                 }));

    r.checks.push_back(run_check("cayley_realization",
                                 "rho' o F = phi / |z1 - 1|^2 exactly; interior to interior, boundary to boundary", true,
                                 [&](CheckRecord& c) {
                                     const MapFamily& f = entry.family("cayley");
                                     MultiplierOptions mo;
                                     mo.seed = opts.seed;
                                     mo.sweep_parameters = 1;
                                     mo.sweep_points_per_parameter = 100;
                                     const MultiplierCheck m =
                                         multiplier_identity_check(f.map, d, model.domain.rho(), *f.multiplier, f.battery, mo);
                                     SignScanOptions so;
                                     so.interior_samples = scan_samples;
                                     so.boundary_samples = scan_samples;
                                     so.boundary_tolerance = opts.boundary_tolerance;
                                     so.seed = opts.seed;
                                     const CompiledMap fc(f.map);
                                     const SignPreservation s = sign_preservation_scan(fc, d, model.domain, so);
                                     double round_trip = 0;
                                     for (const auto& p : sample_interior(d, 100, opts.seed))
                                         round_trip = std::max(round_trip, (cayley_inverse(fc(p)) - p).norm());
                                     c.seed = opts.seed;
                                     c.values = sign_json(s);
                                     c.values["multiplier"] = multiplier_json(m);
                                     c.values["inverse_round_trip_max"] = round_trip;
                                     c.tolerances = {{"boundary", opts.boundary_tolerance}, {"round_trip", 1e-9}};
                                     add_witnesses(c.witnesses, s.interior_witnesses);
                                     add_witnesses(c.witnesses, s.boundary_witnesses);
                                     c.verdict = pass_if(m.pass && s.pass && round_trip <= 1e-9);
                                 }));

    r.checks.push_back(run_check("negative_levi_value", "canonical-tangent Levi value at (-3/4, 1) on the model is -1",
                                 true, [&](CheckRecord& c) {
                                     const Point p = make_point({-0.75, 1.0});
                                     const double value = canonical_tangent_levi(model.domain, p);
                                     const LeviReport lr = levi_restricted(model.domain, p);
                                     c.values = {{"point", to_json(p)},
                                                 {"rho", model.domain.value(p)},
                                                 {"canonical_tangent_levi", value},
                                                 {"restricted_eigenvalues", std::vector<double>(lr.restricted_eigenvalues.begin(), lr.restricted_eigenvalues.end())}};
                                     c.tolerances = {{"levi", opts.levi_tolerance}};
                                     c.verdict = pass_if(std::abs(value + 1) <= opts.levi_tolerance &&
                                                         model.domain.value(p) == 0.0 && lr.signature.negative == 1);
                                 }));

    r.checks.push_back(run_check("nonpseudoconvexity_scan", "some boundary sample has a negative restricted Levi eigenvalue",
                                 true, [&](CheckRecord& c) {
                                     const PseudoconvexityScan s = pseudoconvexity_scan(d, boundary.points);
                                     c.seed = opts.seed;
                                     c.values = {{"evaluated", s.evaluated}, {"min_eigenvalue", s.min_eigenvalue}};
                                     c.witnesses.push_back(to_json(s.witness));
                                     c.verdict = pass_if(s.evaluated > 0 && s.min_eigenvalue < 0);
                                 }));

    r.checks.push_back(run_check("orbit_accumulation", "real-shift orbits of 0 accumulate at (-1, 0) and (1, 0)", true,
                                 [&](CheckRecord& c) {
                                     const RadicalMap& fam = entry.family("real-shift").map;
                                     const OrbitReport left = orbit(fam, d, Point::Zero(2), approach_sequence(1.0, 6), 32, opts.seed);
                                     const OrbitReport right = orbit(fam, d, Point::Zero(2), approach_sequence(-1.0, 6), 32, opts.seed);
                                     const double left_gap = (left.limit_estimate - make_point({-1.0, 0.0})).norm();
                                     const double right_gap = (right.limit_estimate - make_point({1.0, 0.0})).norm();
                                     c.seed = opts.seed;
                                     c.values = {{"toward_minus_one", orbit_json(left, "real-shift")},
                                                 {"toward_plus_one", orbit_json(right, "real-shift")},
                                                 {"gap_to_(-1,0)", left_gap},
                                                 {"gap_to_(1,0)", right_gap}};
                                     c.tolerances = {{"final_distance", 1e-5}};
                                     c.verdict = pass_if(left.strictly_decreasing && right.strictly_decreasing &&
                                                         left.distances.back() < 1e-5 && right.distances.back() < 1e-5 &&
                                                         left_gap < 1e-5 && right_gap < 1e-5);
                                 }));
    return r;
}

std::string classify_csv(int n)
{
    if (n < 1 || n > 6)
        throw PreconditionError("classify: n must lie in 1..6");
    std::ostringstream os;
    os << "s,t,p,blocks,contributions,total\n";
    for (const auto& sig : enumerate_signatures(n)) {
        const DimReport d = dim_aut0(sig);
        os << sig.s << ',' << sig.t << ',' << sig.p << ',';
        for (std::size_t i = 0; i < sig.blocks.size(); ++i)
            os << (i ? ";" : "") << sig.blocks[i];
        os << ',';
        for (std::size_t i = 0; i < d.contributions.size(); ++i)
            os << (i ? ";" : "") << d.contributions[i];
        os << ',' << d.total << '\n';
    }
    return os.str();
}

Json classify_json(int n)
{
    if (n < 1 || n > 6)
        throw PreconditionError("classify: n must lie in 1..6");
    const std::set<int> dims = achievable_dims(n);
    std::vector<int> excluded;
    for (int k = 1; k <= *dims.rbegin(); ++k)
        if (dims.count(k) == 0)
            excluded.push_back(k);
    return {{"n", n},
            {"signature_count", enumerate_signatures(n).size()},
            {"achievable", dims},
            {"excluded", excluded},
            {"four_excluded", dims.count(4) == 0}};
}

Json lattice_json(const DomainSpec& d)
{
    const InvarianceLattice lat = torus_invariance_lattice(d);
    Json w = Json::array();
    for (const auto& e : lat.witness_violations)
        w.push_back(exponent_pair_json(e));
    return {{"domain", d.name()},
            {"rank", lat.rank},
            {"basis", basis_json(lat.basis)},
            {"circular", lat.circular},
            {"reinhardt", lat.reinhardt},
            {"witness_violations", w}};
}

Json levi_json(const DomainSpec& d, const Point& p, const LeviOptions& opts)
{
    const LeviReport r = levi_restricted(d, p, opts);
    Json grad = Json::array();
    for (Eigen::Index k = 0; k < r.grad.size(); ++k)
        grad.push_back(complex_json(r.grad[k]));
    Json out{{"domain", d.name()},
             {"point", to_json(p)},
             {"rho", r.rho_value},
             {"gradient", grad},
             {"restricted_eigenvalues", std::vector<double>(r.restricted_eigenvalues.begin(), r.restricted_eigenvalues.end())},
             {"zero_threshold", r.zero_threshold},
             {"rank", r.rank},
             {"signature", {{"positive", r.signature.positive}, {"negative", r.signature.negative}, {"zero", r.signature.zero}}}};
    if (d.dim() == 2)
        out["canonical_tangent_levi"] = canonical_tangent_levi(d, p);
    return out;
}

Json stratify_json(const DomainSpec& d, const std::vector<LocusPredicate>& loci, std::size_t samples,
                   std::uint64_t seed)
{
    const BoundarySample b = sample_boundary(d, samples, seed);
    const StratificationReport s = stratify(d, b.points, loci);
    Json counts = Json::object();
    for (const auto& [rank, k] : s.rank_counts)
        counts[std::to_string(rank)] = k;
    Json hits = Json::object();
    for (const auto& [name, k] : s.locus_hits)
        hits[name] = k;
    Json reps = Json::object();
    for (const auto& [rank, p] : s.representatives)
        reps[std::to_string(rank)] = to_json(p);
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < s.witnesses.size(); ++i)
        witnesses.push_back({{"rank", s.witness_ranks[i]}, {"point", to_json(s.witnesses[i])}});
    return {{"domain", d.name()},
            {"seed", seed},
            {"requested", samples},
            {"sample_size", s.sample_size},
            {"failed_samples", b.failed_indices.size()},
            {"rank_counts", counts},
            {"representatives", reps},
            {"locus_hits", hits},
            {"witnesses", witnesses},
            {"degenerate_points", s.degenerate_points.size()},
            {"min_eigenvalue", s.min_eigenvalue},
            {"min_eigenvalue_point", to_json(s.min_eigenvalue_point)}};
}

Json orbit_json(const OrbitReport& r, const std::string& family)
{
    Json params = Json::array();
    for (const auto& p : r.params)
        params.push_back(params_json(p));
    Json points = Json::array();
    for (const auto& p : r.points)
        points.push_back(to_json(p));
    return {{"family", family},
            {"params", params},
            {"points", points},
            {"distances", r.distances},
            {"strictly_decreasing", r.strictly_decreasing},
            {"limit_estimate", to_json(r.limit_estimate)}};
}

} // namespace levilab
