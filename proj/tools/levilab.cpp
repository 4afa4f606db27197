#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "levilab/catalog.hpp"
#include "levilab/errors.hpp"
#include "levilab/io.hpp"
#include "levilab/suites.hpp"

using namespace levilab;

namespace {

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

void emit_json(const Json& j, const std::string& out)
{
    emit(j.dump(2) + "\n", out);
}

/// Catalog name or path to a domain JSON file.
CatalogEntry resolve_entry(const std::string& arg)
{
    for (const auto& name : catalog_names())
        if (name == arg)
            return catalog_entry(name);
    CatalogEntry e{domain_from_json(read_json_file(arg)), "", {}, {}, {}, {}, {}};
    return e;
}

/// "[[re, im], ...]" or "x1,x2,..." with real coordinates.
Point parse_point(const std::string& s)
{
    if (!s.empty() && s.front() == '[')
        return point_from_json(Json::parse(s));
    std::vector<double> xs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        xs.push_back(std::stod(item));
    Point p(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t k = 0; k < xs.size(); ++k)
        p[static_cast<Eigen::Index>(k)] = xs[k];
    return p;
}

/// "a=0.9" or "a=0.3:0.4" (real:imag).
std::pair<std::string, std::complex<double>> parse_param(const std::string& s)
{
    const auto eq = s.find('=');
    if (eq == std::string::npos)
        throw PreconditionError("parameter '" + s + "' must look like name=value");
    const std::string value = s.substr(eq + 1);
    const auto colon = value.find(':');
    if (colon == std::string::npos)
        return {s.substr(0, eq), std::stod(value)};
    return {s.substr(0, eq), {std::stod(value.substr(0, colon)), std::stod(value.substr(colon + 1))}};
}

Json entry_json(const CatalogEntry& e)
{
    Json families = Json::array();
    for (const auto& f : e.families) {
        Json battery = Json::array();
        for (const auto& params : f.battery) {
            Json b = Json::object();
            for (const auto& [k, v] : params)
                b[k] = to_json(v);
            battery.push_back(std::move(b));
        }
        families.push_back({{"name", f.name},
                            {"target", f.target},
                            {"map", to_json(f.map)},
                            {"multiplier", f.multiplier ? to_json(*f.multiplier) : Json(nullptr)},
                            {"battery", std::move(battery)}});
    }
    Json manifest = Json::object();
    const Manifest& m = e.manifest;
    if (m.lattice_rank)
        manifest["lattice_rank"] = *m.lattice_rank;
    if (m.circular)
        manifest["circular"] = *m.circular;
    if (m.reinhardt)
        manifest["reinhardt"] = *m.reinhardt;
    if (m.pseudoconvex)
        manifest["pseudoconvex"] = *m.pseudoconvex;
    if (m.bounded)
        manifest["bounded"] = *m.bounded;
    if (m.aut_dimension)
        manifest["aut_dimension"] = *m.aut_dimension;
    return {{"description", e.description},
            {"domain", to_json(e.domain)},
            {"families", std::move(families)},
            {"manifest", std::move(manifest)}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"levilab: exact and sampled checks on domains defined by Hermitian polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    SuiteOptions suite;
    std::string out;

    auto add_suite_flags = [&](CLI::App* cmd) {
        cmd->add_option("--samples", suite.samples, "boundary samples")->capture_default_str();
        cmd->add_option("--seed", suite.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--levi-tol", suite.levi_tolerance, "Levi value tolerance")->capture_default_str();
        cmd->add_option("--boundary-tol", suite.boundary_tolerance, "|rho| bound on mapped boundary points")
            ->capture_default_str();
        cmd->add_option("--eigen-floor", suite.eigenvalue_floor, "lowest accepted restricted eigenvalue")
            ->capture_default_str();
        cmd->add_option("--gradient-floor", suite.gradient_floor, "lowest accepted gradient norm")->capture_default_str();
        cmd->add_option("--out", out, "write JSON here instead of stdout");
    };

    auto* thm1 = app.add_subcommand("verify-thm1", "circular quartic domain in C^3");
    add_suite_flags(thm1);
    auto* thm2 = app.add_subcommand("verify-thm2", "bounded non-pseudoconvex domain and its unbounded model");
    add_suite_flags(thm2);

    int classify_n = 3;
    bool classify_table_only = false;
    auto* classify = app.add_subcommand("classify", "automorphism dimensions of normalized Reinhardt models");
    classify->add_option("--n", classify_n, "complex dimension, 1..6")->capture_default_str();
    classify->add_flag("--csv", classify_table_only, "print only the CSV table");
    classify->add_option("--out", out, "write the JSON verdict here");

    std::string domain_arg;
    std::string point_arg;
    auto* levi = app.add_subcommand("levi", "Levi form restricted to the complex tangent space");
    levi->add_option("--domain", domain_arg, "catalog name or domain JSON file")->required();
    levi->add_option("--point", point_arg, "x1,x2,... or [[re,im],...]")->required();
    levi->add_option("--out", out);

    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    auto* strat = app.add_subcommand("stratify", "Levi rank histogram over boundary samples");
    strat->add_option("--domain", domain_arg, "catalog name or domain JSON file")->required();
    strat->add_option("--samples", samples)->capture_default_str();
    strat->add_option("--seed", seed)->capture_default_str();
    strat->add_option("--out", out);

    std::string family_name = "ball-shift";
    std::vector<std::string> param_args;
    std::string orbit_domain = "circular-quartic-3";
    auto* orb = app.add_subcommand("orbit", "boundary distance along an orbit of the base point");
    orb->add_option("--family", family_name)->capture_default_str();
    orb->add_option("--domain", orbit_domain, "catalog entry owning the family")->capture_default_str();
    orb->add_option("--params", param_args, "name=value or name=re:im, one per orbit step; default a = 1 - 10^-k, k = 1..6");
    orb->add_option("--point", point_arg, "base point (default origin)");
    orb->add_option("--seed", seed)->capture_default_str();
    orb->add_option("--out", out);

    auto* lattice = app.add_subcommand("lattice", "torus-invariance lattice");
    lattice->add_option("--domain", domain_arg, "catalog name or domain JSON file")->required();
    lattice->add_option("--out", out);

    std::string map_file;
    std::string target_arg;
    auto* mapscan = app.add_subcommand("map-scan", "check that a map sends one domain into another");
    mapscan->add_option("--map", map_file, "map JSON file")->required();
    mapscan->add_option("--source", domain_arg, "catalog name or domain JSON file")->required();
    mapscan->add_option("--target", target_arg, "catalog name or domain JSON file")->required();
    mapscan->add_option("--params", param_args, "name=value or name=re:im");
    mapscan->add_option("--samples", samples)->capture_default_str();
    mapscan->add_option("--seed", seed)->capture_default_str();
    mapscan->add_option("--out", out);

    std::string export_name;
    auto* catalog = app.add_subcommand("catalog", "built-in domains");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list entry names");
    auto* cat_export = catalog->add_subcommand("export", "export one entry as JSON");
    cat_export->add_option("name", export_name)->required();
    cat_export->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (thm1->parsed() || thm2->parsed()) {
            const VerificationReport r = thm1->parsed() ? circular_quartic_suite(suite) : nonpseudoconvex_suite(suite);
            emit_json(r.to_json(), out);
            for (const auto& c : r.checks)
                std::cerr << to_string(c.verdict) << "  " << c.id << "\n";
            std::cerr << "overall " << (r.overall_pass() ? "PASS" : "FAIL") << "\n";
            return r.overall_pass() ? 0 : 1;
        }
        if (classify->parsed()) {
            const std::string csv = classify_csv(classify_n);
            if (classify_table_only) {
                emit(csv, out);
                return 0;
            }
            std::cout << csv;
            emit_json(classify_json(classify_n), out);
            return 0;
        }
        if (levi->parsed()) {
            const CatalogEntry e = resolve_entry(domain_arg);
            emit_json(levi_json(e.domain, parse_point(point_arg)), out);
            return 0;
        }
        if (strat->parsed()) {
            const CatalogEntry e = resolve_entry(domain_arg);
            emit_json(stratify_json(e.domain, e.loci, samples, seed), out);
            return 0;
        }
        if (orb->parsed()) {
            const CatalogEntry e = resolve_entry(orbit_domain);
            const MapFamily& f = e.family(family_name);
            std::vector<ParamValues> seq;
            for (const auto& a : param_args) {
                const auto [name, value] = parse_param(a);
                seq.push_back({{name, value}});
            }
            if (seq.empty())
                for (int k = 1; k <= 6; ++k)
                    seq.push_back({{"a", 1 - std::pow(10.0, -k)}});
            const Point p0 = point_arg.empty() ? Point(Point::Zero(e.domain.dim())) : parse_point(point_arg);
            emit_json(orbit_json(orbit(f.map, e.domain, p0, seq, 32, seed), family_name), out);
            return 0;
        }
        if (lattice->parsed()) {
            emit_json(lattice_json(resolve_entry(domain_arg).domain), out);
            return 0;
        }
        if (mapscan->parsed()) {
            const RadicalMap f = map_from_json(read_json_file(map_file));
            ParamValues params;
            for (const auto& a : param_args) {
                const auto [name, value] = parse_param(a);
                params[name] = value;
            }
            SignScanOptions so;
            so.interior_samples = samples;
            so.boundary_samples = samples;
            so.seed = seed;
            const SignPreservation s =
                sign_preservation_scan(CompiledMap(f, params), resolve_entry(domain_arg).domain,
                                       resolve_entry(target_arg).domain, so);
            Json iw = Json::array();
            for (const auto& p : s.interior_witnesses)
                iw.push_back(to_json(p));
            Json bw = Json::array();
            for (const auto& p : s.boundary_witnesses)
                bw.push_back(to_json(p));
            emit_json({{"map", f.name()},
                       {"pass", s.pass},
                       {"interior_checked", s.interior_checked},
                       {"boundary_checked", s.boundary_checked},
                       {"max_interior_value", s.max_interior_value},
                       {"max_boundary_abs", s.max_boundary_abs},
                       {"interior_witnesses", iw},
                       {"boundary_witnesses", bw}},
                      out);
            return s.pass ? 0 : 1;
        }
        if (cat_list->parsed()) {
            for (const auto& name : catalog_names())
                std::cout << name << "\n";
            return 0;
        }
        if (cat_export->parsed()) {
            emit_json(entry_json(catalog_entry(export_name)), out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "levilab: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
