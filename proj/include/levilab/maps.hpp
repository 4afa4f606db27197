#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "levilab/evaluate.hpp"
#include "levilab/geometry.hpp"
#include "levilab/hermitian_expr.hpp"

namespace levilab {

using ExactParams = std::map<std::string, GaussianRational>;

/// b^(quarters/4); quarters may be odd here.
struct MapFactor {
    BaseFactor base;
    int quarters = 0;
};

/// coefficient * prod b^(quarters/4); coefficient must be holomorphic.
struct MapTerm {
    HermitianExpr coefficient;
    std::vector<MapFactor> radicals;
};

/// Holomorphic map C^n_in -> C^n_out whose components are sums of monomials
/// times quarter powers of registered base factors.
class RadicalMap {
public:
    RadicalMap() = default;
    /// Throws PreconditionError when a component depends on conj(z).
    RadicalMap(std::string name, int n_in, std::vector<TermMap> components, Registry registry,
               std::string param_range = {});

    static RadicalMap from_terms(std::string name, int n_in, const std::vector<std::vector<MapTerm>>& components,
                                 std::string param_range = {});
    static RadicalMap identity(int n);
    static RadicalMap linear(std::string name, const LinearSubstitution& m);

    const std::string& name() const { return name_; }
    int n_in() const { return n_in_; }
    int n_out() const { return static_cast<int>(components_.size()); }
    const std::vector<TermMap>& components() const { return components_; }
    const Registry& registry() const { return registry_; }
    const std::map<std::string, ParamKind>& params() const { return registry_.params; }
    /// Human-readable legal range of the parameters.
    const std::string& param_range() const { return param_range_; }
    bool has_radicals() const;

    std::string component_to_string(int k) const;

private:
    std::string name_;
    int n_in_ = 0;
    std::vector<TermMap> components_;
    Registry registry_;
    std::string param_range_;
};

RadicalMap specialize(const RadicalMap& f, const ExactParams& values);

/// E o F in the source variables. Throws PairingError when a radical power of
/// the result is not a half-integer, and when E itself carries radicals while
/// F does (composition of radicals is not supported).
HermitianExpr pullback(const HermitianExpr& e, const RadicalMap& f);

/// Floating-point evaluation of a map with bound parameters.
class CompiledMap {
public:
    CompiledMap() = default;
    explicit CompiledMap(const RadicalMap& f, const ParamValues& params = {});

    int n_in() const { return n_in_; }
    int n_out() const { return static_cast<int>(components_.size()); }
    Point operator()(const Point& p) const;

private:
    int n_in_ = 0;
    std::vector<CompiledExpr<double>> components_;
};

/// p -> outer(inner(p)).
std::function<Point(const Point&)> compose_numeric(const CompiledMap& outer, const CompiledMap& inner);

ParamValues to_numeric(const ExactParams& values);

struct MultiplierOptions {
    /// Boundary plus interior samples used to check m > 0.
    std::size_t positivity_samples = 256;
    /// Random parameter values for the float sweep; 0 disables it.
    std::size_t sweep_parameters = 100;
    std::size_t sweep_points_per_parameter = 4;
    double sweep_tolerance = 1e-9;
    /// Reject battery values with |a| >= 1 for complex and real parameters.
    bool require_unit_disc = true;
    /// false: skip the exact specializations (radical-bearing source with a
    /// radical map) and rely on positivity plus the float sweep.
    bool exact = true;
    std::uint64_t seed = 0;
};

struct SpecializationOutcome {
    ExactParams values;
    bool exact_checked = false;
    bool identity_holds = false;
    std::size_t residual_terms = 0;
    std::string residual;
    bool multiplier_positive = false;
    double multiplier_min = 0;
};

struct MultiplierCheck {
    bool pass = false;
    std::vector<SpecializationOutcome> outcomes;
    std::size_t sweep_evaluations = 0;
    double sweep_max_residual = 0;
    bool sweep_pass = true;
};

/// Checks pullback(rho_dst, F) - m * rho_src == 0 exactly at each battery
/// specialization, and m > 0 on sampled points of the source closure.
MultiplierCheck multiplier_identity_check(const RadicalMap& f, const DomainSpec& src, const HermitianExpr& rho_dst,
                                          const HermitianExpr& m, const std::vector<ExactParams>& battery,
                                          const MultiplierOptions& opts = {});

struct SignPreservation {
    bool pass = false;
    std::size_t interior_checked = 0;
    std::size_t boundary_checked = 0;
    /// largest rho_dst over interior images (must stay negative)
    double max_interior_value = 0;
    double max_boundary_abs = 0;
    std::vector<Point> interior_witnesses;
    std::vector<Point> boundary_witnesses;
    std::vector<Point> branch_failures;
};

struct SignScanOptions {
    std::size_t interior_samples = 1000;
    std::size_t boundary_samples = 1000;
    double boundary_tolerance = 1e-6;
    std::uint64_t seed = 0;
};

/// Interior samples of src must map to rho_dst < 0 and boundary samples to
/// |rho_dst| <= tolerance.
SignPreservation sign_preservation_scan(const CompiledMap& f, const DomainSpec& src, const DomainSpec& dst,
                                        const SignScanOptions& opts = {});

struct OrbitReport {
    std::vector<ParamValues> params;
    std::vector<Point> points;
    std::vector<double> distances;
    bool strictly_decreasing = false;
    Point limit_estimate;
};

/// F_a(p0) along the parameter sequence with probe-minimum boundary distances.
OrbitReport orbit(const RadicalMap& family, const DomainSpec& d, const Point& p0,
                  const std::vector<ParamValues>& sequence, int probes = 32, std::uint64_t seed = 0);

struct RetractionReport {
    bool pass = false;
    std::vector<double> taus;
    std::size_t samples = 0;
    double max_value = 0;
    std::vector<std::pair<double, Point>> witnesses;
    /// tau = 0 images have z_2..z_n = 0 and |z_1| < 1
    bool collapses_to_disc = true;
};

/// rho(z_1, tau z_2, ..., tau z_n) < 0 for sampled interior points.
RetractionReport retraction_check(const DomainSpec& d, const std::vector<double>& taus, std::size_t samples,
                                  std::uint64_t seed = 0);

/// (z_1 - 1) phi_{z1} + (z_2 / 2) phi_{z2} - 1 + conj(z_1) - phi.
/// Zero exactly when the first-derivative identity holds on {phi = 0}.
HermitianExpr gradient_identity_residual(const HermitianExpr& phi);

struct GradientIdentityReport {
    bool pass = false;
    HermitianExpr residual;
    /// Terms left once radicals are cleared and like classes combined.
    std::size_t normalized_terms = 0;
    std::size_t numeric_points = 0;
    double numeric_max_diff = 0;
    bool numeric_pass = false;
};

/// Exact residual plus a float comparison of phi_{z1} against
/// (-(z_2/2) phi_{z2} + 1 - conj(z_1)) / (z_1 - 1) at boundary samples.
GradientIdentityReport gradient_identity_check(const DomainSpec& d, std::size_t numeric_points = 100,
                                               std::uint64_t seed = 0, double tolerance = 1e-9);

struct InventoryEntry {
    std::string name;
    int real_dim = 0;
};

struct ParameterInventory {
    std::string group;
    std::vector<InventoryEntry> entries;
    int dimension = 0;
    int components = 1;
};

/// Disc automorphisms z -> e^{i t} (z - a) / (1 - conj(a) z).
ParameterInventory disc_inventory();

/// Automorphisms of the circular quartic domain in C^n (n >= 3): a ball
/// automorphism in z_1..z_{n-2} and a phase on (z_{n-1}, z_n), times the
/// swap/sign choices on the last two coordinates.
ParameterInventory circular_quartic_inventory(int n = 3);

} // namespace levilab
