#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "levilab/geometry.hpp"
#include "levilab/maps.hpp"
#include "levilab/reinhardt.hpp"

namespace levilab {

/// A map family attached to a catalog domain. `multiplier` is empty when
/// only numeric sign checks apply.
struct MapFamily {
    std::string name;
    RadicalMap map;
    std::string target;
    std::optional<HermitianExpr> multiplier;
    std::vector<ExactParams> battery;
};

/// Properties the entry claims; each is re-checked by validate_manifest.
struct Manifest {
    std::optional<int> lattice_rank;
    std::optional<bool> circular;
    std::optional<bool> reinhardt;
    std::optional<bool> pseudoconvex;
    std::optional<bool> bounded;
    std::optional<int> aut_dimension;
};

struct CatalogEntry {
    DomainSpec domain;
    std::string description;
    std::vector<MapFamily> families;
    std::vector<LinearSubstitution> linear_automorphisms;
    std::vector<LocusPredicate> loci;
    std::optional<BoundednessCertificate> certificate;
    Manifest manifest;

    const MapFamily& family(const std::string& name) const;
};

/// sum_{j <= n-2} |z_j|^2 + |z_{n-1}|^4 + |z_n|^4 + (conj(z_{n-1}) z_n + conj(z_n) z_{n-1})^2 - 1, n >= 3.
HermitianExpr circular_quartic_rho(int n = 3);
CatalogEntry circular_quartic(int n = 3);

/// Ball-shift family: z_1 -> (z_1 - a)/(1 - conj(a) z_1), middle coordinates
/// scaled by (1 - |a|^2)^(1/2)/(1 - conj(a) z_1), the last two by
/// (1 - |a|^2)^(1/4)/(1 - conj(a) z_1)^(1/2).
RadicalMap ball_shift_family(int n = 3);
/// (1 - |a|^2) / |1 - conj(a) z_1|^2.
HermitianExpr ball_shift_multiplier(int n = 3);

/// z_1 -> u_1 z_1 (u_1 on every ball coordinate), last pair -> u_2 z_{sigma},
/// +-u_2 z_{sigma'}; four choices of (sigma, sign).
std::vector<LinearSubstitution> circular_quartic_linear_automorphisms(int n = 3);

/// |z_1|^2 + |z_2|^4 - 1 + 8 |z_1 - 1|^2 (z_2^2/(z_1-1) - (3/2)|z_2|^2/|z_1-1| + conj(z_2)^2/conj(z_1-1))^2.
HermitianExpr nonpseudoconvex_phi();
CatalogEntry nonpseudoconvex_bounded();

/// Base z_1 - 1 with the positive-axis cut, shared by phi and the Cayley map.
BaseFactor shifted_base();

/// z_1 -> (z_1 - a)/(1 - a z_1), z_2 -> (1 - a^2)^(1/4) z_2 / (1 - a z_1)^(1/2), real a.
RadicalMap real_shift_family();
HermitianExpr real_shift_multiplier();

/// (z_1, z_2) -> ((z_1 + 1)/(z_1 - 1), sqrt(2) z_2 / sqrt(z_1 - 1)).
RadicalMap cayley_realization();
/// |z_1 - 1|^-2, the multiplier from phi to the unbounded model.
HermitianExpr cayley_multiplier();
/// Inverse of cayley_realization on its image.
Point cayley_inverse(const Point& w);

/// Re z_1 + 1/4 |z_2|^4 + 2 (z_2^2 - 3/2 |z_2|^2 + conj(z_2)^2)^2.
HermitianExpr nonpseudoconvex_model_polynomial();
CatalogEntry nonpseudoconvex_unbounded();

/// {Re z_1 + P(z_2) < 0}; P real, homogeneous of positive degree, only in z_2.
CatalogEntry halfspace_model(const HermitianExpr& P, const std::string& name = "halfspace");

/// {|z_1|^2 + |z_2|^(2 alpha) < 1}; exact entries need an integer alpha.
CatalogEntry ellipsoid(const GaussianRational& alpha);

/// Numeric-only defining function for any alpha > 0.
std::function<double(const Point&)> ellipsoid_numeric(double alpha);

ModelDomain model_domain(double R, double gamma);

std::vector<std::string> catalog_names();
/// Throws PreconditionError for unknown names.
CatalogEntry catalog_entry(const std::string& name);

struct ManifestCheck {
    std::string key;
    std::string expected;
    std::string observed;
    bool pass = false;
};

/// Runs the checks the manifest refers to (lattice, certificate, pseudoconvexity
/// scan on `samples` boundary points, dimension inventory).
std::vector<ManifestCheck> validate_manifest(const CatalogEntry& entry, std::size_t samples = 500,
                                             std::uint64_t seed = 0);

} // namespace levilab
