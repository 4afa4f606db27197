#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levilab/catalog.hpp"
#include "levilab/report.hpp"

namespace levilab {

struct SuiteOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double levi_tolerance = 1e-9;
    double boundary_tolerance = 1e-6;
    double eigenvalue_floor = -1e-9;
    double gradient_floor = 1e-6;
};

/// Circular quartic domain in C^3: lattice, non-Reinhardt witness,
/// boundedness, smoothness, pseudoconvexity, stratification, ball-shift
/// multiplier identity, linear automorphisms, orbit decay, dimension count.
VerificationReport circular_quartic_suite(const SuiteOptions& opts = {});

/// Non-pseudoconvex pair: boundedness, realness, gradient identity, smoothness
/// away from (1, 0), real-shift and Cayley sign preservation, retraction,
/// negative Levi value, orbit accumulation at (-1, 0) and (1, 0).
VerificationReport nonpseudoconvex_suite(const SuiteOptions& opts = {});

/// Dimension table as CSV: s,t,p,blocks,contributions,total.
std::string classify_csv(int n);
/// {"n", "achievable", "excluded", "signature_count"}; 1 <= n <= 6.
Json classify_json(int n);

Json lattice_json(const DomainSpec& d);
Json levi_json(const DomainSpec& d, const Point& p, const LeviOptions& opts = {});
Json stratify_json(const DomainSpec& d, const std::vector<LocusPredicate>& loci, std::size_t samples,
                   std::uint64_t seed);
Json orbit_json(const OrbitReport& r, const std::string& family);

} // namespace levilab
