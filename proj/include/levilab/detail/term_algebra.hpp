#pragma once

// Term-level operations shared by HermitianExpr and RadicalMap. These work on
// raw TermMaps and admit quarter-power radicals; callers validate.

#include <map>
#include <string>
#include <vector>

#include "levilab/hermitian_expr.hpp"

namespace levilab::detail {

Monomial unit_monomial(int n);

void normalize_monomial(Monomial& m, const Registry& reg);

Monomial monomial_product(const Monomial& a, const Monomial& b, const Registry& reg);

/// Adds c*m into `into`, erasing the entry when it cancels.
void accumulate(TermMap& into, const Monomial& m, const GaussianRational& c);

TermMap term_sum(const TermMap& a, const TermMap& b);
TermMap term_product(const TermMap& a, const TermMap& b, const Registry& reg);
TermMap term_power(const TermMap& a, int k, int n, const Registry& reg);
TermMap conjugate_terms(const TermMap& a, const Registry& reg);
TermMap scale_terms(const TermMap& a, const GaussianRational& c);

/// Registers `base`, returning the id it lives under (an existing id with
/// identical content wins; a clashing id gets a fresh suffix).
std::string register_base(Registry& reg, const BaseFactor& base);

/// Merges `from` into `into`; returns base renames to apply to terms of `from`.
std::map<std::string, std::string> merge_registry(Registry& into, const Registry& from);

TermMap rename_bases(const TermMap& terms, const std::map<std::string, std::string>& renames, const Registry& reg);

/// Drops registry entries not referenced by `terms`.
void prune_registry(Registry& reg, const TermMap& terms);

bool has_radicals(const TermMap& terms);

/// d/dz_j of a holomorphic polynomial.
TermMap holomorphic_derivative(const TermMap& poly, int j);

struct ClearedTerms {
    TermMap numerator;
    /// whole-unit power s_b of (b conj(b)) (or of b for real-positive bases)
    std::map<std::string, int> shifts;
};

/// See clear_denominators. With keep_fractional the residual quarter powers
/// (0..3 quarters) stay on the terms; otherwise any residue throws.
ClearedTerms clear_terms(const TermMap& terms, const Registry& reg, int n, bool keep_fractional);

/// Substitutes z_j -> images[j] (holomorphic, over n_in variables, registered
/// in `out_reg`) into `src`. `out_reg` receives the source parameters and any
/// composed base factors.
TermMap compose(const TermMap& src, const Registry& src_reg, int n_in, const std::vector<TermMap>& images,
                Registry& out_reg, const std::string& tag);

/// Replaces parameters by exact values; writes the resulting registry.
TermMap specialize_terms(const TermMap& terms, const Registry& reg, int n,
                         const std::map<std::string, GaussianRational>& values, Registry& out_reg);

std::string monomial_to_string(const Monomial& m);

} // namespace levilab::detail
