#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "levilab/gaussian_rational.hpp"

namespace levilab {

/// How a formal parameter behaves under complex conjugation.
///   complex    : `a` and `conj(a)` are independent symbols
///   real       : conj(a) = a
///   unimodular : conj(u) = u^-1, so exponents live in Z
enum class ParamKind { complex, real, unimodular };

/// Branch rule for unpaired fractional powers of a base factor.
///   positive_axis_cut : argument taken in (0, 2*pi)
///   principal         : argument taken in (-pi, pi)
enum class Branch { positive_axis_cut, principal };

enum class Wirtinger { holo, anti };

/// Radical exponents are counted in quarters, so {4, 0} is b and {2, 2} is |b|.
/// Expressions only admit even counts (half-integer powers); map components
/// may carry odd counts.
inline constexpr int kQuarters = 4;

struct RadicalExponent {
    int holo = 0;
    int anti = 0;
    auto operator<=>(const RadicalExponent&) const = default;
};

struct ParamAtom {
    std::string name;
    bool conjugated = false;
    auto operator<=>(const ParamAtom&) const = default;
};

/// z^alpha * conj(z)^beta * (parameter monomial) * prod b^holo conj(b)^anti.
/// Ordering is lexicographic on (alpha, beta, params, radicals).
struct Monomial {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<std::pair<ParamAtom, int>> params;
    std::vector<std::pair<std::string, RadicalExponent>> radicals;
    auto operator<=>(const Monomial&) const = default;
};

using TermMap = std::map<Monomial, GaussianRational>;

/// A holomorphic polynomial that may appear under a fractional power.
struct BaseFactor {
    std::string id;
    TermMap poly;
    std::map<std::string, ParamKind> param_kinds;
    Branch branch = Branch::positive_axis_cut;
    /// z-free and positive wherever used; conj(b) is identified with b and
    /// powers are real.
    bool real_positive = false;

    bool same_content(const BaseFactor& other) const
    {
        return poly == other.poly && branch == other.branch && real_positive == other.real_positive;
    }
};

struct Registry {
    std::map<std::string, BaseFactor> bases;
    std::map<std::string, ParamKind> params;

    friend bool operator==(const Registry& a, const Registry& b);
};

/// Exact real-analytic expression in z_1..z_n and their conjugates.
///
/// Coefficients are Gaussian rationals, formal parameters enter as monomials,
/// and registered base factors may appear to half-integer powers. Instances
/// are immutable and always normalized: like terms combined, zeros dropped,
/// registry pruned to the entries actually referenced.
class HermitianExpr {
public:
    HermitianExpr() = default;
    explicit HermitianExpr(int n);
    /// Normalizes; throws PairingError on a quarter-power radical.
    HermitianExpr(int n, TermMap terms, Registry registry);

    static HermitianExpr constant(int n, const GaussianRational& c);
    /// z_j, zero-based.
    static HermitianExpr z(int n, int j);
    static HermitianExpr zbar(int n, int j);
    static HermitianExpr param(int n, const std::string& name, ParamKind kind, bool conjugated = false);
    /// b^(holo2/2) * conj(b)^(anti2/2).
    static HermitianExpr radical(int n, const BaseFactor& base, int holo2, int anti2);

    int dim() const { return n_; }
    const TermMap& terms() const { return terms_; }
    const Registry& registry() const { return registry_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool has_radicals() const;
    bool has_params() const { return !registry_.params.empty(); }
    /// Total degree |alpha| + |beta| of every term, or -1 when mixed.
    int homogeneous_degree() const;

    /// Structural equality of normalized representatives. Use `equivalent`
    /// for mathematical equality across different radical presentations.
    friend bool operator==(const HermitianExpr& a, const HermitianExpr& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_ && a.registry_ == b.registry_;
    }

    std::string to_string() const;

private:
    int n_ = 0;
    TermMap terms_;
    Registry registry_;
};

BaseFactor make_base(const std::string& id, const HermitianExpr& poly, Branch branch = Branch::positive_axis_cut,
                     bool real_positive = false);

HermitianExpr add(const HermitianExpr& a, const HermitianExpr& b);
HermitianExpr sub(const HermitianExpr& a, const HermitianExpr& b);
HermitianExpr mul(const HermitianExpr& a, const HermitianExpr& b);
HermitianExpr scale(const HermitianExpr& a, const GaussianRational& c);
HermitianExpr pow(const HermitianExpr& a, int exponent);
HermitianExpr conjugate(const HermitianExpr& e);

inline HermitianExpr operator+(const HermitianExpr& a, const HermitianExpr& b) { return add(a, b); }
inline HermitianExpr operator-(const HermitianExpr& a, const HermitianExpr& b) { return sub(a, b); }
inline HermitianExpr operator*(const HermitianExpr& a, const HermitianExpr& b) { return mul(a, b); }
inline HermitianExpr operator-(const HermitianExpr& a) { return scale(a, -1); }
inline HermitianExpr operator*(const GaussianRational& c, const HermitianExpr& a) { return scale(a, c); }

/// Formal d/dz_j or d/dconj(z_j), zero-based j.
HermitianExpr wirtinger(const HermitianExpr& e, int j, Wirtinger kind);

/// Numerator and positive multiplier with e * multiplier == numerator.
struct Cleared {
    HermitianExpr numerator;
    HermitianExpr multiplier;
};

/// Multiplies by the smallest power of prod |b|^2 that makes every radical
/// exponent nonnegative and expands integer powers. Throws PairingError when a
/// half-integer power survives.
Cleared clear_denominators(const HermitianExpr& e);

/// Zero test modulo the presentation of radicals: like clear_denominators but
/// half-integer remainders are kept as independent classes.
bool is_identically_zero(const HermitianExpr& e);
bool equivalent(const HermitianExpr& a, const HermitianExpr& b);

/// E == conjugate(E) up to presentation.
bool is_real(const HermitianExpr& e);

/// Replaces formal parameters by exact values. Complex values for `real`
/// parameters and non-unimodular values for `unimodular` ones are rejected.
HermitianExpr specialize(const HermitianExpr& e, const std::map<std::string, GaussianRational>& values);

/// z -> M z, with every entry a z-free holomorphic expression (constant or
/// parameter monomial).
struct LinearSubstitution {
    int n = 0;
    std::vector<std::vector<HermitianExpr>> entries;

    static LinearSubstitution identity(int n);
    /// new z_j = sign_j * z_{perm[j]}
    static LinearSubstitution signed_permutation(const std::vector<int>& perm, const std::vector<int>& signs);
    /// Accepts entries whose parts are exact rationals with denominator at
    /// most 2^20; throws PreconditionError otherwise.
    static LinearSubstitution from_complex(const Eigen::MatrixXcd& m);
};

/// E(Mz). Base factors are composed too and re-registered under `tag` when
/// their polynomial changes.
HermitianExpr substitute_linear(const HermitianExpr& e, const LinearSubstitution& m, const std::string& tag = "M");

/// Exact value at a Gaussian-rational point. Radicals must combine to integer
/// powers of b and conj(b).
GaussianRational evaluate_exact(const HermitianExpr& e, const std::vector<GaussianRational>& point,
                                const std::map<std::string, GaussianRational>& params = {});

} // namespace levilab
