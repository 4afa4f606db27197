#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "levilab/evaluate.hpp"
#include "levilab/hermitian_expr.hpp"
#include "levilab/lattice.hpp"

namespace levilab {

/// Domain {rho < 0} with its first and mixed second derivatives precompiled.
/// Copies share the immutable payload.
class DomainSpec {
public:
    /// Throws PreconditionError when rho is not real, carries parameters, or
    /// an anchor is not interior.
    DomainSpec(std::string name, HermitianExpr rho, std::vector<Point> interior_anchors,
               std::vector<Point> known_bad_points = {}, double bad_point_radius = 1e-3);

    const std::string& name() const { return data_->name; }
    int dim() const { return data_->rho.dim(); }
    const HermitianExpr& rho() const { return data_->rho; }
    const std::vector<Point>& interior_anchors() const { return data_->anchors; }
    const std::vector<Point>& known_bad_points() const { return data_->bad_points; }
    double bad_point_radius() const { return data_->bad_radius; }

    /// d rho / d z_j
    const HermitianExpr& derivative(int j) const { return data_->grad[static_cast<std::size_t>(j)]; }
    /// d^2 rho / d z_j d conj(z_k)
    const HermitianExpr& mixed_derivative(int j, int k) const
    {
        return data_->levi[static_cast<std::size_t>(j * dim() + k)];
    }

    /// Re rho(p).
    double value(const Point& p) const { return data_->rho_c(p).real(); }
    Eigen::VectorXcd gradient(const Point& p) const;
    /// L(j, k) = d^2 rho / d z_j d conj(z_k) at p.
    Eigen::MatrixXcd levi_matrix(const Point& p) const;
    bool near_bad_point(const Point& p) const;

private:
    struct Data {
        std::string name;
        HermitianExpr rho;
        std::vector<Point> anchors;
        std::vector<Point> bad_points;
        double bad_radius = 0;
        CompiledExpr<double> rho_c;
        std::vector<HermitianExpr> grad;
        std::vector<CompiledExpr<double>> grad_c;
        std::vector<HermitianExpr> levi;
        std::vector<CompiledExpr<double>> levi_c;
    };
    std::shared_ptr<const Data> data_;
};

/// Orthonormal basis (columns) of {v : sum_j v_j grad_j = 0}.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
tangent_basis(const Eigen::MatrixBase<Derived>& grad)
{
    using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = grad.size();
    Matrix normal = grad.conjugate();
    Eigen::HouseholderQR<Matrix> qr(normal);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    return q.rightCols(n - 1);
}

/// Matrix of v -> sum L(j,k) v_j conj(v_k) in the given basis: B^H L^T B.
template <typename DerivedL, typename DerivedB>
Eigen::Matrix<typename DerivedL::Scalar, Eigen::Dynamic, Eigen::Dynamic>
restricted_levi_matrix(const Eigen::MatrixBase<DerivedL>& levi, const Eigen::MatrixBase<DerivedB>& basis)
{
    return basis.adjoint() * levi.transpose() * basis;
}

struct LeviOptions {
    double boundary_tolerance = 1e-8;
    double gradient_tolerance = 1e-12;
    /// |lambda| < rank_tolerance * (1 + spectral norm) counts as zero
    double rank_tolerance = 1e-8;
};

struct LeviSignature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

struct LeviReport {
    Point point;
    double rho_value = 0;
    Eigen::VectorXcd grad;
    Eigen::MatrixXcd levi_matrix;
    Eigen::MatrixXcd tangent_basis;
    /// ascending, raw (no division by |grad|)
    Eigen::VectorXd restricted_eigenvalues;
    double zero_threshold = 0;
    int rank = 0;
    LeviSignature signature;
};

/// Throws DegenerateGradient when |grad| is below tolerance and
/// PreconditionError when p is off the boundary.
LeviReport levi_restricted(const DomainSpec& d, const Point& p, const LeviOptions& opts = {});

/// L(v) for v = (-rho_{z2}/rho_{z1}, 1); two-dimensional domains only.
double canonical_tangent_levi(const DomainSpec& d, const Point& p);

struct SamplerConfig {
    /// Empty: use the domain's interior anchors. Sample i uses anchor i mod size.
    std::vector<Point> anchors;
    double max_radius = 10.0;
    int march_steps = 256;
    int bisection_steps = 50;
    int max_attempts = 64;
    double tolerance = 1e-10;
};

struct BoundarySample {
    std::vector<Point> points;
    /// Ray directions that never left the domain within max_radius.
    std::vector<Point> non_exiting_directions;
    std::size_t rejected_near_bad_points = 0;
    /// Indices that exhausted max_attempts.
    std::vector<std::size_t> failed_indices;
};

/// Ray bisection from interior anchors; deterministic for a given seed and
/// independent of the thread count.
BoundarySample sample_boundary(const DomainSpec& d, std::size_t count, std::uint64_t seed,
                               const SamplerConfig& config = {});

/// Points a uniform fraction of the way to the first boundary crossing along
/// random rays, kept only when rho < 0.
std::vector<Point> sample_interior(const DomainSpec& d, std::size_t count, std::uint64_t seed,
                                   const SamplerConfig& config = {});

/// Distance to the first boundary crossing from p along direction `dir`
/// (exponential search then bisection), or nullopt within max_distance.
std::optional<double> ray_exit_distance(const DomainSpec& d, const Point& p, const Point& dir, double max_distance = 10.0);

/// Minimum exit distance over the outward gradient direction plus
/// `random_probes` random directions.
double boundary_distance(const DomainSpec& d, const Point& p, int random_probes = 32, std::uint64_t seed = 0);

struct LocusPredicate {
    int rank = 0;
    std::string name;
    std::function<double(const Point&)> distance;
    double tolerance = 1e-6;
};

struct StratificationReport {
    std::size_t sample_size = 0;
    std::map<int, std::size_t> rank_counts;
    std::map<int, Point> representatives;
    std::map<std::string, std::size_t> locus_hits;
    /// deficient-rank samples outside every supplied locus of that rank
    std::vector<Point> witnesses;
    std::vector<int> witness_ranks;
    std::vector<Point> degenerate_points;
    double min_eigenvalue = 0;
    Point min_eigenvalue_point;
};

StratificationReport stratify(const DomainSpec& d, const std::vector<Point>& samples,
                              const std::vector<LocusPredicate>& loci, const LeviOptions& opts = {});

struct PseudoconvexityScan {
    double min_eigenvalue = 0;
    Point witness;
    std::size_t evaluated = 0;
};

PseudoconvexityScan pseudoconvexity_scan(const DomainSpec& d, const std::vector<Point>& samples,
                                         const LeviOptions& opts = {});

struct GradientScan {
    double min_norm = 0;
    Point witness;
    std::size_t evaluated = 0;
    std::size_t skipped_near_bad_points = 0;
};

/// Smoothness evidence: smallest |grad rho| over samples away from the
/// known bad points.
GradientScan gradient_scan(const DomainSpec& d, const std::vector<Point>& samples);

struct ExponentPair {
    std::vector<int> alpha;
    std::vector<int> beta;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

struct InvarianceLattice {
    int rank = 0;
    /// rows in Hermite normal form
    IntMatrix basis;
    /// monomials with alpha != beta (they break full torus invariance)
    std::vector<ExponentPair> witness_violations;
    bool reinhardt = false;
    bool circular = false;
};

/// Integer kernel of the rows (alpha - beta); throws PreconditionError for
/// radical-bearing input.
InvarianceLattice torus_invariance_lattice(const HermitianExpr& rho);
inline InvarianceLattice torus_invariance_lattice(const DomainSpec& d) { return torus_invariance_lattice(d.rho()); }

/// Factors whose nonnegativity is evident from their shape.
struct PositiveConstant {
    GaussianRational value;
};
struct ModulusPower {
    int variable = 0;
    int k = 1; ///< |z_variable|^(2k)
};
struct BaseModulusPower {
    BaseFactor base;
    int k2 = 2; ///< |b|^(k2), k2 may be odd
};
struct RealSquare {
    HermitianExpr value; ///< must be real; contributes value^2
};
using CertificateFactor = std::variant<PositiveConstant, ModulusPower, BaseModulusPower, RealSquare>;

struct CertificateTerm {
    std::string label;
    std::vector<CertificateFactor> factors;
};

/// Claims rho + constant = sum of terms, each a product of nonnegative factors.
struct BoundednessCertificate {
    GaussianRational constant;
    std::vector<CertificateTerm> terms;
};

struct BoundednessReport {
    bool identity_holds = false;
    bool bounded = false;
    /// per-coordinate modulus bound, nullopt when no term controls it
    std::vector<std::optional<double>> box;
    std::string residual;
};

/// Throws PreconditionError when a factor is not syntactically nonnegative.
BoundednessReport boundedness_certificate(const DomainSpec& d, const BoundednessCertificate& cert);
HermitianExpr expand_certificate_term(int n, const CertificateTerm& term);

struct SampledBoundedness {
    double max_norm = 0;
    std::vector<Point> unbounded_directions;
    std::size_t probes = 0;
};

/// Coordinate-axis probes (+-e_j, +-i e_j) from every anchor plus `budget`
/// random boundary samples.
SampledBoundedness boundedness_sampling(const DomainSpec& d, std::size_t budget, std::uint64_t seed,
                                        const SamplerConfig& config = {});

} // namespace levilab
