#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Core>

#include "levilab/errors.hpp"
#include "levilab/hermitian_expr.hpp"

namespace levilab {

template <typename Scalar>
using PointT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
using Point = PointT<double>;

template <typename Scalar>
using ParamValuesT = std::map<std::string, std::complex<Scalar>>;
using ParamValues = ParamValuesT<double>;

namespace detail {

template <typename Scalar>
std::complex<Scalar> ipow(std::complex<Scalar> z, int k)
{
    if (k < 0)
        return Scalar(1) / ipow(z, -k);
    std::complex<Scalar> result(1);
    for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
        if (e & 1U)
            result *= z;
        if (e > 1)
            z *= z;
    }
    return result;
}

template <typename Scalar>
bool near_real_axis(const std::complex<Scalar>& w)
{
    return std::abs(w.imag()) <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() * std::abs(w);
}

/// Logarithm with the cut placed according to `branch`.
template <typename Scalar>
std::complex<Scalar> branch_log(const std::complex<Scalar>& w, Branch branch, const std::string& id)
{
    if (w == std::complex<Scalar>(0))
        throw BranchCutError("base '" + id + "' vanishes under a fractional power");
    Scalar arg = std::arg(w);
    if (branch == Branch::positive_axis_cut) {
        if (near_real_axis(w) && w.real() > 0)
            throw BranchCutError("base '" + id + "' lies on the positive real axis (branch cut)");
        if (arg <= 0)
            arg += Scalar(2) * std::numbers::pi_v<Scalar>;
    } else if (near_real_axis(w) && w.real() < 0) {
        throw BranchCutError("base '" + id + "' lies on the negative real axis (branch cut)");
    }
    return {std::log(std::abs(w)), arg};
}

/// w^(quarters/4) under the branch rule.
template <typename Scalar>
std::complex<Scalar> fractional_power(const std::complex<Scalar>& w, int quarters, Branch branch, const std::string& id)
{
    if (quarters % kQuarters == 0) {
        if (quarters < 0 && w == std::complex<Scalar>(0))
            throw BranchCutError("pole of base '" + id + "'");
        return ipow(w, quarters / kQuarters);
    }
    if (w == std::complex<Scalar>(0)) {
        if (quarters < 0)
            throw BranchCutError("pole of base '" + id + "'");
        return Scalar(0);
    }
    return std::exp(Scalar(quarters) / Scalar(kQuarters) * branch_log(w, branch, id));
}

/// b^(holo/4) * conj(b)^(anti/4); the paired part is evaluated through |b|.
template <typename Scalar>
std::complex<Scalar> radical_value(const std::complex<Scalar>& w, RadicalExponent e, Branch branch, bool real_positive,
                                   const std::string& id)
{
    if (real_positive) {
        if (!(near_real_axis(w) && w.real() > 0))
            throw BranchCutError("real-positive base '" + id + "' is not positive at this point");
        return std::pow(w.real(), Scalar(e.holo) / Scalar(kQuarters));
    }
    const int paired = std::min(e.holo, e.anti);
    std::complex<Scalar> value(1);
    if (paired != 0) {
        const Scalar modulus = std::abs(w);
        if (modulus == 0 && paired < 0)
            throw BranchCutError("pole of base '" + id + "'");
        value = std::pow(modulus, Scalar(2 * paired) / Scalar(kQuarters));
    }
    if (e.holo != paired)
        value *= fractional_power(w, e.holo - paired, branch, id);
    if (e.anti != paired)
        value *= std::conj(fractional_power(w, e.anti - paired, branch, id));
    return value;
}

} // namespace detail

/// Floating-point evaluator with parameter values bound at construction.
/// Immutable and safe to share across threads.
template <typename Scalar = double>
class CompiledExpr {
public:
    CompiledExpr() = default;

    explicit CompiledExpr(const HermitianExpr& e, const ParamValuesT<Scalar>& params = {})
        : CompiledExpr(e.dim(), e.terms(), e.registry(), params)
    {
    }

    /// Raw term form; quarter-power radicals are allowed (map components).
    CompiledExpr(int n, const TermMap& terms, const Registry& reg, const ParamValuesT<Scalar>& params = {}) : n_(n)
    {
        std::map<std::string, int> base_index;
        for (const auto& [id, base] : reg.bases) {
            CompiledBase cb;
            cb.id = id;
            cb.branch = base.branch;
            cb.real_positive = base.real_positive;
            for (const auto& [m, c] : base.poly)
                cb.poly.push_back({coefficient(m, c, params, reg), m.alpha});
            base_index[id] = static_cast<int>(bases_.size());
            bases_.push_back(std::move(cb));
        }
        for (const auto& [m, c] : terms) {
            CompiledTerm t{coefficient(m, c, params, reg), m.alpha, m.beta, {}};
            for (const auto& [id, r] : m.radicals)
                t.radicals.emplace_back(base_index.at(id), r);
            terms_.push_back(std::move(t));
        }
    }

    int dim() const { return n_; }

    std::complex<Scalar> operator()(const PointT<Scalar>& p) const
    {
        if (p.size() != n_)
            throw DimensionMismatch("CompiledExpr: point dimension differs from expression dimension");
        std::vector<std::complex<Scalar>> base_values;
        base_values.reserve(bases_.size());
        for (const auto& b : bases_) {
            std::complex<Scalar> v(0);
            for (const auto& [c, alpha] : b.poly)
                v += c * monomial(p, alpha, nullptr);
            base_values.push_back(v);
        }
        std::complex<Scalar> total(0);
        for (const auto& t : terms_) {
            std::complex<Scalar> v = t.coeff * monomial(p, t.alpha, &t.beta);
            for (const auto& [idx, r] : t.radicals) {
                const auto& b = bases_[static_cast<std::size_t>(idx)];
                v *= detail::radical_value(base_values[static_cast<std::size_t>(idx)], r, b.branch, b.real_positive,
                                           b.id);
            }
            total += v;
        }
        return total;
    }

private:
    struct CompiledBase {
        std::string id;
        Branch branch = Branch::positive_axis_cut;
        bool real_positive = false;
        std::vector<std::pair<std::complex<Scalar>, std::vector<int>>> poly;
    };
    struct CompiledTerm {
        std::complex<Scalar> coeff;
        std::vector<int> alpha;
        std::vector<int> beta;
        std::vector<std::pair<int, RadicalExponent>> radicals;
    };

    static std::complex<Scalar> monomial(const PointT<Scalar>& p, const std::vector<int>& alpha,
                                         const std::vector<int>* beta)
    {
        std::complex<Scalar> v(1);
        for (Eigen::Index k = 0; k < p.size(); ++k) {
            const auto kk = static_cast<std::size_t>(k);
            if (alpha[kk] != 0)
                v *= detail::ipow(p[k], alpha[kk]);
            if (beta != nullptr && (*beta)[kk] != 0)
                v *= detail::ipow(std::conj(p[k]), (*beta)[kk]);
        }
        return v;
    }

    static std::complex<Scalar> coefficient(const Monomial& m, const GaussianRational& c,
                                            const ParamValuesT<Scalar>& params, const Registry& reg)
    {
        std::complex<Scalar> v(static_cast<Scalar>(c.re().get_d()), static_cast<Scalar>(c.im().get_d()));
        for (const auto& [atom, exp] : m.params) {
            auto it = params.find(atom.name);
            if (it == params.end())
                throw UnassignedParameter("parameter '" + atom.name + "' has no value");
            std::complex<Scalar> value = atom.conjugated ? std::conj(it->second) : it->second;
            const Scalar tol = Scalar(1e-12) * std::max(Scalar(1), std::abs(value));
            switch (reg.params.at(atom.name)) {
            case ParamKind::real:
                if (std::abs(value.imag()) > tol)
                    throw PreconditionError("real parameter '" + atom.name + "' given a non-real value");
                break;
            case ParamKind::unimodular:
                if (std::abs(std::abs(value) - Scalar(1)) > tol)
                    throw PreconditionError("unimodular parameter '" + atom.name + "' given a value off the circle");
                break;
            case ParamKind::complex:
                break;
            }
            v *= detail::ipow(value, exp);
        }
        return v;
    }

    int n_ = 0;
    std::vector<CompiledBase> bases_;
    std::vector<CompiledTerm> terms_;
};

template <typename Scalar>
std::complex<Scalar> evaluate(const HermitianExpr& e, const PointT<Scalar>& p, const ParamValuesT<Scalar>& params = {})
{
    return CompiledExpr<Scalar>(e, params)(p);
}

inline Point make_point(std::initializer_list<std::complex<double>> coords)
{
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index k = 0;
    for (const auto& c : coords)
        p[k++] = c;
    return p;
}

} // namespace levilab
