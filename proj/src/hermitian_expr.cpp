#include "levilab/hermitian_expr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "levilab/detail/term_algebra.hpp"
#include "levilab/errors.hpp"

namespace levilab {

using namespace detail;

bool operator==(const Registry& a, const Registry& b)
{
    if (a.params != b.params || a.bases.size() != b.bases.size())
        return false;
    return std::equal(a.bases.begin(), a.bases.end(), b.bases.begin(), [](const auto& x, const auto& y) {
        return x.first == y.first && x.second.same_content(y.second);
    });
}

HermitianExpr::HermitianExpr(int n) : n_(n)
{
    if (n < 0)
        throw PreconditionError("HermitianExpr: negative dimension");
}

HermitianExpr::HermitianExpr(int n, TermMap terms, Registry registry) : n_(n), registry_(std::move(registry))
{
    if (n < 0)
        throw PreconditionError("HermitianExpr: negative dimension");
    for (const auto& [m, c] : terms) {
        if (m.alpha.size() != static_cast<std::size_t>(n) || m.beta.size() != static_cast<std::size_t>(n))
            throw DimensionMismatch("HermitianExpr: exponent vector length differs from n");
        if (std::any_of(m.alpha.begin(), m.alpha.end(), [](int a) { return a < 0; }) ||
            std::any_of(m.beta.begin(), m.beta.end(), [](int b) { return b < 0; }))
            throw PreconditionError("HermitianExpr: negative monomial exponent");
        Monomial normalized = m;
        normalize_monomial(normalized, registry_);
        for (const auto& [id, e] : normalized.radicals)
            if (e.holo % 2 != 0 || e.anti % 2 != 0)
                throw PairingError("radical exponent of base '" + id + "' is a quarter power, not a half-integer");
        accumulate(terms_, normalized, c);
    }
    prune_registry(registry_, terms_);
}

HermitianExpr HermitianExpr::constant(int n, const GaussianRational& c)
{
    TermMap t;
    accumulate(t, unit_monomial(n), c);
    return {n, std::move(t), {}};
}

HermitianExpr HermitianExpr::z(int n, int j)
{
    if (j < 0 || j >= n)
        throw PreconditionError("HermitianExpr::z: index out of range");
    Monomial m = unit_monomial(n);
    m.alpha[static_cast<std::size_t>(j)] = 1;
    return {n, TermMap{{m, GaussianRational(1)}}, {}};
}

HermitianExpr HermitianExpr::zbar(int n, int j)
{
    if (j < 0 || j >= n)
        throw PreconditionError("HermitianExpr::zbar: index out of range");
    Monomial m = unit_monomial(n);
    m.beta[static_cast<std::size_t>(j)] = 1;
    return {n, TermMap{{m, GaussianRational(1)}}, {}};
}

HermitianExpr HermitianExpr::param(int n, const std::string& name, ParamKind kind, bool conjugated)
{
    Registry reg;
    reg.params.emplace(name, kind);
    Monomial m = unit_monomial(n);
    m.params.emplace_back(ParamAtom{name, conjugated}, 1);
    return {n, TermMap{{m, GaussianRational(1)}}, std::move(reg)};
}

HermitianExpr HermitianExpr::radical(int n, const BaseFactor& base, int holo2, int anti2)
{
    if (!base.poly.empty() && base.poly.begin()->first.alpha.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("HermitianExpr::radical: base dimension differs from n");
    Registry reg;
    const std::string id = register_base(reg, base);
    Monomial m = unit_monomial(n);
    m.radicals.emplace_back(id, RadicalExponent{2 * holo2, 2 * anti2});
    return {n, TermMap{{m, GaussianRational(1)}}, std::move(reg)};
}

bool HermitianExpr::has_radicals() const { return detail::has_radicals(terms_); }

int HermitianExpr::homogeneous_degree() const
{
    int degree = -2;
    for (const auto& [m, c] : terms_) {
        const int d = std::accumulate(m.alpha.begin(), m.alpha.end(), 0) + std::accumulate(m.beta.begin(), m.beta.end(), 0);
        if (degree == -2)
            degree = d;
        else if (degree != d)
            return -1;
    }
    return degree == -2 ? 0 : degree;
}

std::string HermitianExpr::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.to_string();
        if (!c.is_real() && sgn(c.re()) != 0)
            coeff = "(" + coeff + ")";
        if (!out.empty())
            out += " + ";
        out += coeff + "*" + monomial_to_string(m);
    }
    return out;
}

BaseFactor make_base(const std::string& id, const HermitianExpr& poly, Branch branch, bool real_positive)
{
    if (poly.is_zero())
        throw PreconditionError("make_base: base polynomial '" + id + "' is identically zero");
    BaseFactor base;
    base.id = id;
    base.branch = branch;
    base.real_positive = real_positive;
    base.param_kinds = poly.registry().params;
    for (const auto& [m, c] : poly.terms()) {
        if (!m.radicals.empty() || std::any_of(m.beta.begin(), m.beta.end(), [](int b) { return b != 0; }))
            throw PreconditionError("make_base: base '" + id + "' must be a holomorphic polynomial");
        if (real_positive && std::any_of(m.alpha.begin(), m.alpha.end(), [](int a) { return a != 0; }))
            throw PreconditionError("make_base: real-positive base '" + id + "' must not depend on z");
    }
    base.poly = poly.terms();
    if (real_positive && !is_real(poly))
        throw PreconditionError("make_base: real-positive base '" + id + "' is not real");
    return base;
}

namespace {

void require_same_dim(const HermitianExpr& a, const HermitianExpr& b, const char* op)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
}

} // namespace

HermitianExpr add(const HermitianExpr& a, const HermitianExpr& b)
{
    require_same_dim(a, b, "add");
    Registry reg = a.registry();
    auto renames = merge_registry(reg, b.registry());
    return {a.dim(), term_sum(a.terms(), rename_bases(b.terms(), renames, reg)), std::move(reg)};
}

HermitianExpr sub(const HermitianExpr& a, const HermitianExpr& b) { return add(a, scale(b, -1)); }

HermitianExpr mul(const HermitianExpr& a, const HermitianExpr& b)
{
    require_same_dim(a, b, "mul");
    Registry reg = a.registry();
    auto renames = merge_registry(reg, b.registry());
    return {a.dim(), term_product(a.terms(), rename_bases(b.terms(), renames, reg), reg), std::move(reg)};
}

HermitianExpr scale(const HermitianExpr& a, const GaussianRational& c)
{
    return {a.dim(), scale_terms(a.terms(), c), a.registry()};
}

HermitianExpr pow(const HermitianExpr& a, int exponent)
{
    return {a.dim(), term_power(a.terms(), exponent, a.dim(), a.registry()), a.registry()};
}

HermitianExpr conjugate(const HermitianExpr& e)
{
    return {e.dim(), conjugate_terms(e.terms(), e.registry()), e.registry()};
}

HermitianExpr wirtinger(const HermitianExpr& e, int j, Wirtinger kind)
{
    if (j < 0 || j >= e.dim())
        throw PreconditionError("wirtinger: variable index out of range");
    const auto jj = static_cast<std::size_t>(j);
    const Registry& reg = e.registry();
    const bool holo = kind == Wirtinger::holo;

    std::map<std::string, TermMap> base_derivatives;
    for (const auto& [id, base] : reg.bases) {
        TermMap d = holomorphic_derivative(base.poly, j);
        if (!holo)
            d = conjugate_terms(d, reg);
        base_derivatives.emplace(id, std::move(d));
    }

    TermMap out;
    for (const auto& [m, c] : e.terms()) {
        const int power = holo ? m.alpha[jj] : m.beta[jj];
        if (power > 0) {
            Monomial d = m;
            (holo ? d.alpha : d.beta)[jj] -= 1;
            accumulate(out, d, c * GaussianRational(power));
        }
        for (const auto& [id, r] : m.radicals) {
            const int quarters = holo ? r.holo : r.anti;
            const TermMap& db = base_derivatives.at(id);
            if (quarters == 0 || db.empty())
                continue;
            Monomial lowered = m;
            for (auto& [rid, re] : lowered.radicals)
                if (rid == id)
                    (holo ? re.holo : re.anti) -= kQuarters;
            normalize_monomial(lowered, reg);
            TermMap head;
            head.emplace(lowered, c * GaussianRational(mpq_class(quarters, kQuarters)));
            out = term_sum(out, term_product(head, db, reg));
        }
    }
    return {e.dim(), std::move(out), reg};
}

Cleared clear_denominators(const HermitianExpr& e)
{
    ClearedTerms cleared = clear_terms(e.terms(), e.registry(), e.dim(), false);
    HermitianExpr multiplier = HermitianExpr::constant(e.dim(), 1);
    for (const auto& [id, s] : cleared.shifts) {
        const BaseFactor& base = e.registry().bases.at(id);
        multiplier = mul(multiplier, HermitianExpr::radical(e.dim(), base, 2 * s, base.real_positive ? 0 : 2 * s));
    }
    return {HermitianExpr(e.dim(), std::move(cleared.numerator), e.registry()), multiplier};
}

bool is_identically_zero(const HermitianExpr& e)
{
    if (e.is_zero())
        return true;
    return clear_terms(e.terms(), e.registry(), e.dim(), true).numerator.empty();
}

bool equivalent(const HermitianExpr& a, const HermitianExpr& b) { return is_identically_zero(sub(a, b)); }

bool is_real(const HermitianExpr& e) { return equivalent(e, conjugate(e)); }

HermitianExpr specialize(const HermitianExpr& e, const std::map<std::string, GaussianRational>& values)
{
    Registry out_reg;
    TermMap terms = specialize_terms(e.terms(), e.registry(), e.dim(), values, out_reg);
    return {e.dim(), std::move(terms), std::move(out_reg)};
}

LinearSubstitution LinearSubstitution::identity(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return signed_permutation(perm, std::vector<int>(static_cast<std::size_t>(n), 1));
}

LinearSubstitution LinearSubstitution::signed_permutation(const std::vector<int>& perm, const std::vector<int>& signs)
{
    const int n = static_cast<int>(perm.size());
    if (signs.size() != perm.size())
        throw DimensionMismatch("signed_permutation: sign vector length differs");
    LinearSubstitution s;
    s.n = n;
    s.entries.assign(perm.size(), std::vector<HermitianExpr>(perm.size(), HermitianExpr(n)));
    for (int j = 0; j < n; ++j) {
        const int src = perm[static_cast<std::size_t>(j)];
        if (src < 0 || src >= n)
            throw PreconditionError("signed_permutation: index out of range");
        s.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(src)] =
            HermitianExpr::constant(n, signs[static_cast<std::size_t>(j)]);
    }
    return s;
}

namespace {

mpq_class exact_rational(double x)
{
    if (!std::isfinite(x))
        throw PreconditionError("LinearSubstitution::from_complex: non-finite entry");
    // Accept only values with a small denominator so that rounding noise is
    // not silently promoted to an exact coefficient.
    constexpr long kMaxDen = 1L << 20;
    for (long den = 1; den <= kMaxDen; den *= 2) {
        const double scaled = x * static_cast<double>(den);
        if (scaled == std::floor(scaled) && std::abs(scaled) < 9.0e15) {
            mpq_class q(static_cast<long>(scaled), den);
            q.canonicalize();
            return q;
        }
    }
    throw PreconditionError("LinearSubstitution::from_complex: entry not exactly representable");
}

} // namespace

LinearSubstitution LinearSubstitution::from_complex(const Eigen::MatrixXcd& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("LinearSubstitution::from_complex: matrix must be square");
    const int n = static_cast<int>(m.rows());
    LinearSubstitution s;
    s.n = n;
    s.entries.assign(static_cast<std::size_t>(n), std::vector<HermitianExpr>(static_cast<std::size_t>(n), HermitianExpr(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            s.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = HermitianExpr::constant(
                n, GaussianRational(exact_rational(m(j, k).real()), exact_rational(m(j, k).imag())));
    return s;
}

HermitianExpr substitute_linear(const HermitianExpr& e, const LinearSubstitution& m, const std::string& tag)
{
    if (m.n != e.dim())
        throw DimensionMismatch("substitute_linear: matrix size differs from expression dimension");
    Registry out_reg;
    std::vector<HermitianExpr> images;
    for (int j = 0; j < m.n; ++j) {
        HermitianExpr image(m.n);
        for (int k = 0; k < m.n; ++k) {
            const HermitianExpr& entry = m.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            for (const auto& [mono, c] : entry.terms())
                if (!mono.radicals.empty() || std::accumulate(mono.alpha.begin(), mono.alpha.end(), 0) != 0 ||
                    std::accumulate(mono.beta.begin(), mono.beta.end(), 0) != 0)
                    throw PreconditionError("substitute_linear: entries must be constants or parameter monomials");
            image = add(image, mul(entry, HermitianExpr::z(m.n, k)));
        }
        images.push_back(image);
    }
    std::vector<TermMap> image_terms;
    for (const auto& img : images) {
        auto renames = merge_registry(out_reg, img.registry());
        image_terms.push_back(rename_bases(img.terms(), renames, out_reg));
    }
    TermMap out = compose(e.terms(), e.registry(), e.dim(), image_terms, out_reg, tag);
    return {e.dim(), std::move(out), std::move(out_reg)};
}

GaussianRational evaluate_exact(const HermitianExpr& e, const std::vector<GaussianRational>& point,
                                const std::map<std::string, GaussianRational>& params)
{
    if (point.size() != static_cast<std::size_t>(e.dim()))
        throw DimensionMismatch("evaluate_exact: point dimension differs from expression dimension");
    for (const auto& [name, kind] : e.registry().params)
        if (params.count(name) == 0)
            throw UnassignedParameter("evaluate_exact: parameter '" + name + "' has no value");

    std::map<std::string, GaussianRational> base_values;
    for (const auto& [id, base] : e.registry().bases) {
        HermitianExpr poly(e.dim(), base.poly, Registry{{}, base.param_kinds});
        base_values.emplace(id, evaluate_exact(poly, point, params));
    }

    GaussianRational total;
    for (const auto& [m, c] : e.terms()) {
        GaussianRational v = c;
        for (std::size_t k = 0; k < point.size(); ++k) {
            if (m.alpha[k] != 0)
                v *= pow(point[k], m.alpha[k]);
            if (m.beta[k] != 0)
                v *= pow(point[k].conj(), m.beta[k]);
        }
        for (const auto& [atom, exp] : m.params) {
            const GaussianRational& p = params.at(atom.name);
            v *= pow(atom.conjugated ? p.conj() : p, exp);
        }
        for (const auto& [id, r] : m.radicals) {
            if (r.holo % kQuarters != 0 || r.anti % kQuarters != 0)
                throw PairingError("evaluate_exact: base '" + id + "' carries a fractional power");
            const GaussianRational& b = base_values.at(id);
            if (b.is_zero() && (r.holo < 0 || r.anti < 0))
                throw BranchCutError("evaluate_exact: pole of base '" + id + "'");
            v *= pow(b, r.holo / kQuarters) * pow(b.conj(), r.anti / kQuarters);
        }
        total += v;
    }
    return total;
}

} // namespace levilab
