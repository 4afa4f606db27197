#include "levilab/detail/term_algebra.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "levilab/errors.hpp"

namespace levilab::detail {

namespace {

ParamKind kind_of(const Registry& reg, const std::string& name)
{
    auto it = reg.params.find(name);
    if (it == reg.params.end())
        throw Error("unregistered parameter '" + name + "'");
    return it->second;
}

bool is_real_positive(const Registry& reg, const std::string& id)
{
    auto it = reg.bases.find(id);
    if (it == reg.bases.end())
        throw Error("unregistered base factor '" + id + "'");
    return it->second.real_positive;
}

// floor division for possibly negative numerators
int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::string format_exponent(int quarters)
{
    if (quarters % kQuarters == 0)
        return std::to_string(quarters / kQuarters);
    if (quarters % 2 == 0)
        return "(" + std::to_string(quarters / 2) + "/2)";
    return "(" + std::to_string(quarters) + "/4)";
}

} // namespace

Monomial unit_monomial(int n)
{
    Monomial m;
    m.alpha.assign(static_cast<std::size_t>(n), 0);
    m.beta.assign(static_cast<std::size_t>(n), 0);
    return m;
}

void normalize_monomial(Monomial& m, const Registry& reg)
{
    std::map<ParamAtom, int> params;
    for (auto& [atom, exp] : m.params) {
        ParamAtom key = atom;
        int e = exp;
        switch (kind_of(reg, atom.name)) {
        case ParamKind::complex:
            break;
        case ParamKind::real:
            key.conjugated = false;
            break;
        case ParamKind::unimodular:
            if (key.conjugated)
                e = -e;
            key.conjugated = false;
            break;
        }
        params[key] += e;
    }
    m.params.clear();
    for (auto& [atom, exp] : params)
        if (exp != 0)
            m.params.emplace_back(atom, exp);

    std::map<std::string, RadicalExponent> radicals;
    for (auto& [id, e] : m.radicals) {
        auto& slot = radicals[id];
        slot.holo += e.holo;
        slot.anti += e.anti;
    }
    m.radicals.clear();
    for (auto& [id, e] : radicals) {
        if (is_real_positive(reg, id)) {
            e.holo += e.anti;
            e.anti = 0;
        }
        if (e.holo != 0 || e.anti != 0)
            m.radicals.emplace_back(id, e);
    }
}

Monomial monomial_product(const Monomial& a, const Monomial& b, const Registry& reg)
{
    Monomial out = a;
    for (std::size_t k = 0; k < out.alpha.size(); ++k) {
        out.alpha[k] += b.alpha[k];
        out.beta[k] += b.beta[k];
    }
    out.params.insert(out.params.end(), b.params.begin(), b.params.end());
    out.radicals.insert(out.radicals.end(), b.radicals.begin(), b.radicals.end());
    normalize_monomial(out, reg);
    return out;
}

void accumulate(TermMap& into, const Monomial& m, const GaussianRational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            into.erase(it);
    }
}

TermMap term_sum(const TermMap& a, const TermMap& b)
{
    TermMap out = a;
    for (const auto& [m, c] : b)
        accumulate(out, m, c);
    return out;
}

TermMap term_product(const TermMap& a, const TermMap& b, const Registry& reg)
{
    TermMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            accumulate(out, monomial_product(ma, mb, reg), ca * cb);
    return out;
}

TermMap term_power(const TermMap& a, int k, int n, const Registry& reg)
{
    if (k < 0)
        throw PreconditionError("term_power: negative exponent");
    TermMap result;
    result.emplace(unit_monomial(n), GaussianRational(1));
    TermMap square = a;
    for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
        if (e & 1U)
            result = term_product(result, square, reg);
        if (e > 1)
            square = term_product(square, square, reg);
    }
    return result;
}

TermMap conjugate_terms(const TermMap& a, const Registry& reg)
{
    TermMap out;
    for (const auto& [m, c] : a) {
        Monomial cm;
        cm.alpha = m.beta;
        cm.beta = m.alpha;
        for (const auto& [atom, exp] : m.params) {
            switch (kind_of(reg, atom.name)) {
            case ParamKind::complex:
                cm.params.emplace_back(ParamAtom{atom.name, !atom.conjugated}, exp);
                break;
            case ParamKind::real:
                cm.params.emplace_back(atom, exp);
                break;
            case ParamKind::unimodular:
                cm.params.emplace_back(atom, -exp);
                break;
            }
        }
        for (const auto& [id, e] : m.radicals)
            cm.radicals.emplace_back(id, RadicalExponent{e.anti, e.holo});
        normalize_monomial(cm, reg);
        accumulate(out, cm, c.conj());
    }
    return out;
}

TermMap scale_terms(const TermMap& a, const GaussianRational& c)
{
    TermMap out;
    for (const auto& [m, v] : a)
        accumulate(out, m, v * c);
    return out;
}

namespace {

void merge_params(Registry& into, const std::map<std::string, ParamKind>& params)
{
    for (const auto& [name, kind] : params) {
        auto [it, inserted] = into.params.emplace(name, kind);
        if (!inserted && it->second != kind)
            throw Error("parameter '" + name + "' registered with conflicting kinds");
    }
}

} // namespace

std::string register_base(Registry& reg, const BaseFactor& base)
{
    merge_params(reg, base.param_kinds);
    for (const auto& [id, existing] : reg.bases)
        if (existing.same_content(base))
            return id;
    std::string id = base.id;
    for (int suffix = 2; reg.bases.count(id) != 0; ++suffix)
        id = base.id + "#" + std::to_string(suffix);
    BaseFactor stored = base;
    stored.id = id;
    reg.bases.emplace(id, std::move(stored));
    return id;
}

std::map<std::string, std::string> merge_registry(Registry& into, const Registry& from)
{
    merge_params(into, from.params);
    std::map<std::string, std::string> renames;
    for (const auto& [id, base] : from.bases) {
        std::string used = register_base(into, base);
        if (used != id)
            renames.emplace(id, used);
    }
    return renames;
}

TermMap rename_bases(const TermMap& terms, const std::map<std::string, std::string>& renames, const Registry& reg)
{
    if (renames.empty())
        return terms;
    TermMap out;
    for (const auto& [m, c] : terms) {
        Monomial r = m;
        for (auto& [id, e] : r.radicals) {
            auto it = renames.find(id);
            if (it != renames.end())
                id = it->second;
        }
        normalize_monomial(r, reg);
        accumulate(out, r, c);
    }
    return out;
}

void prune_registry(Registry& reg, const TermMap& terms)
{
    std::set<std::string> used_bases;
    std::set<std::string> used_params;
    for (const auto& [m, c] : terms) {
        for (const auto& [id, e] : m.radicals)
            used_bases.insert(id);
        for (const auto& [atom, e] : m.params)
            used_params.insert(atom.name);
    }
    for (auto it = reg.bases.begin(); it != reg.bases.end();) {
        if (used_bases.count(it->first) == 0) {
            it = reg.bases.erase(it);
        } else {
            for (const auto& [name, kind] : it->second.param_kinds)
                used_params.insert(name);
            ++it;
        }
    }
    for (auto it = reg.params.begin(); it != reg.params.end();)
        it = used_params.count(it->first) == 0 ? reg.params.erase(it) : std::next(it);
}

bool has_radicals(const TermMap& terms)
{
    return std::any_of(terms.begin(), terms.end(), [](const auto& t) { return !t.first.radicals.empty(); });
}

TermMap holomorphic_derivative(const TermMap& poly, int j)
{
    TermMap out;
    for (const auto& [m, c] : poly) {
        const int a = m.alpha[static_cast<std::size_t>(j)];
        if (a == 0)
            continue;
        Monomial d = m;
        d.alpha[static_cast<std::size_t>(j)] -= 1;
        accumulate(out, d, c * GaussianRational(a));
    }
    return out;
}

ClearedTerms clear_terms(const TermMap& terms, const Registry& reg, int n, bool keep_fractional)
{
    ClearedTerms result;
    std::map<std::string, RadicalExponent> minima;
    for (const auto& [id, base] : reg.bases)
        minima[id] = {0, 0};
    for (const auto& [m, c] : terms) {
        for (const auto& [id, e] : m.radicals) {
            auto& slot = minima[id];
            slot.holo = std::min(slot.holo, e.holo);
            slot.anti = std::min(slot.anti, e.anti);
        }
    }
    for (const auto& [id, lo] : minima) {
        const int need = std::max(-floor_div(lo.holo, kQuarters), -floor_div(lo.anti, kQuarters));
        if (need > 0)
            result.shifts[id] = need;
    }

    std::map<std::tuple<std::string, int, bool>, TermMap> powers;
    auto power_of = [&](const std::string& id, int k, bool conj) -> const TermMap& {
        auto key = std::make_tuple(id, k, conj);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        const BaseFactor& base = reg.bases.at(id);
        TermMap poly = conj ? conjugate_terms(base.poly, reg) : base.poly;
        return powers.emplace(key, term_power(poly, k, n, reg)).first->second;
    };

    for (const auto& [m, c] : terms) {
        std::map<std::string, RadicalExponent> exps;
        for (const auto& [id, s] : result.shifts) {
            const bool rp = reg.bases.at(id).real_positive;
            exps[id] = {kQuarters * s, rp ? 0 : kQuarters * s};
        }
        for (const auto& [id, e] : m.radicals) {
            exps[id].holo += e.holo;
            exps[id].anti += e.anti;
        }
        Monomial stripped = m;
        stripped.radicals.clear();
        TermMap acc;
        acc.emplace(stripped, c);
        for (const auto& [id, e] : exps) {
            const int kh = floor_div(e.holo, kQuarters);
            const int ka = floor_div(e.anti, kQuarters);
            const RadicalExponent rest{e.holo - kQuarters * kh, e.anti - kQuarters * ka};
            if (!keep_fractional && (rest.holo != 0 || rest.anti != 0))
                throw PairingError("clear_denominators: fractional power of base '" + id + "' remains");
            if (kh > 0)
                acc = term_product(acc, power_of(id, kh, false), reg);
            if (ka > 0)
                acc = term_product(acc, power_of(id, ka, true), reg);
            if (rest.holo != 0 || rest.anti != 0) {
                Monomial r = unit_monomial(n);
                r.radicals.emplace_back(id, rest);
                TermMap factor;
                factor.emplace(r, GaussianRational(1));
                acc = term_product(acc, factor, reg);
            }
        }
        result.numerator = term_sum(result.numerator, acc);
    }
    return result;
}

TermMap compose(const TermMap& src, const Registry& src_reg, int n_in, const std::vector<TermMap>& images,
                Registry& out_reg, const std::string& tag)
{
    merge_params(out_reg, src_reg.params);
    const bool images_polynomial =
        std::none_of(images.begin(), images.end(), [](const TermMap& t) { return has_radicals(t); });

    std::map<std::string, std::string> base_ids;
    for (const auto& [id, base] : src_reg.bases) {
        bool used = std::any_of(src.begin(), src.end(), [&](const auto& t) {
            return std::any_of(t.first.radicals.begin(), t.first.radicals.end(),
                               [&](const auto& r) { return r.first == id; });
        });
        if (!used)
            continue;
        if (!images_polynomial)
            throw PairingError("compose: base factor '" + id + "' cannot be composed with a map carrying radicals");
        BaseFactor composed = base;
        composed.poly = compose(base.poly, src_reg, n_in, images, out_reg, tag);
        if (composed.poly.empty())
            throw PreconditionError("compose: base factor '" + id + "' vanishes identically after substitution");
        const bool unchanged = composed.poly == base.poly;
        composed.id = unchanged ? id : id + "o" + tag;
        composed.param_kinds.clear();
        for (const auto& [pm, pc] : composed.poly)
            for (const auto& [atom, e] : pm.params)
                composed.param_kinds[atom.name] = out_reg.params.at(atom.name);
        base_ids[id] = register_base(out_reg, composed);
    }

    std::map<std::tuple<std::size_t, int, bool>, TermMap> powers;
    std::vector<TermMap> conj_images;
    for (const auto& img : images)
        conj_images.push_back(conjugate_terms(img, out_reg));
    auto power_of = [&](std::size_t j, int k, bool conj) -> const TermMap& {
        auto key = std::make_tuple(j, k, conj);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        return powers.emplace(key, term_power(conj ? conj_images[j] : images[j], k, n_in, out_reg))
            .first->second;
    };

    TermMap out;
    for (const auto& [m, c] : src) {
        Monomial head = unit_monomial(n_in);
        head.params = m.params;
        for (const auto& [id, e] : m.radicals)
            head.radicals.emplace_back(base_ids.at(id), e);
        normalize_monomial(head, out_reg);
        TermMap acc;
        acc.emplace(head, c);
        for (std::size_t j = 0; j < m.alpha.size(); ++j) {
            if (m.alpha[j] > 0)
                acc = term_product(acc, power_of(j, m.alpha[j], false), out_reg);
            if (m.beta[j] > 0)
                acc = term_product(acc, power_of(j, m.beta[j], true), out_reg);
        }
        out = term_sum(out, acc);
    }
    return out;
}

namespace {

std::string assignment_tag(const BaseFactor& base, const std::map<std::string, GaussianRational>& values)
{
    std::string tag;
    for (const auto& [name, kind] : base.param_kinds) {
        auto it = values.find(name);
        if (it == values.end())
            continue;
        if (!tag.empty())
            tag += ",";
        tag += name + "=" + it->second.to_string();
    }
    return tag;
}

bool is_constant_poly(const TermMap& poly)
{
    return poly.size() == 1 && std::all_of(poly.begin()->first.alpha.begin(), poly.begin()->first.alpha.end(),
                                           [](int a) { return a == 0; }) &&
           poly.begin()->first.params.empty();
}

} // namespace

TermMap specialize_terms(const TermMap& terms, const Registry& reg, int n,
                         const std::map<std::string, GaussianRational>& values, Registry& out_reg)
{
    for (const auto& [name, value] : values) {
        auto it = reg.params.find(name);
        if (it == reg.params.end())
            continue;
        if (it->second == ParamKind::real && !value.is_real())
            throw PreconditionError("specialize: real parameter '" + name + "' given non-real value");
        if (it->second == ParamKind::unimodular && value.norm2() != 1)
            throw PreconditionError("specialize: unimodular parameter '" + name + "' given value off the circle");
    }

    auto specialize_monomial = [&](const Monomial& m, GaussianRational& coeff) {
        Monomial out = m;
        out.params.clear();
        for (const auto& [atom, exp] : m.params) {
            auto it = values.find(atom.name);
            if (it == values.end()) {
                out.params.emplace_back(atom, exp);
                continue;
            }
            const GaussianRational v = atom.conjugated ? it->second.conj() : it->second;
            coeff *= pow(v, exp);
        }
        return out;
    };

    for (const auto& [name, kind] : reg.params)
        if (values.count(name) == 0)
            out_reg.params.emplace(name, kind);

    // base id -> new id, or "" when the base collapsed to the constant 1
    std::map<std::string, std::string> base_ids;
    for (const auto& [id, base] : reg.bases) {
        TermMap poly;
        for (const auto& [m, c] : base.poly) {
            GaussianRational coeff = c;
            Monomial sm = specialize_monomial(m, coeff);
            accumulate(poly, sm, coeff);
        }
        if (poly.empty())
            throw PreconditionError("specialize: base factor '" + id + "' vanishes at the given parameters");
        if (poly == base.poly) {
            base_ids[id] = register_base(out_reg, base);
            continue;
        }
        if (is_constant_poly(poly) && poly.begin()->second == GaussianRational(1)) {
            base_ids[id] = "";
            continue;
        }
        BaseFactor sb = base;
        sb.poly = std::move(poly);
        sb.id = id + "[" + assignment_tag(base, values) + "]";
        for (auto it = sb.param_kinds.begin(); it != sb.param_kinds.end();)
            it = values.count(it->first) != 0 ? sb.param_kinds.erase(it) : std::next(it);
        if (is_constant_poly(sb.poly) && sb.branch == Branch::principal) {
            const GaussianRational& v = sb.poly.begin()->second;
            if (v.is_real() && sgn(v.re()) > 0)
                sb.real_positive = true;
        }
        base_ids[id] = register_base(out_reg, sb);
    }

    TermMap out;
    for (const auto& [m, c] : terms) {
        GaussianRational coeff = c;
        Monomial sm = specialize_monomial(m, coeff);
        sm.radicals.clear();
        for (const auto& [id, e] : m.radicals) {
            const std::string& target = base_ids.at(id);
            if (!target.empty())
                sm.radicals.emplace_back(target, e);
        }
        normalize_monomial(sm, out_reg);
        accumulate(out, sm, coeff);
    }
    (void)n;
    return out;
}

std::string monomial_to_string(const Monomial& m)
{
    std::string out;
    auto append = [&](const std::string& factor) {
        if (!out.empty())
            out += "*";
        out += factor;
    };
    for (std::size_t k = 0; k < m.alpha.size(); ++k) {
        const std::string var = "z" + std::to_string(k + 1);
        if (m.alpha[k] > 0)
            append(m.alpha[k] == 1 ? var : var + "^" + std::to_string(m.alpha[k]));
        if (m.beta[k] > 0)
            append(m.beta[k] == 1 ? "conj(" + var + ")" : "conj(" + var + ")^" + std::to_string(m.beta[k]));
    }
    for (const auto& [atom, exp] : m.params) {
        const std::string sym = atom.conjugated ? "conj(" + atom.name + ")" : atom.name;
        append(exp == 1 ? sym : sym + "^" + std::to_string(exp));
    }
    for (const auto& [id, e] : m.radicals) {
        if (e.holo != 0)
            append("[" + id + "]^" + format_exponent(e.holo));
        if (e.anti != 0)
            append("conj[" + id + "]^" + format_exponent(e.anti));
    }
    return out.empty() ? "1" : out;
}

} // namespace levilab::detail
