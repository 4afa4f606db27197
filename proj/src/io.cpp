#include "levilab/io.hpp"

#include <fstream>
#include <sstream>

#include "levilab/errors.hpp"

namespace levilab {

namespace {

Json integer_to_json(const mpz_class& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

mpz_class integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    throw Error("json: integer expected");
}

mpq_class rational_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw Error("json: rational must be [num, den]");
    mpq_class q(integer_from_json(j[0]), integer_from_json(j[1]));
    if (q.get_den() == 0)
        throw Error("json: zero denominator");
    q.canonicalize();
    return q;
}

Json rational_to_json(const mpq_class& q)
{
    return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

std::string kind_name(ParamKind k)
{
    switch (k) {
    case ParamKind::complex:
        return "complex";
    case ParamKind::real:
        return "real";
    case ParamKind::unimodular:
        return "unimodular";
    }
    return "complex";
}

ParamKind kind_from(const std::string& s)
{
    if (s == "complex")
        return ParamKind::complex;
    if (s == "real")
        return ParamKind::real;
    if (s == "unimodular")
        return ParamKind::unimodular;
    throw Error("json: unknown parameter kind '" + s + "'");
}

std::string branch_name(Branch b)
{
    return b == Branch::principal ? "principal" : "positive_axis_cut";
}

Branch branch_from(const std::string& s)
{
    if (s == "principal")
        return Branch::principal;
    if (s == "positive_axis_cut")
        return Branch::positive_axis_cut;
    throw Error("json: unknown branch '" + s + "'");
}

std::vector<int> int_vector(const Json& j, int n, const char* what)
{
    auto v = j.get<std::vector<int>>();
    if (static_cast<int>(v.size()) != n)
        throw DimensionMismatch(std::string("json: ") + what + " has the wrong length");
    return v;
}

Json params_to_json(const Monomial& m)
{
    Json out = Json::array();
    for (const auto& [atom, e] : m.params)
        out.push_back({{"name", atom.name}, {"conj", atom.conjugated}, {"exp", e}});
    return out;
}

void params_from_json(const Json& t, Monomial& m)
{
    if (!t.contains("params"))
        return;
    for (const auto& p : t.at("params"))
        m.params.emplace_back(ParamAtom{p.at("name").get<std::string>(), p.value("conj", false)}, p.at("exp").get<int>());
}

Json registry_params_to_json(const Registry& reg)
{
    Json out = Json::array();
    for (const auto& [name, kind] : reg.params)
        out.push_back({{"name", name}, {"kind", kind_name(kind)}});
    return out;
}

Json bases_to_json(const Registry& reg)
{
    Json out = Json::array();
    for (const auto& [id, base] : reg.bases) {
        Json poly = Json::array();
        for (const auto& [m, c] : base.poly) {
            Json t{{"coeff", to_json(c)}, {"alpha", m.alpha}};
            if (!m.params.empty())
                t["params"] = params_to_json(m);
            poly.push_back(std::move(t));
        }
        out.push_back({{"id", id},
                       {"branch", branch_name(base.branch)},
                       {"real_positive", base.real_positive},
                       {"poly", std::move(poly)}});
    }
    return out;
}

Registry registry_from_json(const Json& j, int n)
{
    Registry reg;
    if (j.contains("params"))
        for (const auto& p : j.at("params"))
            reg.params[p.at("name").get<std::string>()] = kind_from(p.at("kind").get<std::string>());
    if (j.contains("bases")) {
        for (const auto& b : j.at("bases")) {
            BaseFactor base;
            base.id = b.at("id").get<std::string>();
            base.branch = branch_from(b.value("branch", std::string("positive_axis_cut")));
            base.real_positive = b.value("real_positive", false);
            for (const auto& t : b.at("poly")) {
                Monomial m;
                m.alpha = int_vector(t.at("alpha"), n, "alpha");
                m.beta.assign(static_cast<std::size_t>(n), 0);
                params_from_json(t, m);
                for (const auto& [atom, e] : m.params) {
                    auto it = reg.params.find(atom.name);
                    if (it == reg.params.end())
                        throw Error("json: base '" + base.id + "' uses undeclared parameter '" + atom.name + "'");
                    base.param_kinds[atom.name] = it->second;
                }
                base.poly[m] += gaussian_from_json(t.at("coeff"));
            }
            reg.bases[base.id] = std::move(base);
        }
    }
    return reg;
}

Json terms_to_json(const TermMap& terms, bool quarters)
{
    Json out = Json::array();
    for (const auto& [m, c] : terms) {
        Json t{{"coeff", to_json(c)}, {"alpha", m.alpha}};
        if (!quarters)
            t["beta"] = m.beta;
        if (!m.params.empty())
            t["params"] = params_to_json(m);
        if (!m.radicals.empty()) {
            Json rads = Json::array();
            for (const auto& [id, r] : m.radicals) {
                if (quarters)
                    rads.push_back({{"base", id}, {"p4", r.holo}, {"q4", r.anti}});
                else
                    rads.push_back({{"base", id}, {"p2", r.holo / 2}, {"q2", r.anti / 2}});
            }
            t["radicals"] = std::move(rads);
        }
        out.push_back(std::move(t));
    }
    return out;
}

TermMap terms_from_json(const Json& j, int n, bool quarters)
{
    TermMap out;
    for (const auto& t : j) {
        Monomial m;
        m.alpha = int_vector(t.at("alpha"), n, "alpha");
        m.beta = t.contains("beta") ? int_vector(t.at("beta"), n, "beta") : std::vector<int>(static_cast<std::size_t>(n), 0);
        params_from_json(t, m);
        if (t.contains("radicals")) {
            for (const auto& r : t.at("radicals")) {
                RadicalExponent e = quarters ? RadicalExponent{r.at("p4").get<int>(), r.at("q4").get<int>()}
                                             : RadicalExponent{2 * r.at("p2").get<int>(), 2 * r.at("q2").get<int>()};
                m.radicals.emplace_back(r.at("base").get<std::string>(), e);
            }
        }
        const GaussianRational c = gaussian_from_json(t.at("coeff"));
        if (!c.is_zero())
            out[m] += c;
    }
    return out;
}

} // namespace

Json to_json(const GaussianRational& c)
{
    return {{"re", rational_to_json(c.re())}, {"im", rational_to_json(c.im())}};
}

GaussianRational gaussian_from_json(const Json& j)
{
    if (j.is_number_integer())
        return GaussianRational(mpq_class(integer_from_json(j)));
    if (j.is_string())
        return parse_gaussian(j.get<std::string>());
    const mpq_class re = j.contains("re") ? rational_from_json(j.at("re")) : mpq_class(0);
    const mpq_class im = j.contains("im") ? rational_from_json(j.at("im")) : mpq_class(0);
    return {re, im};
}

Json to_json(const Point& p)
{
    Json out = Json::array();
    for (Eigen::Index k = 0; k < p.size(); ++k)
        out.push_back(Json::array({p[k].real(), p[k].imag()}));
    return out;
}

Point point_from_json(const Json& j)
{
    Point p(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& c = j[k];
        if (c.is_number())
            p[static_cast<Eigen::Index>(k)] = c.get<double>();
        else
            p[static_cast<Eigen::Index>(k)] = {c.at(0).get<double>(), c.at(1).get<double>()};
    }
    return p;
}

Json to_json(const HermitianExpr& e)
{
    return {{"n", e.dim()},
            {"params", registry_params_to_json(e.registry())},
            {"bases", bases_to_json(e.registry())},
            {"terms", terms_to_json(e.terms(), false)}};
}

HermitianExpr expr_from_json(const Json& j)
{
    const int n = j.at("n").get<int>();
    if (n < 1)
        throw PreconditionError("json: n must be positive");
    Registry reg = registry_from_json(j, n);
    TermMap terms = terms_from_json(j.at("terms"), n, false);
    return {n, std::move(terms), std::move(reg)};
}

Json to_json(const RadicalMap& f)
{
    Json comps = Json::array();
    for (const auto& c : f.components())
        comps.push_back(terms_to_json(c, true));
    return {{"name", f.name()},
            {"n_in", f.n_in()},
            {"param_range", f.param_range()},
            {"params", registry_params_to_json(f.registry())},
            {"bases", bases_to_json(f.registry())},
            {"components", std::move(comps)}};
}

RadicalMap map_from_json(const Json& j)
{
    const int n = j.at("n_in").get<int>();
    Registry reg = registry_from_json(j, n);
    std::vector<TermMap> comps;
    for (const auto& c : j.at("components"))
        comps.push_back(terms_from_json(c, n, true));
    return {j.value("name", std::string("map")), n, std::move(comps), std::move(reg), j.value("param_range", std::string())};
}

Json to_json(const DomainSpec& d)
{
    Json out{{"name", d.name()}};
    Json e = to_json(d.rho());
    for (auto& [k, v] : e.items())
        out[k] = v;
    out["interior_anchor"] = to_json(d.interior_anchors().front());
    if (d.interior_anchors().size() > 1) {
        Json extra = Json::array();
        for (std::size_t i = 1; i < d.interior_anchors().size(); ++i)
            extra.push_back(to_json(d.interior_anchors()[i]));
        out["extra_anchors"] = std::move(extra);
    }
    Json bad = Json::array();
    for (const auto& p : d.known_bad_points())
        bad.push_back(to_json(p));
    out["known_bad_points"] = std::move(bad);
    out["bad_point_radius"] = d.bad_point_radius();
    return out;
}

DomainSpec domain_from_json(const Json& j)
{
    std::vector<Point> anchors{point_from_json(j.at("interior_anchor"))};
    if (j.contains("extra_anchors"))
        for (const auto& a : j.at("extra_anchors"))
            anchors.push_back(point_from_json(a));
    std::vector<Point> bad;
    if (j.contains("known_bad_points"))
        for (const auto& b : j.at("known_bad_points"))
            bad.push_back(point_from_json(b));
    return {j.value("name", std::string("domain")), expr_from_json(j), std::move(anchors), std::move(bad),
            j.value("bad_point_radius", 1e-3)};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("cannot parse '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

} // namespace levilab
