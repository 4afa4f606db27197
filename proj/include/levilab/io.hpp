#pragma once

#include <string>

#include <json.hpp>

#include "levilab/geometry.hpp"
#include "levilab/hermitian_expr.hpp"
#include "levilab/maps.hpp"

namespace levilab {

using Json = nlohmann::ordered_json;

/// {"re": [num, den], "im": [num, den]}; integers beyond int64 are strings.
Json to_json(const GaussianRational& c);
GaussianRational gaussian_from_json(const Json& j);

/// [[re, im], ...] with full double precision.
Json to_json(const Point& p);
Point point_from_json(const Json& j);

/// Expression format: n, params, bases (id, branch, real_positive, poly) and
/// terms with doubled radical exponents p2/q2.
Json to_json(const HermitianExpr& e);
HermitianExpr expr_from_json(const Json& j);

/// Map format: name, n_in, params, param_range, bases and a components array
/// of term lists with quadrupled radical exponents p4/q4.
Json to_json(const RadicalMap& f);
RadicalMap map_from_json(const Json& j);

/// Expression format plus name, interior_anchor, known_bad_points.
Json to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace levilab
