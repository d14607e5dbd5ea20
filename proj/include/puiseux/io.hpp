#pragma once

#include <json.hpp>

#include <string_view>

#include "puiseux/branch.hpp"
#include "puiseux/weierstrass.hpp"

namespace puiseux {

Rational parse_rational(std::string_view text);

/// Polynomial expression grammar: rationals `p` / `p/q`, variable names
/// (A<k>, C<i>_<j>, X, Y, T, z), operators + - * ^ and parentheses.
/// Errors report the 1-based column.
std::pair<MultiPoly<Rational>, VarRegistry::Ptr> parse_poly_auto(std::string_view text);

/// Parse and transport into the given registry (unknown variables error out).
MultiPoly<Rational> parse_poly(std::string_view text, const VarRegistry::Ptr& reg);

/// `t^3; 1*t^4 + 2/3*t^7` — n before the semicolon, then a polynomial in t.
/// Default truncation is the largest support index.
PuiseuxParam parse_parametrisation(std::string_view text, std::optional<long> truncation = {});

nlohmann::json poly_to_json(const MultiPoly<Rational>& p);
MultiPoly<Rational> poly_from_json(const nlohmann::json& j);

nlohmann::json param_to_json(const PuiseuxParam& p);
PuiseuxParam param_from_json(const nlohmann::json& j);

nlohmann::json yseries_to_json(const YSeriesPoly<Rational>& f);
YSeriesPoly<Rational> yseries_from_json(const nlohmann::json& j);

std::string yseries_to_text(const YSeriesPoly<Rational>& f, char xtag = 'X');

} // namespace puiseux
