#pragma once

// Textual literals shared by the CLI and the report writers.
//
//   groups    zlex:2   zp:2   quad:2
//   elements  lex(1,-5)   q(3/4)   quad(1,1)   3   -1/2   (bare rationals
//             for rank-one groups)   irr(a,b,d) = a + b*sqrt(d), bounds only
//   cuts      whole   ge E   gt E   ge(E)   frontier lex(1)   frontier-gt lex(1/2)
//   series    t(q(1/2))   x[q(3/4)]   u   2   with + - * / ^ and parentheses
//
// x[E] is the variable moved by sigma(x) = x + t^E; other identifiers name
// sigma-fixed variables. Every formatted literal parses back to an equal value.

#include "ramify/cuts.hpp"
#include "ramify/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ramify {

GroupDescriptor parse_group(std::string_view s);
std::string format_group(const GroupDescriptor& g);

AmbientPoint parse_point(const GroupDescriptor& g, std::string_view s);
GroupElement parse_element(const GroupDescriptor& g, std::string_view s);
HullElement parse_hull_element(const GroupDescriptor& g, std::string_view s);
std::string format(const GroupElement& x);
std::string format(const HullElement& x);
std::string format_point(const GroupDescriptor& g, const AmbientPoint& pt);
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view s);

Cut parse_cut(const GroupDescriptor& g, std::string_view s);
HullCut parse_hull_cut(const GroupDescriptor& g, std::string_view s);
std::string format(const Cut& c);
std::string format(const HullCut& c);

/// Parses a series expression, registering variables in k.
FieldElement parse_series(CoeffField& k, std::string_view s);
std::string format(const Polynomial& f, const std::vector<std::string>& names = {});
std::string format(const CoeffFraction& f, const std::vector<std::string>& names = {});
std::string format(const SeriesElement& f, const std::vector<std::string>& names = {});
std::string format(const FieldElement& f, const std::vector<std::string>& names = {});
std::vector<std::string> variable_names(const CoeffField& k);

} // namespace ramify
