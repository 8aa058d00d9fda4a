#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polylap/bounds.hpp"
#include "polylap/eigen.hpp"
#include "polylap/experiments.hpp"
#include "polylap/fourier.hpp"
#include "polylap/lattice.hpp"

namespace polylap {

/// Owning domain parsed from a description; DomainRef views into it.
using DomainSpec = std::variant<LatticeDomain, AmbientGraph>;

DomainRef domain_ref(const DomainSpec& spec);

/// Parses {"kind":"box"|"ball"|"explicit"|"ambient", ...}. `text` may be the
/// JSON itself (starts with '{') or a path to a file holding it.
DomainSpec parse_domain(const std::string& text);

/// All serializers format floats as %.12e and emit fields in a fixed order, so
/// identical inputs produce byte-identical output.
std::string format_double(double x);

std::string spectrum_to_json(const Spectrum& s);
std::string bounds_to_json(const BoundsReport& rep);
std::string bounds_to_csv(const BoundsReport& rep);
std::string comparison_to_json(const OrderComparison& cmp);
std::string comparison_to_csv(const OrderComparison& cmp);
std::string fourier_check_to_json(const FourierCheck& c);
std::string residual_table_to_json(const ResidualTable& t);
std::string exhaustion_to_json(const ExhaustionResult& r);
std::string exhaustion_to_csv(const ExhaustionResult& r);
std::string ratio_series_to_json(const RatioSeries& r);
std::string ratio_series_to_csv(const RatioSeries& r);

/// Static SVG: axes, one data polyline, one horizontal reference line, labels.
std::string ratio_series_to_svg(const RatioSeries& r);

}  // namespace polylap
